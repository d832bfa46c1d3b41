//! Exact Taylor coefficients for `arcsin x` and friends, and the integer
//! sequences they generate.
//!
//! Series are stored as ordinary coefficients `c_0..c_N`. The exponential
//! generating function view `n!·c_n` is computed on demand and only turned
//! into an [`Integer`] after checking that it is one.
//!
//! The two sequences of interest are the EGF terms of `arcsin x/(1-x)`
//! (OEIS A296726) and `arcsin² x/(2(1-x))` (OEIS A372324). OEIS b-files
//! (`"index value"` per line, `#` comments) can be parsed and diffed against
//! computed terms.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::{double_factorial, factorial, rational, Integer, Rational};

/// Truncated power series `Σ c_n xⁿ`, `n = 0..=degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Rational>,
}

impl EgfSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series has at least the constant term"
        );
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_coeffs(vec![Rational::zero(); degree + 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[xⁿ]`, zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// `n!·[xⁿ]`.
    pub fn egf_term(&self, n: usize) -> Rational {
        self.coeff(n) * rational(factorial(n as u64))
    }

    /// `n!·[xⁿ]` as an integer, or [`Error::NonIntegral`].
    pub fn egf_integer(&self, n: usize) -> Result<Integer> {
        let t = self.egf_term(n);
        if t.is_integer() {
            Ok(t.to_integer())
        } else {
            Err(Error::NonIntegral {
                what: format!("EGF term at n = {n}"),
                value: t.to_string(),
            })
        }
    }

    /// Term-by-term antiderivative with zero constant, truncated to the same degree.
    pub fn integrate(&self) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for (m, c) in self.coeffs.iter().enumerate().take(self.degree()) {
            out[m + 1] = c / rational(m as u64 + 1);
        }
        Self::from_coeffs(out)
    }
}

/// `arcsin x = Σ ((2j-1)!!)²/(2j+1)! · x^{2j+1}` up to degree `degree`.
pub fn arcsin_series(degree: usize) -> EgfSeries {
    odd_series(degree, |j| {
        let df = double_factorial(2 * j - 1).expect("2j - 1 >= -1");
        &df * &df
    })
}

/// `arcsin x/√(1-x²) = Σ ((2j)!!)²/(2j+1)! · x^{2j+1}`.
pub fn arcsin_over_sqrt_series(degree: usize) -> EgfSeries {
    odd_series(degree, |j| {
        let df = double_factorial(2 * j).expect("2j >= 0");
        &df * &df
    })
}

fn odd_series(degree: usize, numerator: impl Fn(i64) -> Integer) -> EgfSeries {
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for n in (1..=degree).step_by(2) {
        let j = (n as i64 - 1) / 2;
        coeffs[n] = Rational::new(numerator(j), factorial(n as u64));
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `arcsin² x / 2`, obtained by integrating [`arcsin_over_sqrt_series`].
pub fn arcsin_squared_half_series(degree: usize) -> EgfSeries {
    arcsin_over_sqrt_series(degree).integrate()
}

/// Multiplies by `1/(1-x) = 1 + x + x² + …`: prefix sums of the coefficients.
pub fn divide_by_one_minus_x(s: &EgfSeries) -> EgfSeries {
    let mut acc = Rational::zero();
    let coeffs = s
        .coeffs
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    EgfSeries::from_coeffs(coeffs)
}

fn integer_terms(series: &EgfSeries) -> Result<Vec<Integer>> {
    (0..=series.degree())
        .map(|n| series.egf_integer(n))
        .collect()
}

/// EGF terms of `arcsin x/(1-x)` for `n = 0..=max_n`.
pub fn a296726_terms(max_n: usize) -> Result<Vec<Integer>> {
    integer_terms(&divide_by_one_minus_x(&arcsin_series(max_n)))
}

/// EGF terms of `arcsin² x/(2(1-x))` for `n = 0..=max_n`.
pub fn a372324_terms(max_n: usize) -> Result<Vec<Integer>> {
    integer_terms(&divide_by_one_minus_x(&arcsin_squared_half_series(max_n)))
}

/// A parsed OEIS b-file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OeisBFile {
    /// `A` number taken from the first comment that mentions one, else empty.
    pub id: String,
    /// `(index, value)` with strictly increasing indices.
    pub entries: Vec<(i64, Integer)>,
}

impl OeisBFile {
    pub fn get(&self, index: i64) -> Option<&Integer> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }
}

fn find_sequence_id(comment: &str) -> Option<String> {
    comment
        .split(|c: char| !c.is_ascii_alphanumeric())
        .find(|w| w.len() == 7 && w.starts_with('A') && w[1..].bytes().all(|b| b.is_ascii_digit()))
        .map(str::to_owned)
}

/// Parses b-file text. Blank lines and lines starting with `#` are skipped.
pub fn parse_bfile(text: &str) -> Result<OeisBFile> {
    let mut bfile = OeisBFile::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |message: String| Error::BFileParse {
            line: lineno + 1,
            message,
        };
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if bfile.id.is_empty() {
                if let Some(id) = find_sequence_id(comment) {
                    bfile.id = id;
                }
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got `{line}`")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index `{index}`")))?;
        let value: Integer = value
            .parse()
            .map_err(|_| err(format!("bad value `{value}`")))?;
        if let Some((prev, _)) = bfile.entries.last() {
            if index <= *prev {
                return Err(err(format!(
                    "index {index} does not increase (previous {prev})"
                )));
            }
        }
        bfile.entries.push((index, value));
    }
    Ok(bfile)
}

/// One disagreement between a b-file and computed terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: Integer,
    /// `None` when the computed list does not reach this index.
    pub got: Option<Integer>,
}

/// Compares every b-file entry against `computed[index]`.
pub fn diff_bfile(b: &OeisBFile, computed: &[Integer]) -> Vec<Mismatch> {
    diff_bfile_where(b, computed, |_| true)
}

/// Like [`diff_bfile`], restricted to indices accepted by `keep`.
pub fn diff_bfile_where(
    b: &OeisBFile,
    computed: &[Integer],
    keep: impl Fn(i64) -> bool,
) -> Vec<Mismatch> {
    b.entries
        .iter()
        .filter(|(i, _)| keep(*i))
        .filter_map(|(index, expected)| {
            let got = usize::try_from(*index).ok().and_then(|i| computed.get(i));
            match got {
                Some(g) if g == expected => None,
                _ => Some(Mismatch {
                    index: *index,
                    expected: expected.clone(),
                    got: got.cloned(),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().copied().map(Integer::from).collect()
    }

    #[test]
    fn arcsin_coefficients() {
        let s = arcsin_series(5);
        assert_eq!(s.degree(), 5);
        assert_eq!(s.coeff(1), ratio(1, 1));
        assert_eq!(s.coeff(3), ratio(1, 6));
        assert_eq!(s.coeff(5), ratio(3, 40));
        for n in [0, 2, 4] {
            assert!(s.coeff(n).is_zero());
        }
        assert_eq!(arcsin_series(0), EgfSeries::zero(0));
        let s9 = arcsin_series(9);
        assert_eq!(s9.egf_term(9), rational(11025));
        assert_eq!(s9.egf_term(7), rational(225));
    }

    #[test]
    fn arcsin_over_sqrt_coefficients() {
        let s = arcsin_over_sqrt_series(7);
        assert_eq!(s.coeff(5), ratio(8, 15));
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(7), ratio(2304, 5040));
        assert_eq!(s.egf_term(3), rational(4));
    }

    #[test]
    fn arcsin_squared_half_coefficients() {
        let s = arcsin_squared_half_series(10);
        assert_eq!(s.coeff(2), ratio(1, 2));
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(4), ratio(1, 6));
        // (8!!)²/10!
        assert_eq!(s.coeff(10), ratio(147456, 3628800));
    }

    #[test]
    fn divide_by_one_minus_x_cases() {
        assert_eq!(
            divide_by_one_minus_x(&EgfSeries::zero(4)),
            EgfSeries::zero(4)
        );
        let mut one = EgfSeries::zero(3);
        one.coeffs[0] = rational(1);
        assert_eq!(
            divide_by_one_minus_x(&one).coeffs(),
            &[rational(1), rational(1), rational(1), rational(1)]
        );
        let d = divide_by_one_minus_x(&arcsin_series(3));
        assert_eq!(d.egf_integer(3).unwrap(), Integer::from(7));
    }

    #[test]
    fn differencing_recovers_input() {
        let s = arcsin_squared_half_series(30);
        let d = divide_by_one_minus_x(&s);
        for n in 0..=30 {
            let back = if n == 0 {
                d.coeff(0)
            } else {
                d.coeff(n) - d.coeff(n - 1)
            };
            assert_eq!(back, s.coeff(n));
        }
    }

    #[test]
    fn sequence_terms() {
        let a = a296726_terms(7).unwrap();
        assert_eq!(
            vec![a[1].clone(), a[3].clone(), a[5].clone(), a[7].clone()],
            ints(&[1, 7, 149, 6483])
        );
        let b = a372324_terms(8).unwrap();
        assert_eq!(
            vec![b[2].clone(), b[4].clone(), b[6].clone(), b[8].clone()],
            ints(&[1, 16, 544, 32768])
        );
        assert!(b[0].is_zero());
    }

    #[test]
    fn non_integral_egf_term_is_an_error() {
        let s = EgfSeries::from_coeffs(vec![ratio(1, 2)]);
        assert!(matches!(s.egf_integer(0), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn parse_bfile_cases() {
        let b = parse_bfile("0 0\n1 1\n2 1\n3 7").unwrap();
        assert_eq!(b.entries.len(), 4);
        assert_eq!(b.get(3), Some(&Integer::from(7)));
        assert_eq!(parse_bfile("").unwrap(), OeisBFile::default());

        let b = parse_bfile("# A296726 (b-file)\n\n# note\n5 149\n-1 3\n").unwrap_err();
        assert_eq!(
            b,
            Error::BFileParse {
                line: 5,
                message: "index -1 does not increase (previous 5)".into()
            }
        );
        let b = parse_bfile("# A296726\n1 1\n").unwrap();
        assert_eq!(b.id, "A296726");

        assert!(matches!(
            parse_bfile("1 1\n2\n"),
            Err(Error::BFileParse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("1 x\n"),
            Err(Error::BFileParse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("1 1 1\n"),
            Err(Error::BFileParse { line: 1, .. })
        ));
    }

    #[test]
    fn diff_reports_injected_mismatch() {
        let b = parse_bfile("0 0\n1 1\n2 2\n3 8").unwrap();
        let computed = a296726_terms(3).unwrap();
        let diff = diff_bfile(&b, &computed);
        assert_eq!(
            diff,
            vec![Mismatch {
                index: 3,
                expected: Integer::from(8),
                got: Some(Integer::from(7))
            }]
        );
        assert!(diff_bfile_where(&b, &computed, |i| i % 2 == 0).is_empty());
        let short = diff_bfile(&b, &computed[..2]);
        assert_eq!(short.len(), 2);
        assert_eq!(short[0].got, None);
    }
}
