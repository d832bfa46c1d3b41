//! Exact limiting areas `A_n`.
//!
//! Three independent routes produce the same [`PiRational`]:
//!
//! * [`area_closed_form`]: binomial sums over the power-reduction harmonics,
//!   one branch per congruence class of `n` (odd, `2 mod 4`, `0 mod 4`);
//! * [`area_recursion`]: `A_n = (n-1)/n · A_{n-2} + c/(n² pi)` with `c = 8`
//!   for odd `n` and `c = 16` for even `n`, seeded by `A_1 = 8/pi`, `A_2 = 4/pi`;
//! * [`area_double_factorial`]: `n!/(n!!)²` times a double-factorial sum.
//!
//! The integer [`oeis_numerator`] is `n!` times the double-factorial sum; it
//! matches every other term of the EGF sequences built in [`crate::egf`].

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::{
    binomial, double_factorial, factorial, ratio, rational, Integer, PiRational, Rational,
};

/// Which formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AreaMethod {
    ClosedForm,
    Recursion,
    DoubleFactorial,
}

impl AreaMethod {
    pub const ALL: [AreaMethod; 3] = [
        AreaMethod::ClosedForm,
        AreaMethod::Recursion,
        AreaMethod::DoubleFactorial,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AreaMethod::ClosedForm => "closed-form",
            AreaMethod::Recursion => "recursion",
            AreaMethod::DoubleFactorial => "double-factorial",
        }
    }
}

impl fmt::Display for AreaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AreaMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AreaMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown area method `{s}`")))
    }
}

fn check_power(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroPower)
    } else {
        Ok(())
    }
}

fn pow2(e: u64) -> Integer {
    Integer::one() << e as usize
}

/// `A_n` from the binomial closed forms.
pub fn area_closed_form(n: u64) -> Result<PiRational> {
    check_power(n)?;
    let sum: Rational = match (n % 2, n % 4) {
        (1, _) => {
            (0..=(n - 1) / 2)
                .map(|j| {
                    let d = n - 2 * j;
                    ratio(binomial(n, j), d * d)
                })
                .sum::<Rational>()
                * ratio(8, pow2(n - 1))
        }
        (0, 2) => {
            (0..=(n - 2) / 4)
                .map(|j| {
                    let d = n / 2 - 2 * j;
                    ratio(binomial(n, 2 * j), d * d)
                })
                .sum::<Rational>()
                * ratio(16, pow2(n))
        }
        (0, 0) => {
            (0..=(n - 4) / 4)
                .map(|j| {
                    let d = n / 2 - (2 * j + 1);
                    ratio(binomial(n, 2 * j + 1), d * d)
                })
                .sum::<Rational>()
                * ratio(16, pow2(n))
        }
        _ => unreachable!("n mod 4 is covered by the three branches"),
    };
    Ok(PiRational::new(sum))
}

/// One recursion step: `A_n` from `A_{n-2}`.
fn recursion_step(n: u64, prev: &PiRational) -> PiRational {
    let shift = if n % 2 == 1 { 8 } else { 16 };
    PiRational::new(prev.coeff() * ratio(n - 1, n) + ratio(shift, n * n))
}

fn recursion_base(n: u64) -> PiRational {
    if n % 2 == 1 {
        PiRational::from_ratio(8, 1)
    } else {
        PiRational::from_ratio(4, 1)
    }
}

/// `A_n` by the two-step recursion from `A_1 = 8/pi` or `A_2 = 4/pi`.
pub fn area_recursion(n: u64) -> Result<PiRational> {
    check_power(n)?;
    let start = 2 - n % 2;
    let mut value = recursion_base(n);
    let mut m = start + 2;
    while m <= n {
        value = recursion_step(m, &value);
        m += 2;
    }
    Ok(value)
}

/// The double-factorial sum without its prefactor.
///
/// Odd `n`: `Σ_{j=0}^{(n-1)/2} ((2j-1)!!/(2j)!!) / (2j+1)`.
/// Even `n`: `Σ_{j=0}^{(n-2)/2} ((2j)!!/(2j+1)!!) / (2j+2)`.
fn double_factorial_sum(n: u64) -> Result<Rational> {
    let mut sum = Rational::zero();
    if n % 2 == 1 {
        for j in 0..=(n as i64 - 1) / 2 {
            let num = double_factorial(2 * j - 1)?;
            let den = double_factorial(2 * j)? * (2 * j + 1);
            sum += Rational::new(num, den);
        }
    } else {
        for j in 0..=(n as i64 - 2) / 2 {
            let num = double_factorial(2 * j)?;
            let den = double_factorial(2 * j + 1)? * (2 * j + 2);
            sum += Rational::new(num, den);
        }
    }
    Ok(sum)
}

/// `A_n` from the double-factorial sums.
pub fn area_double_factorial(n: u64) -> Result<PiRational> {
    check_power(n)?;
    let dfn = double_factorial(n as i64)?;
    let prefactor = Rational::new(factorial(n), &dfn * &dfn);
    let scale = if n % 2 == 1 { 8 } else { 16 };
    Ok(PiRational::new(
        rational(scale) * prefactor * double_factorial_sum(n)?,
    ))
}

/// `A_n` by the requested method.
pub fn area(n: u64, method: AreaMethod) -> Result<PiRational> {
    match method {
        AreaMethod::ClosedForm => area_closed_form(n),
        AreaMethod::Recursion => area_recursion(n),
        AreaMethod::DoubleFactorial => area_double_factorial(n),
    }
}

/// `n!` times the double-factorial sum; always an integer.
///
/// Integrality is checked rather than assumed. A fractional result means the
/// sum above is wrong and is reported as [`Error::NonIntegral`].
pub fn oeis_numerator(n: u64) -> Result<Integer> {
    check_power(n)?;
    let value = rational(factorial(n)) * double_factorial_sum(n)?;
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            what: format!("numerator for n = {n}"),
            value: value.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaRow {
    pub n: u64,
    pub value: PiRational,
    pub numerator: Integer,
}

/// Rows for `n = 1..=max_n`, sorted by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaTable {
    pub method: AreaMethod,
    pub rows: Vec<AreaRow>,
}

/// Builds the table of `A_1..A_max_n`.
///
/// The recursion method walks both parity chains once; the other methods
/// evaluate rows independently in parallel. Row order never depends on
/// scheduling.
pub fn area_table(max_n: u64, method: AreaMethod) -> Result<AreaTable> {
    check_power(max_n)?;
    let values: Vec<PiRational> = match method {
        AreaMethod::Recursion => {
            let mut values = Vec::with_capacity(max_n as usize);
            for n in 1..=max_n {
                let v = if n <= 2 {
                    recursion_base(n)
                } else {
                    recursion_step(n, &values[n as usize - 3])
                };
                values.push(v);
            }
            values
        }
        _ => (1..=max_n)
            .into_par_iter()
            .map(|n| area(n, method))
            .collect::<Result<_>>()?,
    };
    let numerators: Vec<Integer> = (1..=max_n)
        .into_par_iter()
        .map(oeis_numerator)
        .collect::<Result<_>>()?;
    let rows = (1..=max_n)
        .zip(values)
        .zip(numerators)
        .map(|((n, value), numerator)| AreaRow {
            n,
            value,
            numerator,
        })
        .collect();
    Ok(AreaTable { method, rows })
}

/// `coeff(A_n)·(n!!)²/c` with `c = 8` (odd) or `16` (even).
///
/// Since `A_n = (c/pi)·(n!/(n!!)²)·S` and the numerator is `n!·S`, this equals
/// [`oeis_numerator`] for every `n`.
pub fn reassembled_numerator_ratio(value: &PiRational, n: u64) -> Result<Rational> {
    check_power(n)?;
    let dfn = double_factorial(n as i64)?;
    let scale = if n % 2 == 1 { 8 } else { 16 };
    Ok(value.coeff() * rational(&dfn * &dfn) / rational(scale))
}

/// True when `0 < coeff <= 8`.
pub fn coeff_in_bounds(value: &PiRational) -> bool {
    value.coeff().is_positive() && *value.coeff() <= rational(8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(num: i64, den: i64) -> PiRational {
        PiRational::from_ratio(num, den)
    }

    #[test]
    fn closed_form_matches_listed_values() {
        assert_eq!(area_closed_form(1).unwrap(), pr(8, 1));
        assert_eq!(area_closed_form(3).unwrap(), pr(56, 9));
        assert_eq!(area_closed_form(4).unwrap(), pr(4, 1));
        assert_eq!(area_closed_form(6).unwrap(), pr(34, 9));
    }

    #[test]
    fn recursion_matches_listed_values() {
        assert_eq!(area_recursion(5).unwrap(), pr(1192, 225));
        assert_eq!(area_recursion(2).unwrap(), pr(4, 1));
        assert_eq!(area_recursion(8).unwrap(), pr(32, 9));
    }

    #[test]
    fn double_factorial_matches_listed_values() {
        // 8·6483/(1·3·5·7)² = 17288/3675
        assert_eq!(area_double_factorial(7).unwrap(), pr(8 * 6483, 105 * 105));
        assert_eq!(area_double_factorial(7).unwrap(), pr(17288, 3675));
        assert_eq!(area_double_factorial(1).unwrap(), pr(8, 1));
        assert_eq!(area_double_factorial(6).unwrap(), pr(34, 9));
    }

    #[test]
    fn zero_power_is_rejected_everywhere() {
        for m in AreaMethod::ALL {
            assert_eq!(area(0, m), Err(Error::ZeroPower));
        }
        assert_eq!(oeis_numerator(0), Err(Error::ZeroPower));
        assert!(area_table(0, AreaMethod::ClosedForm).is_err());
    }

    #[test]
    fn numerators() {
        let got: Vec<Integer> = [1, 3, 5, 7, 2, 4, 6, 8]
            .into_iter()
            .map(|n| oeis_numerator(n).unwrap())
            .collect();
        let want: Vec<Integer> = [1, 7, 149, 6483, 1, 16, 544, 32768]
            .into_iter()
            .map(Integer::from)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn numerator_reassembly() {
        for n in 1..=40 {
            let a = area_closed_form(n).unwrap();
            let lhs = reassembled_numerator_ratio(&a, n).unwrap();
            assert_eq!(lhs, rational(oeis_numerator(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn tables() {
        let t = area_table(4, AreaMethod::ClosedForm).unwrap();
        let vals: Vec<_> = t.rows.iter().map(|r| r.value.clone()).collect();
        assert_eq!(vals, vec![pr(8, 1), pr(4, 1), pr(56, 9), pr(4, 1)]);

        let t = area_table(1, AreaMethod::Recursion).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].value, pr(8, 1));

        let t = area_table(8, AreaMethod::DoubleFactorial).unwrap();
        assert_eq!(t.rows[7].n, 8);
        assert_eq!(t.rows[7].numerator, Integer::from(32768));
    }

    #[test]
    fn recursion_table_matches_pointwise_recursion() {
        let t = area_table(30, AreaMethod::Recursion).unwrap();
        for row in &t.rows {
            assert_eq!(row.value, area_recursion(row.n).unwrap());
        }
    }

    #[test]
    fn three_methods_agree_and_are_bounded() {
        for n in 1..=60 {
            let c = area_closed_form(n).unwrap();
            assert_eq!(c, area_recursion(n).unwrap(), "n = {n}");
            assert_eq!(c, area_double_factorial(n).unwrap(), "n = {n}");
            assert!(coeff_in_bounds(&c), "n = {n}");
        }
    }

    #[test]
    fn recursion_proof_identity() {
        for n in 2..=100u64 {
            for j in 1..n {
                assert_eq!(
                    binomial(n, j) * (n - j) * j,
                    binomial(n - 2, j - 1) * (n - 1) * n
                );
            }
        }
    }

    #[test]
    fn method_names_roundtrip() {
        for m in AreaMethod::ALL {
            assert_eq!(m.name().parse::<AreaMethod>().unwrap(), m);
        }
        assert!("fourier".parse::<AreaMethod>().is_err());
    }
}
