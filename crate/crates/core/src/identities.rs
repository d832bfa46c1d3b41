//! Numeric checks of the trigonometric facts behind the area formulas.
//!
//! * Three finite sine sums with Lagrange-identity closed forms
//!   ([`lagrange_sum_direct`] vs [`lagrange_closed_form`]).
//! * `(1/k - 1)·cot(x/(k-1)) + (1/k + 1)·cot(x/(k+1)) -> 4/x`
//!   ([`cot_limit_expression`]).
//! * The signed interval sums `C_q` for the four `(k, q)` parity cases, at
//!   finite `k` ([`cq_partial`]) and in the limit ([`cq_limit`]).

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::PiRational;
use crate::trig::{cos_pi_ratio, sin_pi_ratio, PiFraction};

/// Which Lagrange sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LagrangeVariant {
    /// `Σ_{l=1}^{N/2} sin(q·l·2pi/N)`, `N` even.
    FullEvenN,
    /// `Σ_{l=1}^{(N-1)/2} sin(q·l·2pi/N)`, `N` odd.
    HalfOddN,
    /// `Σ_{l=1}^{N/2} sin(q·l·pi/N)`, `N` and `q` even.
    HalfStepEvenN,
}

impl LagrangeVariant {
    pub const ALL: [LagrangeVariant; 3] = [
        LagrangeVariant::FullEvenN,
        LagrangeVariant::HalfOddN,
        LagrangeVariant::HalfStepEvenN,
    ];

    /// Whether `(n, q)` is in this variant's domain.
    pub fn accepts(&self, n: u64, q: u64) -> bool {
        n > 0
            && q > 0
            && match self {
                LagrangeVariant::FullEvenN => n.is_multiple_of(2),
                LagrangeVariant::HalfOddN => n % 2 == 1,
                LagrangeVariant::HalfStepEvenN => n.is_multiple_of(2) && q.is_multiple_of(2),
            }
    }

    fn check(&self, n: u64, q: u64) -> Result<()> {
        if self.accepts(n, q) {
            Ok(())
        } else {
            Err(Error::Parity(format!(
                "{self:?} does not accept N = {n}, q = {q}"
            )))
        }
    }
}

/// The sum itself, term by term, each sine argument reduced exactly.
pub fn lagrange_sum_direct(n: u64, q: u64, variant: LagrangeVariant) -> Result<f64> {
    variant.check(n, q)?;
    let (n, q) = (n as i128, q as i128);
    let sum = match variant {
        LagrangeVariant::FullEvenN => (1..=n / 2).map(|l| sin_pi_ratio(2 * q * l, n)).sum(),
        LagrangeVariant::HalfOddN => (1..=(n - 1) / 2).map(|l| sin_pi_ratio(2 * q * l, n)).sum(),
        LagrangeVariant::HalfStepEvenN => (1..=n / 2).map(|l| sin_pi_ratio(q * l, n)).sum(),
    };
    Ok(sum)
}

/// `cot((num/den)·pi)`.
fn cot_pi_ratio(num: i128, den: i128) -> Result<f64> {
    let s = sin_pi_ratio(num, den);
    if s == 0.0 {
        return Err(Error::CotPole(
            num as f64 / den as f64 * std::f64::consts::PI,
        ));
    }
    Ok(cos_pi_ratio(num, den) / s)
}

/// `tan((num/den)·pi)`.
fn tan_pi_ratio(num: i128, den: i128) -> Result<f64> {
    let c = cos_pi_ratio(num, den);
    if c == 0.0 {
        return Err(Error::CotPole(
            num as f64 / den as f64 * std::f64::consts::PI,
        ));
    }
    Ok(sin_pi_ratio(num, den) / c)
}

/// The closed form of the sum:
///
/// | variant | `q` | value |
/// |---|---|---|
/// | `FullEvenN` | even / odd | `0` / `cot(q·pi/N)` |
/// | `HalfOddN` | even / odd | `-tan(q·pi/2N)/2` / `cot(q·pi/2N)/2` |
/// | `HalfStepEvenN` | `0 mod 4` / `2 mod 4` | `0` / `cot(q·pi/2N)` |
pub fn lagrange_closed_form(n: u64, q: u64, variant: LagrangeVariant) -> Result<f64> {
    variant.check(n, q)?;
    let (n, q) = (n as i128, q as i128);
    match variant {
        LagrangeVariant::FullEvenN if q % 2 == 0 => Ok(0.0),
        LagrangeVariant::FullEvenN => cot_pi_ratio(q, n),
        LagrangeVariant::HalfOddN if q % 2 == 0 => Ok(-0.5 * tan_pi_ratio(q, 2 * n)?),
        LagrangeVariant::HalfOddN => Ok(0.5 * cot_pi_ratio(q, 2 * n)?),
        LagrangeVariant::HalfStepEvenN if q % 4 == 0 => Ok(0.0),
        LagrangeVariant::HalfStepEvenN => cot_pi_ratio(q, 2 * n),
    }
}

/// `cot(t) - 1/t`, accurate near zero.
fn cot_remainder(t: f64) -> Result<f64> {
    if t.abs() < 0.1 {
        // -t/3 - t³/45 - 2t⁵/945 - t⁷/4725 - 2t⁹/93555
        let t2 = t * t;
        let poly = 1.0 / 3.0
            + t2 * (1.0 / 45.0 + t2 * (2.0 / 945.0 + t2 * (1.0 / 4725.0 + t2 * (2.0 / 93555.0))));
        return Ok(-t * poly);
    }
    let s = t.sin();
    // t is a float; anything within rounding of a multiple of pi is a pole
    if s.abs() <= 4.0 * f64::EPSILON * t.abs() {
        return Err(Error::CotPole(t));
    }
    Ok(t.cos() / s - 1.0 / t)
}

/// `(1/k - 1)·cot(x/(k-1)) + (1/k + 1)·cot(x/(k+1))`, which tends to `4/x`.
///
/// The two cotangents grow like `k` and cancel. Splitting `cot t = 1/t + r(t)`
/// makes the `1/t` parts sum to exactly `4/x`, leaving
/// `4/x + ((1-k)·r(x/(k-1)) + (1+k)·r(x/(k+1)))/k`, which keeps the
/// difference from `4/x` accurate to full relative precision.
pub fn cot_limit_expression(x: f64, k: u64) -> Result<f64> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    if x == 0.0 || !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "x must be finite and nonzero, got {x}"
        )));
    }
    Ok(4.0 / x + cot_limit_deviation(x, k)?)
}

/// `cot_limit_expression(x, k) - 4/x`, without the cancellation.
pub fn cot_limit_deviation(x: f64, k: u64) -> Result<f64> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let kf = k as f64;
    let below = cot_remainder(x / (kf - 1.0))?;
    let above = cot_remainder(x / (kf + 1.0))?;
    Ok(((1.0 - kf) * below + (1.0 + kf) * above) / kf)
}

/// Parity of `(k, q)` in the `C_q` sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityCase {
    OddOdd,
    OddKEvenQ,
    EvenKOddQ,
    EvenEven,
}

impl ParityCase {
    pub const ALL: [ParityCase; 4] = [
        ParityCase::OddOdd,
        ParityCase::OddKEvenQ,
        ParityCase::EvenKOddQ,
        ParityCase::EvenEven,
    ];

    pub fn of(k: u64, q: u64) -> Self {
        match (k % 2 == 1, q % 2 == 1) {
            (true, true) => ParityCase::OddOdd,
            (true, false) => ParityCase::OddKEvenQ,
            (false, true) => ParityCase::EvenKOddQ,
            (false, false) => ParityCase::EvenEven,
        }
    }

    pub fn k_is_odd(&self) -> bool {
        matches!(self, ParityCase::OddOdd | ParityCase::OddKEvenQ)
    }

    pub fn q_is_odd(&self) -> bool {
        matches!(self, ParityCase::OddOdd | ParityCase::EvenKOddQ)
    }

    fn check_q(&self, q: u64) -> Result<()> {
        if q == 0 {
            return Err(Error::InvalidArgument("q must be positive".into()));
        }
        if (q % 2 == 1) != self.q_is_odd() {
            return Err(Error::Parity(format!("q = {q} does not match {self}")));
        }
        Ok(())
    }
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityCase::OddOdd => "odd-k/odd-q",
            ParityCase::OddKEvenQ => "odd-k/even-q",
            ParityCase::EvenKOddQ => "even-k/odd-q",
            ParityCase::EvenEven => "even-k/even-q",
        })
    }
}

/// `F_{q,k}(x) = sin(qx)/q - sin(qkx)/(qk)`, the antiderivative of `cos qx - cos qkx`.
fn harmonic_antiderivative(q: i64, k: i64, x: PiFraction) -> f64 {
    x.sin_times(q) / q as f64 - x.sin_times(q * k) / (q * k) as f64
}

/// `C_q` at finite `k`, from the antiderivative at the exact endpoints.
///
/// * `OddOdd`: `Σ_{l=1}^{(k-1)/2} ∫_{2l·pi/(k+1)}^{2l·pi/(k-1)} (cos qkx - cos qx) dx`.
/// * otherwise: `Σ_l ∫_{(l-1)u/(k-1)}^{l·u/(k+1)} f - ∫_{l·u/(k+1)}^{l·u/(k-1)} f`
///   with `f = cos qx - cos qkx`, `u = pi` for even `q` and `u = 2pi` for
///   odd `q`, and `l` up to `(k-1)/2` (odd `k`) or `k/2` (even `k`).
///
/// For even `k` the last right endpoint `k·u/(2(k-1))` lies past `pi/2`
/// (even `q`) or `pi` (odd `q`).
pub fn cq_partial(q: u64, k: u64, case: ParityCase) -> Result<f64> {
    case.check_q(q)?;
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    if (k % 2 == 1) != case.k_is_odd() {
        return Err(Error::Parity(format!("k = {k} does not match {case}")));
    }
    let (q, k) = (q as i64, k as i64);
    let big_f = |num: i64, den: i64| -> Result<f64> {
        Ok(harmonic_antiderivative(q, k, PiFraction::new(num, den)?))
    };
    let mut total = 0.0;
    if case == ParityCase::OddOdd {
        for l in 1..=(k - 1) / 2 {
            total += big_f(2 * l, k + 1)? - big_f(2 * l, k - 1)?;
        }
        return Ok(total);
    }
    let unit = if case.q_is_odd() { 2 } else { 1 };
    let top = if case.k_is_odd() { (k - 1) / 2 } else { k / 2 };
    for l in 1..=top {
        let left = big_f(unit * (l - 1), k - 1)?;
        let mid = big_f(unit * l, k + 1)?;
        let right = big_f(unit * l, k - 1)?;
        total += 2.0 * mid - left - right;
    }
    Ok(total)
}

/// The exact limit of [`cq_partial`] as `k -> inf`.
///
/// `OddOdd`: `4/(q² pi)`; `EvenKOddQ`: `8/(q² pi)`; even `q`: `16/(q² pi)` when
/// `q = 2 mod 4`, else `0`.
pub fn cq_limit(q: u64, case: ParityCase) -> Result<PiRational> {
    case.check_q(q)?;
    let q2 = q * q;
    Ok(match case {
        ParityCase::OddOdd => PiRational::from_ratio(4, q2),
        ParityCase::EvenKOddQ => PiRational::from_ratio(8, q2),
        ParityCase::OddKEvenQ | ParityCase::EvenEven if q % 4 == 2 => {
            PiRational::from_ratio(16, q2)
        }
        ParityCase::OddKEvenQ | ParityCase::EvenEven => PiRational::zero(),
    })
}
