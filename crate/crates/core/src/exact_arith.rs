//! Exact integers, rationals and the combinatorial primitives used by every
//! closed form in the crate.
//!
//! [`Integer`] and [`Rational`] are the `num` big-number types. Rationals are
//! kept in lowest terms with a positive denominator after every operation, so
//! structural equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision normalized fraction.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Lifts an integer into the rationals.
pub fn rational(value: impl Into<Integer>) -> Rational {
    Rational::from_integer(value.into())
}

/// `n!`
pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `n!!`, the product of every other integer from `n` down to 1 or 2.
///
/// Defined for `n >= -1` with `0!! = (-1)!! = 1`. Anything below `-1` is an
/// error rather than an empty product.
pub fn double_factorial(n: i64) -> Result<Integer> {
    if n < -1 {
        return Err(Error::DoubleFactorialDomain(n));
    }
    let mut acc = Integer::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// `C(n, j)`, evaluated multiplicatively with exact division at each step.
///
/// Returns 0 when `j > n`.
pub fn binomial(n: u64, j: u64) -> Integer {
    if j > n {
        return Integer::zero();
    }
    let j = j.min(n - j);
    let mut acc = Integer::one();
    for i in 1..=j {
        // acc * (n - j + i) is divisible by i since acc = C(n - j + i - 1, i - 1).
        acc = acc * (n - j + i) / i;
    }
    acc
}

/// Converts an exact rational to the nearest-ish `f64`.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// An exact real of the form `coeff / pi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiRational {
    coeff: Rational,
}

impl PiRational {
    pub fn new(coeff: Rational) -> Self {
        Self { coeff }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero())
    }

    /// `num / (den * pi)`
    pub fn from_ratio(num: impl Into<Integer>, den: impl Into<Integer>) -> Self {
        Self::new(ratio(num, den))
    }

    /// The rational `r` such that the represented value is `r / pi`.
    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn into_coeff(self) -> Rational {
        self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.coeff * factor)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coeff) / std::f64::consts::PI
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        PiRational::new(self.coeff + rhs.coeff)
    }
}

impl<'a> Add<&'a PiRational> for &'a PiRational {
    type Output = PiRational;
    fn add(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.coeff + &rhs.coeff)
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        PiRational::new(self.coeff - rhs.coeff)
    }
}

impl Mul<&Rational> for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &Rational) -> PiRational {
        PiRational::new(self.coeff * rhs)
    }
}

/// Prints as `p/q * 1/pi` (or `p * 1/pi` for integral coefficients).
impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * 1/pi", self.coeff)
    }
}
