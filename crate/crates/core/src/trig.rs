//! Sine and cosine of exact rational multiples of `pi`.
//!
//! Every angle that reaches a sine in this crate has the form `(num/den)·pi`
//! for integers `num`, `den`. The period is removed with integer arithmetic
//! (`num mod 2·den`) and the result folded into `[-pi/2, pi/2]` before the only
//! float conversion, so arguments like `q·k·l·pi/(k+1)` with `k ~ 1e5` keep
//! full double precision.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer as _;

use crate::error::{Error, Result};

/// `sin((num/den)·pi)` with exact period reduction. `den` must be positive.
pub fn sin_pi_ratio(num: i128, den: i128) -> f64 {
    debug_assert!(den > 0);
    let two_den = 2 * den;
    // r in [0, 2den)
    let mut r = num.rem_euclid(two_den);
    // r in [-den, den)
    if r >= den {
        r -= two_den;
    }
    // fold with sin(pi - t) = sin(t) into [-den/2, den/2]
    if 2 * r > den {
        r = den - r;
    } else if 2 * r < -den {
        r = -den - r;
    }
    if r == 0 {
        return 0.0;
    }
    if 2 * r == den {
        return 1.0;
    }
    if 2 * r == -den {
        return -1.0;
    }
    ((r as f64 / den as f64) * PI).sin()
}

/// `cos((num/den)·pi)` with exact period reduction.
pub fn cos_pi_ratio(num: i128, den: i128) -> f64 {
    // cos(t) = sin(t + pi/2)
    sin_pi_ratio(2 * num + den, 2 * den)
}

/// An exact angle `(num/den)·pi`, stored in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PiFraction {
    num: i64,
    den: i64,
}

impl PiFraction {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator in angle".into()));
        }
        let (mut num, mut den) = (num, den);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn zero() -> Self {
        Self { num: 0, den: 1 }
    }

    /// The angle `pi`.
    pub fn pi() -> Self {
        Self { num: 1, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// The angle in radians (rounded).
    pub fn to_radians(&self) -> f64 {
        self.num as f64 / self.den as f64 * PI
    }

    /// Exact midpoint of two angles.
    pub fn midpoint(&self, other: &Self) -> Self {
        self.lerp(other, 1, 2)
    }

    /// Exact point `self + (other - self)·t_num/t_den`.
    pub fn lerp(&self, other: &Self, t_num: i64, t_den: i64) -> Self {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (other.num as i128, other.den as i128);
        let (t, s) = (t_num as i128, t_den as i128);
        // a/b + (c/d - a/b)·t/s = (a·d·s + (c·b - a·d)·t) / (b·d·s)
        let num = a * d * s + (c * b - a * d) * t;
        let den = b * d * s;
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        Self {
            num: i64::try_from(num).expect("angle numerator overflow"),
            den: i64::try_from(den).expect("angle denominator overflow"),
        }
    }

    /// `sin(m·angle)`, reduced exactly.
    pub fn sin_times(&self, m: i64) -> f64 {
        sin_pi_ratio(self.num as i128 * m as i128, self.den as i128)
    }

    /// `cos(m·angle)`, reduced exactly.
    pub fn cos_times(&self, m: i64) -> f64 {
        cos_pi_ratio(self.num as i128 * m as i128, self.den as i128)
    }

    pub fn sin(&self) -> f64 {
        self.sin_times(1)
    }

    pub fn cos(&self) -> f64 {
        self.cos_times(1)
    }
}

impl Ord for PiFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for PiFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (n, 1) => write!(f, "{n}pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, d) => write!(f, "{n}pi/{d}"),
        }
    }
}
