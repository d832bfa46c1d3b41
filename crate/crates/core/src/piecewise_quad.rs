//! Finite-`k` areas `∫_0^pi |cos^n x - cos^n kx| dx`.
//!
//! The zeros of `f(x) = cos^n x - cos^n kx` on `[0, pi]` are known exactly:
//! `cos x = cos kx` at `l·2pi/(k±1)`, and for even `n` also `cos x = -cos kx`
//! at the odd multiples `l·pi/(k±1)`. Between consecutive zeros `f` has one
//! sign, so the area is a signed sum of antiderivative differences
//! ([`finite_area_piecewise`]). Breakpoints stay exact rational multiples of
//! `pi` until the sine evaluation; see [`crate::trig`].
//!
//! [`finite_area_oracle`] integrates `|f|` by adaptive Gauss-Kronrod without
//! looking at the breakpoints and serves as the independent check.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::areas::area_closed_form;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, ratio, rational_to_f64, Integer, Rational};
use crate::trig::PiFraction;

/// An intersection abscissa `(a/b)·pi` with `0 <= a/b <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Breakpoint(PiFraction);

impl Breakpoint {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Self::from_angle(PiFraction::new(a, b)?)
    }

    pub fn from_angle(angle: PiFraction) -> Result<Self> {
        if angle < PiFraction::zero() || angle > PiFraction::pi() {
            return Err(Error::InvalidArgument(format!(
                "breakpoint {angle} lies outside [0, pi]"
            )));
        }
        Ok(Self(angle))
    }

    pub fn zero() -> Self {
        Self(PiFraction::zero())
    }

    pub fn pi() -> Self {
        Self(PiFraction::pi())
    }

    pub fn a(&self) -> i64 {
        self.0.num()
    }

    pub fn b(&self) -> i64 {
        self.0.den()
    }

    pub fn angle(&self) -> PiFraction {
        self.0
    }

    pub fn to_radians(&self) -> f64 {
        self.0.to_radians()
    }
}

impl fmt::Display for Breakpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Strictly increasing breakpoints from `0` to `pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    points: Vec<Breakpoint>,
}

impl Partition {
    /// Sorts and deduplicates `points`; they must include `0` and `pi`.
    pub fn new(mut points: Vec<Breakpoint>) -> Result<Self> {
        points.sort_unstable();
        points.dedup();
        if points.first() != Some(&Breakpoint::zero()) || points.last() != Some(&Breakpoint::pi()) {
            return Err(Error::InvalidArgument(
                "a partition must start at 0 and end at pi".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Breakpoint] {
        &self.points
    }

    /// Interior breakpoints (without `0` and `pi`).
    pub fn interior(&self) -> &[Breakpoint] {
        &self.points[1..self.points.len() - 1]
    }

    pub fn panel_count(&self) -> usize {
        self.points.len() - 1
    }

    /// Consecutive `(left, right)` pairs.
    pub fn panels(&self) -> impl Iterator<Item = (Breakpoint, Breakpoint)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Parity of the power `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NParity {
    Odd,
    Even,
}

impl NParity {
    pub fn of(n: u64) -> Self {
        if n % 2 == 1 {
            NParity::Odd
        } else {
            NParity::Even
        }
    }
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::KTooSmall { k, min: 2 })
    } else {
        Ok(())
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroPower)
    } else {
        Ok(())
    }
}

/// All zeros of `cos^n x - cos^n kx` on `[0, pi]`, plus both endpoints.
pub fn breakpoints(parity: NParity, k: u64) -> Result<Partition> {
    check_k(k)?;
    let k = i64::try_from(k).map_err(|_| Error::InvalidArgument(format!("k = {k} too large")))?;
    let step = match parity {
        NParity::Odd => 2,
        NParity::Even => 1,
    };
    let mut points = Vec::with_capacity(2 * k as usize + 4);
    for den in [k + 1, k - 1] {
        for a in (0..=den).step_by(step) {
            points.push(Breakpoint::new(a, den)?);
        }
    }
    points.push(Breakpoint::zero());
    points.push(Breakpoint::pi());
    Partition::new(points)
}

/// `cos^n x - cos^n kx`
pub fn f_eval(n: u64, k: u64, x: f64) -> f64 {
    let n = n as i32;
    x.cos().powi(n) - (k as f64 * x).cos().powi(n)
}

/// The power-reduction expansion of `cos^n x - cos^n kx` and its antiderivative.
///
/// `cos^n t = 2/2^n Σ_j C(n,j) cos((n-2j)t)` (+ a constant for even `n` that
/// cancels in the difference), so
/// `F(x) = Σ_j w_j [sin(m_j x)/m_j - sin(m_j k x)/(m_j k)]` with
/// `m_j = n - 2j` and `w_j = 2 C(n,j)/2^n`.
#[derive(Debug, Clone)]
pub struct AreaKernel {
    n: u64,
    k: u64,
    harmonics: Vec<(i64, f64)>,
}

impl AreaKernel {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        check_n(n)?;
        check_k(k)?;
        let top = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 - 1 };
        let scale = ratio(2, Integer::from(1) << n as usize);
        let harmonics = (0..=top)
            .map(|j| {
                let w = Rational::from_integer(binomial(n, j)) * &scale;
                ((n - 2 * j) as i64, rational_to_f64(&w))
            })
            .collect();
        Ok(Self { n, k, harmonics })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `F(x)` at an exact angle.
    pub fn antiderivative(&self, x: PiFraction) -> f64 {
        let k = self.k as i64;
        self.harmonics
            .iter()
            .map(|&(m, w)| {
                let slow = x.sin_times(m) / m as f64;
                let fast = x.sin_times(m * k) / (m * k) as f64;
                w * (slow - fast)
            })
            .sum()
    }

    /// A value with the sign of `f(x)`, computed without raising to the `n`th power.
    pub fn sign_witness(&self, x: PiFraction) -> f64 {
        let slow = x.cos();
        let fast = x.cos_times(self.k as i64);
        if self.n % 2 == 1 {
            slow - fast
        } else {
            slow.abs() - fast.abs()
        }
    }

    /// `+1`, `-1` or `0` for the sign of `f` on the open panel `(left, right)`.
    pub fn panel_sign(&self, left: PiFraction, right: PiFraction) -> f64 {
        let s = self.sign_witness(left.midpoint(&right));
        let s = if s == 0.0 {
            self.sign_witness(left.lerp(&right, 1, 3))
        } else {
            s
        };
        if s > 0.0 {
            1.0
        } else if s < 0.0 {
            -1.0
        } else {
            0.0
        }
    }
}

/// Convenience wrapper for [`AreaKernel::antiderivative`].
pub fn antiderivative(n: u64, k: u64, x: &Breakpoint) -> Result<f64> {
    Ok(AreaKernel::new(n, k)?.antiderivative(x.angle()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AreaEngine {
    Piecewise,
    Oracle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteAreaResult {
    pub n: u64,
    pub k: u64,
    pub area: f64,
    pub panel_count: usize,
    pub method: AreaEngine,
}

/// `(sign of f, ∫ f)` for each panel, in partition order.
fn panel_integrals(n: u64, k: u64) -> Result<Vec<(f64, f64)>> {
    let kernel = AreaKernel::new(n, k)?;
    let partition = breakpoints(NParity::of(n), k)?;
    let values: Vec<f64> = partition
        .points()
        .iter()
        .map(|p| kernel.antiderivative(p.angle()))
        .collect();
    Ok(partition
        .panels()
        .zip(values.windows(2))
        .map(|((l, r), fv)| (kernel.panel_sign(l.angle(), r.angle()), fv[1] - fv[0]))
        .collect())
}

/// Unsigned panel areas in partition order.
fn panel_areas(n: u64, k: u64) -> Result<Vec<f64>> {
    Ok(panel_integrals(n, k)?
        .into_iter()
        .map(|(sign, integral)| sign * integral)
        .collect())
}

/// Exact-breakpoint area: `Σ sign(f(mid))·(F(right) - F(left))`.
pub fn finite_area_piecewise(n: u64, k: u64) -> Result<FiniteAreaResult> {
    let panels = panel_areas(n, k)?;
    let area: f64 = panels.iter().sum();
    Ok(FiniteAreaResult {
        n,
        k,
        area: if area < 0.0 && area > -1e-12 {
            0.0
        } else {
            area
        },
        panel_count: panels.len(),
        method: AreaEngine::Piecewise,
    })
}

/// `(above, below)`: area where `cos^n kx > cos^n x` and where it is smaller.
pub fn area_above_below(n: u64, k: u64) -> Result<(f64, f64)> {
    let panels = panel_integrals(n, k)?;
    let mut above = 0.0;
    let mut below = 0.0;
    for (sign, integral) in panels {
        // f = cos^n x - cos^n kx, so f < 0 is where cos^n kx is above
        if sign < 0.0 {
            above -= integral;
        } else if sign > 0.0 {
            below += integral;
        }
    }
    Ok((above, below))
}

// 15-point Kronrod nodes on [0, 1] (symmetric), with 7-point Gauss weights at
// the odd-indexed nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Gauss-Kronrod 7-15 on `[a, b]`: `(kronrod estimate, |kronrod - gauss|)`.
fn gk15(g: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = g(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = g(center - dx) + g(center + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Default cap on the number of live intervals in [`finite_area_oracle`].
pub const ORACLE_MAX_INTERVALS: usize = 4_000_000;

/// Adaptive quadrature of `|f|` over `[0, pi]`, blind to the breakpoints.
///
/// Starts from `max(16k, 16)` uniform panels so that every lobe of
/// `cos^n kx` is sampled, then bisects the worst panel until the summed
/// error estimate drops below `tol`.
pub fn finite_area_oracle(n: u64, k: u64, tol: f64) -> Result<FiniteAreaResult> {
    finite_area_oracle_with_budget(n, k, tol, ORACLE_MAX_INTERVALS)
}

pub fn finite_area_oracle_with_budget(
    n: u64,
    k: u64,
    tol: f64,
    max_intervals: usize,
) -> Result<FiniteAreaResult> {
    check_n(n)?;
    check_k(k)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let g = |x: f64| f_eval(n, k, x).abs();
    let initial = (16 * k as usize).max(16);
    let width = PI / initial as f64;
    let mut heap = BinaryHeap::with_capacity(initial * 2);
    let mut total_error = 0.0;
    for i in 0..initial {
        let a = i as f64 * width;
        let b = if i + 1 == initial {
            PI
        } else {
            (i + 1) as f64 * width
        };
        let (value, error) = gk15(&g, a, b);
        total_error += error;
        heap.push(Segment { a, b, value, error });
    }
    let mut settled = Vec::new();
    while total_error > tol {
        let Some(worst) = heap.pop() else { break };
        if heap.len() + settled.len() + 2 > max_intervals {
            heap.push(worst);
            let (estimate, error_estimate) = summarize(heap.iter().chain(&settled));
            return Err(Error::QuadratureBudget {
                intervals: max_intervals,
                estimate,
                error_estimate,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot bisect further in double precision
            total_error -= worst.error;
            settled.push(worst);
            continue;
        }
        total_error -= worst.error;
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gk15(&g, a, b);
            total_error += error;
            heap.push(Segment { a, b, value, error });
        }
        if total_error <= tol {
            // drop accumulated rounding in the running total before stopping
            total_error = summarize(heap.iter().chain(&settled)).1;
        }
    }
    let panel_count = heap.len() + settled.len();
    let (area, _) = summarize(heap.iter().chain(&settled));
    Ok(FiniteAreaResult {
        n,
        k,
        area,
        panel_count,
        method: AreaEngine::Oracle,
    })
}

/// Sums values and errors in order of the left endpoint.
fn summarize<'a>(segments: impl Iterator<Item = &'a Segment>) -> (f64, f64) {
    let mut parts: Vec<(f64, f64, f64)> = segments.map(|s| (s.a, s.value, s.error)).collect();
    parts.sort_by(|x, y| x.0.total_cmp(&y.0));
    parts
        .iter()
        .fold((0.0, 0.0), |(v, e), &(_, sv, se)| (v + sv, e + se))
}

/// One row of a convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub k: u64,
    pub area: f64,
    pub limit: f64,
    pub error: f64,
    pub elapsed: Duration,
}

impl ConvergenceRow {
    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }
}

/// Piecewise areas for each `k` against `A_n`, in input order.
pub fn convergence_study(n: u64, ks: &[u64]) -> Result<Vec<ConvergenceRow>> {
    if let Some(&k) = ks.iter().find(|&&k| k < 2) {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let limit = area_closed_form(n)?.to_f64();
    ks.par_iter()
        .map(|&k| {
            let start = Instant::now();
            let area = finite_area_piecewise(n, k)?.area;
            Ok(ConvergenceRow {
                k,
                area,
                limit,
                error: (area - limit).abs(),
                elapsed: start.elapsed(),
            })
        })
        .collect()
}
