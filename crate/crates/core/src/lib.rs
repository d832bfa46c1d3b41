//! Limiting areas between `cos^n x` and `cos^n kx` on `[0, pi]`.
//!
//! For each positive power `n` the area
//! `A_n = lim_{k -> inf} ∫_0^pi |cos^n x - cos^n kx| dx` is a rational multiple
//! of `1/pi`. This crate computes it exactly three independent ways
//! ([`areas`]), rebuilds the related integer sequences from exponential
//! generating functions ([`egf`]), checks the supporting trigonometric
//! identities numerically ([`identities`]), and evaluates the finite-`k`
//! integral to full double precision using exact intersection points
//! ([`piecewise_quad`]).
//!
//! ```
//! use cosareas_core::areas::{area_closed_form, area_recursion};
//!
//! let a3 = area_closed_form(3).unwrap();
//! assert_eq!(a3.to_string(), "56/9 * 1/pi");
//! assert_eq!(a3, area_recursion(3).unwrap());
//! ```

pub mod areas;
pub mod egf;
mod error;
pub mod exact_arith;
pub mod identities;
pub mod piecewise_quad;
pub mod trig;

pub use areas::{AreaMethod, AreaRow, AreaTable};
pub use egf::{EgfSeries, OeisBFile};
pub use error::{Error, Result};
pub use exact_arith::{Integer, PiRational, Rational};
pub use identities::{LagrangeVariant, ParityCase};
pub use piecewise_quad::{Breakpoint, ConvergenceRow, FiniteAreaResult, NParity, Partition};
pub use trig::PiFraction;
