//! The saltbox-roof distribution and its degenerate roof family.
//!
//! A saltbox roof is a triangular density cut on its right side: it climbs
//! from zero at `a` to a peak at the mode `c` and falls to a nonzero residual
//! height at `b`. Four numbers define it: the limits `a < b`, the mode `c`,
//! and a shape factor in `[0, 1]` that slides the peak height between the
//! uniform (`0`) and triangular (`1`) extremes.
//!
//! ```
//! use saltbox_roof::RoofParams;
//!
//! let dist = RoofParams::new(0.0, 1.0, 0.5, 0.5)?.resolve()?;
//! assert_eq!(dist.pdf(0.25)?, 0.75);
//! assert!((dist.quantile(0.5)? - (2.0 - 2f64.sqrt())).abs() < 1e-15);
//! assert!((dist.mean() - 7.0 / 12.0).abs() < 1e-15);
//! # Ok::<(), saltbox_roof::Error>(())
//! ```
//!
//! Modules:
//!
//! - [`roof`]: parameters, domain algebra, density/CDF/quantile, moments.
//! - [`family`]: closed forms of the six degenerate shapes.
//! - [`truncation`]: the same distribution rebuilt as a truncated triangle.
//! - [`numverify`]: quadrature, bisection and KS helpers used for checking.
//! - [`cli`]: the data-emitting command surface behind the `saltbox` binary.

// `!(x < y)` is used on purpose so that NaN fails every range check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod family;
pub mod numverify;
pub mod rng;
pub mod roof;
pub mod truncation;

pub use error::{DomainViolation, Error, Result};
pub use family::{FamilyParams, PlateauHeight};
pub use rng::UnitStream;
pub use roof::{
    c_limit, classify, resolve, rho_boundary, to_unit, Moments, ResolvedSaltbox, RoofParams, RoofShapeKind, UnitShape,
};
pub use truncation::{compare_quantiles, quantile_comparison, TriangularSupport, TruncationWindow};
