//! The saltbox-roof distribution: a triangular density truncated on its
//! right side only.
//!
//! The density rises linearly from zero at `a` to its peak `h_c` at the mode
//! `c`, then falls linearly to a residual height `h_b` at `b`. Users supply
//! `(a, b, c, shape)` where `shape` in `[0, 1]` fixes the peak height
//! `h_c = (1 + shape) / (b - a)`; unit area then forces
//! `h_b = (2 - (b - a) h_c) / (b - c)`.
//!
//! The admissible `(c_hat, shape)` pairs, with `c_hat = (c - a) / (b - a)`,
//! are bounded by `c_hat <= c_limit(shape) = 2 - 2 / (shape + 1)`. On that
//! boundary `h_b == h_c` and the density is a ramp followed by a plateau.

use crate::error::{finite, probability, DomainViolation, Error, Result};
use crate::family::FamilyParams;
use crate::rng::UnitStream;

/// Slack allowed when testing `c_hat <= c_limit(shape)`.
pub const DOMAIN_EPS: f64 = 1e-12;
/// Tolerance on the unit-area identity.
pub const AREA_EPS: f64 = 1e-12;
/// Relative threshold below which a width or a height gap counts as zero.
pub const FLAT_EPS: f64 = 1e-9;
/// Default tolerance for [`classify`].
pub const CLASSIFY_TOL: f64 = 1e-9;

/// The seven roof shapes the family can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoofShapeKind {
    /// Flat roof.
    Uniform,
    /// Gabled roof.
    Triangular,
    /// Right triangle with its peak at `b`.
    LeftShed,
    /// Right triangle with its peak at `a`.
    RightShed,
    /// Ramp up to `c`, plateau to `b`.
    ShedFlat,
    /// Vertical rise at `a`, straight descent to a nonzero `h_b`.
    Skillion,
    Saltbox,
}

/// User-facing parameters `(a, b, c, shape)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoofParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub shape: f64,
}

impl RoofParams {
    /// Validated constructor.
    pub fn new(a: f64, b: f64, c: f64, shape: f64) -> Result<Self> {
        let p = Self { a, b, c, shape };
        p.validate()?;
        Ok(p)
    }

    /// Parameters on the unit interval from a relative mode and shape.
    pub fn unit(c_hat: f64, shape: f64) -> Result<Self> {
        Self::new(0.0, 1.0, c_hat, shape)
    }

    pub fn validate(&self) -> Result<(), DomainViolation> {
        let Self { a, b, c, shape } = *self;
        finite("a", a)?;
        finite("b", b)?;
        finite("c", c)?;
        finite("shape", shape)?;
        if !(a < b) || !(b - a).is_finite() {
            return Err(DomainViolation::EmptySupport { a, b });
        }
        if !(a <= c && c <= b) {
            return Err(DomainViolation::ModeOutsideSupport { a, b, c });
        }
        if !(0.0..=1.0).contains(&shape) {
            return Err(DomainViolation::ShapeOutOfRange(shape));
        }
        let c_hat = (c - a) / (b - a);
        let limit = c_limit_unchecked(shape);
        if c_hat > limit + DOMAIN_EPS {
            return Err(DomainViolation::ModeBeyondLimit {
                c_hat,
                c_limit: limit,
                shape,
            });
        }
        Ok(())
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn resolve(&self) -> Result<ResolvedSaltbox> {
        resolve(self)
    }

    pub fn to_unit(&self) -> Result<UnitShape> {
        to_unit(self)
    }
}

/// Hat-transformed shape: support rescaled to `[0, 1]`, heights scaled by `b - a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitShape {
    pub c_hat: f64,
    pub rho_hat: f64,
    pub hc_hat: f64,
    pub hb_hat: f64,
    pub c_limit: f64,
}

impl UnitShape {
    pub fn classify(&self, tol: f64) -> RoofShapeKind {
        classify(self, tol)
    }
}

/// Distribution with its heights computed; every evaluator works on this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolvedSaltbox {
    a: f64,
    b: f64,
    c: f64,
    shape: f64,
    h_c: f64,
    h_b: f64,
    // Set when the mode sits on an end of the support and the piecewise
    // formulas would divide by a vanishing width.
    closed: Option<FamilyParams>,
}

/// Mean, median, mode and variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub median: f64,
    pub mode: f64,
    pub variance: f64,
}

/// Upper bound on the relative mode for a given shape: `2 - 2 / (shape + 1)`.
pub fn c_limit(rho_hat: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho_hat) {
        return Err(DomainViolation::ShapeOutOfRange(rho_hat).into());
    }
    Ok(c_limit_unchecked(rho_hat))
}

fn c_limit_unchecked(rho_hat: f64) -> f64 {
    2.0 - 2.0 / (rho_hat + 1.0)
}

/// Shape on the shed-flat boundary for a relative mode: `2 / (2 - c_hat) - 1`.
///
/// Inverse of [`c_limit`]; `c_hat = 1` returns the limit value 1.
pub fn rho_boundary(c_hat: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c_hat) {
        return Err(DomainViolation::RelativeModeOutOfRange(c_hat).into());
    }
    Ok(2.0 / (2.0 - c_hat) - 1.0)
}

pub fn resolve(params: &RoofParams) -> Result<ResolvedSaltbox> {
    params.validate()?;
    let RoofParams { a, b, c, shape } = *params;
    let width = b - a;
    let h_c = (1.0 + shape) / width;
    let c_hat = (c - a) / width;

    let (h_b, closed) = if 1.0 - c_hat < FLAT_EPS {
        (0.0, Some(FamilyParams::left_shed(a, b)?))
    } else {
        let h_b = ((2.0 - width * h_c) / (b - c)).clamp(0.0, h_c);
        let closed = if c_hat < FLAT_EPS && shape > 1.0 - FLAT_EPS {
            Some(FamilyParams::right_shed(a, b)?)
        } else {
            None
        };
        (h_b, closed)
    };

    Ok(ResolvedSaltbox {
        a,
        b,
        c,
        shape,
        h_c,
        h_b,
        closed,
    })
}

pub fn to_unit(params: &RoofParams) -> Result<UnitShape> {
    params.validate()?;
    let c_hat = (params.c - params.a) / params.width();
    let rho_hat = params.shape;
    let hc_hat = rho_hat + 1.0;
    let hb_hat = if 1.0 - c_hat < FLAT_EPS {
        0.0
    } else {
        ((2.0 - hc_hat) / (1.0 - c_hat)).clamp(0.0, hc_hat)
    };
    Ok(UnitShape {
        c_hat,
        rho_hat,
        hc_hat,
        hb_hat,
        c_limit: c_limit_unchecked(rho_hat),
    })
}

/// Names the roof shape of a unit shape. Corners win over edges, edges over
/// the interior.
pub fn classify(unit: &UnitShape, tol: f64) -> RoofShapeKind {
    let low_c = unit.c_hat <= tol;
    let high_c = unit.c_hat >= 1.0 - tol;
    let flat = unit.rho_hat <= tol;
    let peaked = unit.rho_hat >= 1.0 - tol;

    match () {
        _ if flat && low_c => RoofShapeKind::Uniform,
        _ if peaked && low_c => RoofShapeKind::RightShed,
        _ if peaked && high_c => RoofShapeKind::LeftShed,
        _ if peaked => RoofShapeKind::Triangular,
        _ if low_c => RoofShapeKind::Skillion,
        _ if (unit.c_hat - unit.c_limit).abs() <= tol => RoofShapeKind::ShedFlat,
        _ => RoofShapeKind::Saltbox,
    }
}

impl ResolvedSaltbox {
    pub fn new(a: f64, b: f64, c: f64, shape: f64) -> Result<Self> {
        resolve(&RoofParams { a, b, c, shape })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    /// Density at the mode.
    pub fn h_c(&self) -> f64 {
        self.h_c
    }

    /// Residual density at the upper limit.
    pub fn h_b(&self) -> f64 {
        self.h_b
    }

    pub fn params(&self) -> RoofParams {
        RoofParams {
            a: self.a,
            b: self.b,
            c: self.c,
            shape: self.shape,
        }
    }

    pub fn unit_shape(&self) -> UnitShape {
        // params were validated on construction
        to_unit(&self.params()).expect("resolved parameters are valid")
    }

    pub fn kind(&self) -> RoofShapeKind {
        self.unit_shape().classify(CLASSIFY_TOL)
    }

    /// Closed-form degenerate equivalent, when the shape sits on a corner or
    /// edge of the domain (within `tol`).
    pub fn degenerate_form(&self, tol: f64) -> Option<FamilyParams> {
        let (a, b) = (self.a, self.b);
        let fp = match self.unit_shape().classify(tol) {
            RoofShapeKind::Saltbox => return None,
            RoofShapeKind::Uniform => FamilyParams::uniform(a, b),
            RoofShapeKind::Triangular => FamilyParams::triangular(a, b, self.c),
            RoofShapeKind::LeftShed => FamilyParams::left_shed(a, b),
            RoofShapeKind::RightShed => FamilyParams::right_shed(a, b),
            RoofShapeKind::ShedFlat => FamilyParams::shed_flat(a, b, self.c),
            RoofShapeKind::Skillion => FamilyParams::skillion(a, b, self.h_c),
        };
        fp.ok()
    }

    /// `½ (c - a) h_c + ½ (h_c + h_b) (b - c)`.
    pub fn total_area(&self) -> f64 {
        0.5 * (self.c - self.a) * self.h_c + 0.5 * (self.h_c + self.h_b) * (self.b - self.c)
    }

    /// Probability mass on `[a, c]`.
    pub fn mass_below_mode(&self) -> f64 {
        0.5 * (self.c - self.a) * self.h_c
    }

    fn descending_slope(&self) -> f64 {
        (self.h_c - self.h_b) / (self.b - self.c)
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        if let Some(fp) = &self.closed {
            return fp.pdf(x);
        }
        let (a, b, c) = (self.a, self.b, self.c);
        Ok(if x < a || x > b {
            0.0
        } else if x == c {
            self.h_c
        } else if x < c {
            self.h_c * (x - a) / (c - a)
        } else {
            self.h_c + (self.h_b - self.h_c) * ((x - c) / (b - c))
        })
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        if let Some(fp) = &self.closed {
            return fp.cdf(x);
        }
        let (a, b, c) = (self.a, self.b, self.c);
        Ok(if x <= a {
            0.0
        } else if x >= b {
            1.0
        } else if x <= c {
            let t = x - a;
            self.h_c * t * t / (2.0 * (c - a))
        } else {
            let s = x - c;
            let f_x = self.h_c - self.descending_slope() * s;
            (self.mass_below_mode() + 0.5 * s * (self.h_c + f_x)).min(1.0)
        })
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        probability(u)?;
        if let Some(fp) = &self.closed {
            return fp.quantile(u);
        }
        let (a, b, c) = (self.a, self.b, self.c);
        if u == 0.0 {
            return Ok(a);
        }
        if u == 1.0 {
            return Ok(b);
        }
        let below = self.mass_below_mode();
        if u <= below {
            return Ok((a + (2.0 * u * (c - a) / self.h_c).sqrt()).min(c));
        }
        // Descending branch: F(c) + s h_c - k s^2 / 2 = u with s = x - c.
        // The conjugate root form has no cancellation and tends to the
        // plateau inverse r / h_c as the slope k vanishes.
        let r = u - below;
        let k = self.descending_slope();
        let s = if k == 0.0 {
            r / self.h_c
        } else {
            let disc = (self.h_c * self.h_c - 2.0 * k * r).max(0.0);
            2.0 * r / (self.h_c + disc.sqrt())
        };
        Ok((c + s).clamp(c, b))
    }

    /// Inverse-transform draws from a [`UnitStream`] seeded with `seed`.
    pub fn sample(&self, seed: u64, n: usize) -> Vec<f64> {
        self.sample_from(&mut UnitStream::new(seed), n)
    }

    pub fn sample_from(&self, stream: &mut UnitStream, n: usize) -> Vec<f64> {
        stream
            .take(n)
            .map(|u| self.quantile(u).expect("unit stream stays in [0, 1)"))
            .collect()
    }

    pub fn mean(&self) -> f64 {
        // -(b - a)^2 h_c / 6 + c / 3 + 2b / 3, written around b
        let w = self.b - self.a;
        self.b - (self.b - self.c) / 3.0 - w * w * self.h_c / 6.0
    }

    pub fn variance(&self) -> f64 {
        // [2 (c - b)^2 + (c - 3a + 2b)(a - b)^2 h_c - (a - b)^4 h_c^2] / 36,
        // with every difference taken relative to a
        let w = self.b - self.a;
        let scaled = w * self.h_c;
        let bc = self.b - self.c;
        (2.0 * bc * bc + ((self.c - self.a) + 2.0 * w) * w * scaled - w * w * scaled * scaled) / 36.0
    }

    pub fn mode(&self) -> f64 {
        self.c
    }

    /// Median as `quantile(0.5)`, valid on either branch.
    pub fn median(&self) -> f64 {
        self.quantile(0.5).expect("0.5 is a probability")
    }

    /// The ascending-branch median `a + sqrt((c - a) / h_c)`. Only meaningful
    /// when the median lies left of the mode, i.e. `(c - a) h_c >= 1`.
    pub fn ascending_median(&self) -> Option<f64> {
        ((self.c - self.a) * self.h_c >= 1.0)
            .then(|| (self.a * self.h_c + ((self.c - self.a) * self.h_c).sqrt()) / self.h_c)
    }

    pub fn moments(&self) -> Moments {
        Moments {
            mean: self.mean(),
            median: self.median(),
            mode: self.mode(),
            variance: self.variance(),
        }
    }
}
