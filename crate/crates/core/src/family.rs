//! Closed forms for the six degenerate roof shapes.
//!
//! Each CDF is the integral of its piecewise-linear density and each
//! quantile inverts that CDF directly.

use crate::error::{finite, probability, DomainViolation, Error, Result};
use crate::roof::RoofShapeKind;

/// Parameters of a degenerate roof distribution.
///
/// `c` is used by the triangular and shed-flat kinds, `h_c` by the skillion;
/// the constructors fill the unused slots with the value they degenerate to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    kind: RoofShapeKind,
    a: f64,
    b: f64,
    c: f64,
    h_c: f64,
}

/// Plateau height of a shed-flat roof alongside the uniform height on the same support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateauHeight {
    pub h_p: f64,
    pub h_r: f64,
}

impl PlateauHeight {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self {
            h_p: 2.0 / (2.0 * b - a - c),
            h_r: 1.0 / (b - a),
        }
    }
}

fn check_support(a: f64, b: f64) -> Result<(), DomainViolation> {
    finite("a", a)?;
    finite("b", b)?;
    if a < b && (b - a).is_finite() {
        Ok(())
    } else {
        Err(DomainViolation::EmptySupport { a, b })
    }
}

fn check_mode(a: f64, b: f64, c: f64) -> Result<(), DomainViolation> {
    finite("c", c)?;
    if a <= c && c <= b {
        Ok(())
    } else {
        Err(DomainViolation::ModeOutsideSupport { a, b, c })
    }
}

impl FamilyParams {
    /// Generic constructor. `c` is ignored where the kind pins the mode and
    /// `h_c` is ignored for every kind but [`RoofShapeKind::Skillion`].
    pub fn new(kind: RoofShapeKind, a: f64, b: f64, c: f64, h_c: f64) -> Result<Self> {
        match kind {
            RoofShapeKind::Uniform => Self::uniform(a, b),
            RoofShapeKind::Triangular => Self::triangular(a, b, c),
            RoofShapeKind::LeftShed => Self::left_shed(a, b),
            RoofShapeKind::RightShed => Self::right_shed(a, b),
            RoofShapeKind::ShedFlat => Self::shed_flat(a, b, c),
            RoofShapeKind::Skillion => Self::skillion(a, b, h_c),
            RoofShapeKind::Saltbox => Err(DomainViolation::NotDegenerate.into()),
        }
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        check_support(a, b)?;
        Ok(Self {
            kind: RoofShapeKind::Uniform,
            a,
            b,
            c: a,
            h_c: 1.0 / (b - a),
        })
    }

    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        check_support(a, b)?;
        check_mode(a, b, c)?;
        Ok(Self {
            kind: RoofShapeKind::Triangular,
            a,
            b,
            c,
            h_c: 2.0 / (b - a),
        })
    }

    pub fn left_shed(a: f64, b: f64) -> Result<Self> {
        check_support(a, b)?;
        Ok(Self {
            kind: RoofShapeKind::LeftShed,
            a,
            b,
            c: b,
            h_c: 2.0 / (b - a),
        })
    }

    pub fn right_shed(a: f64, b: f64) -> Result<Self> {
        check_support(a, b)?;
        Ok(Self {
            kind: RoofShapeKind::RightShed,
            a,
            b,
            c: a,
            h_c: 2.0 / (b - a),
        })
    }

    pub fn shed_flat(a: f64, b: f64, c: f64) -> Result<Self> {
        check_support(a, b)?;
        check_mode(a, b, c)?;
        Ok(Self {
            kind: RoofShapeKind::ShedFlat,
            a,
            b,
            c,
            h_c: PlateauHeight::new(a, b, c).h_p,
        })
    }

    /// Skillion roof with initial height `h_c` in `[1/(b-a), 2/(b-a)]`.
    pub fn skillion(a: f64, b: f64, h_c: f64) -> Result<Self> {
        check_support(a, b)?;
        finite("h_c", h_c)?;
        let w = b - a;
        let (lo, hi) = (1.0 / w, 2.0 / w);
        // one ulp of slack at each end so 1/w and 2/w computed elsewhere pass
        let slack = f64::EPSILON * hi;
        if h_c < lo - slack || h_c > hi + slack {
            return Err(DomainViolation::HeightOutOfRange { h_c, lo, hi }.into());
        }
        Ok(Self {
            kind: RoofShapeKind::Skillion,
            a,
            b,
            c: a,
            h_c: h_c.clamp(lo, hi),
        })
    }

    pub fn kind(&self) -> RoofShapeKind {
        self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Mode location (the point of maximum density; `a` for uniform).
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Maximum density.
    pub fn h_c(&self) -> f64 {
        self.h_c
    }

    /// Density at `b` for the skillion kind.
    fn skillion_h_b(&self) -> f64 {
        let w = self.b - self.a;
        ((2.0 - self.h_c * w) / w).max(0.0)
    }

    pub fn plateau(&self) -> PlateauHeight {
        PlateauHeight::new(self.a, self.b, self.c)
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        let Self { a, b, c, .. } = *self;
        if x < a || x > b {
            return Ok(0.0);
        }
        let w = b - a;
        Ok(match self.kind {
            RoofShapeKind::Uniform => 1.0 / w,
            RoofShapeKind::Triangular => {
                if x == c {
                    2.0 / w
                } else if x < c {
                    2.0 * (x - a) / (w * (c - a))
                } else {
                    2.0 * (b - x) / (w * (b - c))
                }
            }
            RoofShapeKind::LeftShed => 2.0 * (x - a) / (w * w),
            RoofShapeKind::RightShed => 2.0 * (b - x) / (w * w),
            RoofShapeKind::ShedFlat => {
                let h_p = self.h_c;
                if x >= c {
                    h_p
                } else {
                    h_p * (x - a) / (c - a)
                }
            }
            RoofShapeKind::Skillion => {
                let h_b = self.skillion_h_b();
                self.h_c + (h_b - self.h_c) * ((x - a) / w)
            }
            RoofShapeKind::Saltbox => unreachable!("constructors reject saltbox"),
        })
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        let Self { a, b, c, .. } = *self;
        if x <= a {
            return Ok(0.0);
        }
        if x >= b {
            return Ok(1.0);
        }
        let w = b - a;
        let value = match self.kind {
            RoofShapeKind::Uniform => (x - a) / w,
            RoofShapeKind::Triangular => {
                if x <= c {
                    (x - a) * (x - a) / (w * (c - a))
                } else {
                    1.0 - (b - x) * (b - x) / (w * (b - c))
                }
            }
            RoofShapeKind::LeftShed => {
                let t = (x - a) / w;
                t * t
            }
            RoofShapeKind::RightShed => {
                let t = (b - x) / w;
                1.0 - t * t
            }
            RoofShapeKind::ShedFlat => {
                let h_p = self.h_c;
                if x <= c {
                    h_p * (x - a) * (x - a) / (2.0 * (c - a))
                } else {
                    h_p * (0.5 * (c - a) + (x - c))
                }
            }
            RoofShapeKind::Skillion => {
                let t = x - a;
                let slope = (self.h_c - self.skillion_h_b()) / w;
                self.h_c * t - 0.5 * slope * t * t
            }
            RoofShapeKind::Saltbox => unreachable!("constructors reject saltbox"),
        };
        Ok(value.clamp(0.0, 1.0))
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        probability(u)?;
        let Self { a, b, c, .. } = *self;
        if u == 0.0 {
            return Ok(a);
        }
        if u == 1.0 {
            return Ok(b);
        }
        let w = b - a;
        let x = match self.kind {
            RoofShapeKind::Uniform => a + u * w,
            RoofShapeKind::Triangular => {
                if u <= (c - a) / w {
                    a + (u * w * (c - a)).sqrt()
                } else {
                    b - ((1.0 - u) * w * (b - c)).sqrt()
                }
            }
            RoofShapeKind::LeftShed => a + u.sqrt() * w,
            RoofShapeKind::RightShed => b - w * (1.0 - u).sqrt(),
            RoofShapeKind::ShedFlat => {
                let h_p = self.h_c;
                let below = 0.5 * (c - a) * h_p;
                if u <= below {
                    a + (2.0 * u * (c - a) / h_p).sqrt()
                } else {
                    c + (u - below) / h_p
                }
            }
            RoofShapeKind::Skillion => {
                // h_c t - k t^2 / 2 = u, conjugate root
                let slope = (self.h_c - self.skillion_h_b()) / w;
                let disc = (self.h_c * self.h_c - 2.0 * slope * u).max(0.0);
                a + 2.0 * u / (self.h_c + disc.sqrt())
            }
            RoofShapeKind::Saltbox => unreachable!("constructors reject saltbox"),
        };
        Ok(x.clamp(a, b))
    }
}
