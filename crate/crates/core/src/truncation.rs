//! Independent check of the saltbox evaluators through truncation.
//!
//! A saltbox roof is the triangle on `[a, e]` with apex `c`, cut at `b`.
//! Given the two heights `h_c` and `h_b`, similar triangles recover the far
//! vertex `e`. Conditioning that triangle on `[a, b]` must reproduce the
//! saltbox density, CDF and quantile, so this module evaluates them only
//! through the triangle's own closed forms and the truncation identities
//!
//! ```text
//! F(x)    = (G(x) - G(lo)) / (G(hi) - G(lo))
//! f(x)    = g(x) / (G(hi) - G(lo))
//! F^-1(u) = G^-1(G(lo) + u (G(hi) - G(lo)))
//! ```

use crate::error::{finite, probability, DomainViolation, Error, Result};
use crate::family::FamilyParams;
use crate::rng::UnitStream;
use crate::roof::{ResolvedSaltbox, AREA_EPS, FLAT_EPS};

/// Un-truncated triangle on `[d, e]` with apex at `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularSupport {
    pub d: f64,
    pub e: f64,
    pub c: f64,
}

/// Conditioning window `[lo, hi]` with the parent CDF at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationWindow {
    pub lo: f64,
    pub hi: f64,
    pub g_lo: f64,
    pub g_hi: f64,
}

impl TriangularSupport {
    pub fn new(d: f64, e: f64, c: f64) -> Result<Self> {
        finite("d", d)?;
        finite("e", e)?;
        finite("c", c)?;
        if !(d <= c && c < e) {
            return Err(DomainViolation::InvalidTriangle { d, c, e }.into());
        }
        Ok(Self { d, e, c })
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        tri_pdf(self, x)
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        tri_cdf(self, x)
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        tri_quantile(self, u)
    }
}

impl TruncationWindow {
    pub fn new(support: &TriangularSupport, lo: f64, hi: f64) -> Result<Self> {
        finite("lo", lo)?;
        finite("hi", hi)?;
        if !(lo < hi) {
            return Err(DomainViolation::EmptyInterval { lo, hi }.into());
        }
        let g_lo = tri_cdf(support, lo)?;
        let g_hi = tri_cdf(support, hi)?;
        let w = Self { lo, hi, g_lo, g_hi };
        w.mass()?;
        Ok(w)
    }

    /// `G(hi) - G(lo)`, rejected when it is too small to divide by.
    pub fn mass(&self) -> Result<f64> {
        let mass = self.g_hi - self.g_lo;
        if mass < AREA_EPS {
            Err(Error::DegenerateWindow { mass })
        } else {
            Ok(mass)
        }
    }
}

/// Far vertex of the parent triangle from the heights at the apex and at `b`.
///
/// Similar triangles give `e = (h_c b - h_b c) / (h_c - h_b)`; it is evaluated
/// as `b + h_b (b - c) / (h_c - h_b)`, the same quantity measured from `b`.
pub fn apex_from_heights(a: f64, b: f64, c: f64, h_c: f64, h_b: f64) -> Result<f64> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("h_c", h_c), ("h_b", h_b)] {
        finite(name, v)?;
    }
    if !(a <= c && c < b) {
        return Err(DomainViolation::ModeOutsideSupport { a, b, c }.into());
    }
    if !(h_b >= 0.0 && h_c >= h_b) {
        return Err(DomainViolation::HeightOrder { h_c, h_b }.into());
    }
    let gap = h_c - h_b;
    if gap < FLAT_EPS * h_c {
        return Err(Error::FlatShape);
    }
    Ok(b + h_b * (b - c) / gap)
}

pub fn tri_pdf(s: &TriangularSupport, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    let TriangularSupport { d, e, c } = *s;
    Ok(if x < d || x > e {
        0.0
    } else if x == c {
        2.0 / (e - d)
    } else if x < c {
        2.0 * (x - d) / ((e - d) * (c - d))
    } else {
        2.0 * (e - x) / ((e - d) * (e - c))
    })
}

pub fn tri_cdf(s: &TriangularSupport, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    let TriangularSupport { d, e, c } = *s;
    Ok(if x <= d {
        0.0
    } else if x >= e {
        1.0
    } else if x <= c {
        (x - d) * (x - d) / ((e - d) * (c - d))
    } else {
        // 1 - (e - x)^2 / ((e - d)(e - c)) with the numerator expanded so no
        // two terms near 1 are subtracted when e is far from the window
        let (p, q, r) = (x - d, x - c, e - x);
        (r * (p + q) + p * q) / ((e - d) * (e - c))
    })
}

pub fn tri_quantile(s: &TriangularSupport, u: f64) -> Result<f64> {
    probability(u)?;
    let TriangularSupport { d, e, c } = *s;
    let (long, short) = (e - d, e - c);
    let x = if u <= (c - d) / long {
        d + (u * long * (c - d)).sqrt()
    } else {
        // e - sqrt((1 - u)(e - d)(e - c)), rewritten as an offset from d:
        // (e - d)((c - d) + u (e - c)) / ((e - d) + sqrt((1 - u)(e - d)(e - c)))
        let root = ((1.0 - u) * long * short).sqrt();
        d + long * ((c - d) + u * short) / (long + root)
    };
    Ok(x.clamp(d, e))
}

pub fn truncated_cdf(s: &TriangularSupport, win: &TruncationWindow, x: f64) -> Result<f64> {
    let mass = win.mass()?;
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    Ok(if x <= win.lo {
        0.0
    } else if x >= win.hi {
        1.0
    } else {
        ((tri_cdf(s, x)? - win.g_lo) / mass).clamp(0.0, 1.0)
    })
}

pub fn truncated_pdf(s: &TriangularSupport, win: &TruncationWindow, x: f64) -> Result<f64> {
    let mass = win.mass()?;
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    if x < win.lo || x > win.hi {
        return Ok(0.0);
    }
    Ok(tri_pdf(s, x)? / mass)
}

pub fn truncated_quantile(s: &TriangularSupport, win: &TruncationWindow, u: f64) -> Result<f64> {
    let mass = win.mass()?;
    probability(u)?;
    let x = tri_quantile(s, rescaled_probability(win, mass, u))?;
    Ok(x.clamp(win.lo, win.hi))
}

fn rescaled_probability(win: &TruncationWindow, mass: f64, u: f64) -> f64 {
    (u * mass + win.g_lo).min(1.0)
}

/// Right-truncated quantile `G^-1(u G(b))` for a window starting at `d`.
pub fn one_sided_quantile(s: &TriangularSupport, g_b: f64, u: f64) -> Result<f64> {
    probability(u)?;
    tri_quantile(s, u * g_b)
}

/// The argument handed to [`tri_quantile`] by [`truncated_quantile`].
pub fn truncated_quantile_argument(win: &TruncationWindow, u: f64) -> Result<f64> {
    let mass = win.mass()?;
    probability(u)?;
    Ok(rescaled_probability(win, mass, u))
}

/// Triangle-and-window pair equivalent to a saltbox distribution.
pub fn parent_triangle(dist: &ResolvedSaltbox) -> Result<(TriangularSupport, TruncationWindow)> {
    let (a, b, c) = (dist.a(), dist.b(), dist.c());
    let e = apex_from_heights(a, b, c, dist.h_c(), dist.h_b())?;
    let support = TriangularSupport::new(a, e, c)?;
    let window = TruncationWindow::new(&support, a, b)?;
    Ok((support, window))
}

/// Which independent route produced the reference quantiles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleRoute {
    Truncation {
        support: TriangularSupport,
        window: TruncationWindow,
    },
    /// No finite apex (shed-flat boundary) or no descending side (left shed).
    ClosedForm(FamilyParams),
}

impl OracleRoute {
    pub fn for_dist(dist: &ResolvedSaltbox) -> Result<Self> {
        let (a, b, c) = (dist.a(), dist.b(), dist.c());
        if (b - c) / (b - a) < FLAT_EPS {
            return Ok(Self::ClosedForm(FamilyParams::left_shed(a, b)?));
        }
        match parent_triangle(dist) {
            Ok((support, window)) => Ok(Self::Truncation { support, window }),
            Err(Error::FlatShape) => Ok(Self::ClosedForm(FamilyParams::shed_flat(a, b, c)?)),
            Err(e) => Err(e),
        }
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        match self {
            Self::Truncation { support, window } => truncated_quantile(support, window, u),
            Self::ClosedForm(fp) => fp.quantile(u),
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        match self {
            Self::Truncation { support, window } => truncated_cdf(support, window, x),
            Self::ClosedForm(fp) => fp.cdf(x),
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        match self {
            Self::Truncation { support, window } => truncated_pdf(support, window, x),
            Self::ClosedForm(fp) => fp.pdf(x),
        }
    }
}

/// One probability fed to both quantile routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub u: f64,
    pub explicit: f64,
    pub oracle: f64,
}

impl ComparisonRow {
    pub fn abs_diff(&self) -> f64 {
        (self.explicit - self.oracle).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantileComparison {
    pub route: OracleRoute,
    pub rows: Vec<ComparisonRow>,
}

impl QuantileComparison {
    pub fn max_abs_diff(&self) -> f64 {
        self.rows.iter().map(ComparisonRow::abs_diff).fold(0.0, f64::max)
    }
}

/// Feeds `n` seeded probabilities to the explicit quantile and to the oracle.
pub fn quantile_comparison(dist: &ResolvedSaltbox, n: usize, seed: u64) -> Result<QuantileComparison> {
    let route = OracleRoute::for_dist(dist)?;
    let rows = UnitStream::new(seed)
        .take(n)
        .map(|u| {
            Ok(ComparisonRow {
                u,
                explicit: dist.quantile(u)?,
                oracle: route.quantile(u)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuantileComparison { route, rows })
}

/// Maximum absolute difference between the two quantile routes.
pub fn compare_quantiles(dist: &ResolvedSaltbox, n: usize, seed: u64) -> Result<f64> {
    Ok(quantile_comparison(dist, n, seed)?.max_abs_diff())
}
