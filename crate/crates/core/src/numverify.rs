//! Numerical cross-checks: quadrature, finite differences, bisection,
//! Kolmogorov-Smirnov distance and numerical moments.
//!
//! Nothing here knows about the roof family; every routine takes plain
//! closures so it can serve as an independent oracle.

use crate::error::{Error, Result};

/// Maximum recursion depth of the adaptive Simpson rule.
pub const MAX_DEPTH: usize = 50;
/// Evaluation budget shared by all panels of one integration.
pub const MAX_EVALUATIONS: usize = 1 << 24;
/// Tolerance used by [`moment_numeric`].
pub const MOMENT_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct Simpson<'f, F> {
    f: &'f F,
    evaluations: usize,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.evaluations += 1;
        let y = (self.f)(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite(y))
        }
    }

    fn no_convergence(&self) -> Error {
        Error::NoConvergence {
            max_depth: MAX_DEPTH,
            evaluations: self.evaluations,
        }
    }

    fn panel(&mut self, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)> {
        let mid = 0.5 * (lo + hi);
        let (f_lo, f_mid, f_hi) = (self.eval(lo)?, self.eval(mid)?, self.eval(hi)?);
        let whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
        self.refine(lo, hi, f_lo, f_mid, f_hi, whole, tol, MAX_DEPTH)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_mid: f64,
        f_hi: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> Result<(f64, f64)> {
        let mid = 0.5 * (lo + hi);
        let f_lm = self.eval(0.5 * (lo + mid))?;
        let f_rm = self.eval(0.5 * (mid + hi))?;
        let left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
        let right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi);
        let delta = left + right - whole;

        // the second test stops refinement once the difference is round-off
        let floor = 64.0 * f64::EPSILON * (left.abs() + right.abs());
        if delta.abs() <= 15.0 * tol || delta.abs() <= floor {
            return Ok((left + right + delta / 15.0, delta.abs() / 15.0));
        }
        if depth == 0 || self.evaluations >= MAX_EVALUATIONS || mid <= lo || mid >= hi {
            return Err(self.no_convergence());
        }
        let (l, el) = self.refine(lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth - 1)?;
        let (r, er) = self.refine(mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth - 1)?;
        Ok((l + r, el + er))
    }
}

/// Adaptive Simpson integration of `f` over `[lo, hi]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadratureResult> {
    integrate_with_breakpoints(f, lo, hi, &[], tol)
}

/// Adaptive Simpson integration split at the interior `breakpoints`
/// (kinks of `f`). Points outside `(lo, hi)` are ignored.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    tol: f64,
) -> Result<QuadratureResult> {
    if !lo.is_finite() {
        return Err(Error::NonFinite(lo));
    }
    if !hi.is_finite() {
        return Err(Error::NonFinite(hi));
    }
    if hi < lo {
        return Err(crate::error::DomainViolation::EmptyInterval { lo, hi }.into());
    }
    let mut knots = vec![lo];
    let mut inner: Vec<f64> = breakpoints.iter().copied().filter(|&x| x > lo && x < hi).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    knots.extend(inner);
    knots.push(hi);

    let panels = (knots.len() - 1) as f64;
    let mut simpson = Simpson { f: &f, evaluations: 0 };
    let mut value = 0.0;
    let mut error_estimate = 0.0;
    for w in knots.windows(2) {
        let (v, e) = simpson.panel(w[0], w[1], tol / panels)?;
        value += v;
        error_estimate += e;
    }
    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations: simpson.evaluations,
    })
}

/// Central difference `(F(x + h) - F(x - h)) / 2h`.
pub fn fd_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::NonPositiveStep(h));
    }
    let d = (f(x + h) - f(x - h)) / (2.0 * h);
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NonFinite(d))
    }
}

/// Bisection for `F(x) = u` on `[lo, hi]` with `F` non-decreasing.
///
/// Stops once `|F(x) - u| <= tol` or the bracket can no longer be halved.
pub fn bisect_quantile<F: Fn(f64) -> f64>(f: F, u: f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (f_lo, f_hi) = (f(lo), f(hi));
    if !(f_lo <= u && u <= f_hi) {
        return Err(Error::BracketViolation { u, f_lo, f_hi });
    }
    if f_lo == u {
        return Ok(lo);
    }
    if f_hi == u {
        return Ok(hi);
    }
    let (mut lo, mut hi) = (lo, hi);
    loop {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if (f_mid - u).abs() <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if f_mid < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Two-sided Kolmogorov-Smirnov distance between a sorted sample and `F`.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], f: F) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    if let Some(i) = samples.windows(2).position(|w| !(w[0] <= w[1])) {
        return Err(Error::UnsortedSample(i + 1));
    }
    let n = samples.len() as f64;
    Ok(samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let fx = f(x);
            let above = (i + 1) as f64 / n - fx;
            let below = fx - i as f64 / n;
            above.abs().max(below.abs())
        })
        .fold(0.0, f64::max))
}

/// `∫ x^k pdf(x) dx` over `[a, b]`, split at `breakpoints`.
pub fn moment_numeric<F: Fn(f64) -> f64>(pdf: F, a: f64, b: f64, k: i32, breakpoints: &[f64]) -> Result<f64> {
    integrate_with_breakpoints(|x| x.powi(k) * pdf(x), a, b, breakpoints, MOMENT_TOL).map(|r| r.value)
}
