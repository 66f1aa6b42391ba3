use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A parameter or argument fell outside the region where the family is defined.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainViolation {
    #[error("{name} = {value} is not a finite number")]
    NotFinite { name: &'static str, value: f64 },
    #[error("lower limit a = {a} must be strictly below upper limit b = {b}")]
    EmptySupport { a: f64, b: f64 },
    #[error("mode c = {c} lies outside [{a}, {b}]")]
    ModeOutsideSupport { a: f64, b: f64, c: f64 },
    #[error("shape = {0} lies outside [0, 1]")]
    ShapeOutOfRange(f64),
    #[error("relative mode {c_hat} exceeds the limit {c_limit} admitted by shape {shape}")]
    ModeBeyondLimit { c_hat: f64, c_limit: f64, shape: f64 },
    #[error("relative mode {0} lies outside [0, 1]")]
    RelativeModeOutOfRange(f64),
    #[error("probability {0} lies outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("height h_c = {h_c} lies outside [{lo}, {hi}]")]
    HeightOutOfRange { h_c: f64, lo: f64, hi: f64 },
    #[error("heights must satisfy h_c >= h_b >= 0 (h_c = {h_c}, h_b = {h_b})")]
    HeightOrder { h_c: f64, h_b: f64 },
    #[error("the saltbox shape is not one of the closed-form degenerate kinds")]
    NotDegenerate,
    #[error("triangle must satisfy d <= c < e (d = {d}, c = {c}, e = {e})")]
    InvalidTriangle { d: f64, c: f64, e: f64 },
    #[error("{what} must be at least {min}, got {got}")]
    TooFew { what: &'static str, min: usize, got: usize },
    #[error("interval [{lo}, {hi}] is empty")]
    EmptyInterval { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Domain(#[from] DomainViolation),
    #[error("argument {0} is not finite")]
    NonFinite(f64),
    #[error("mode and residual heights coincide; the un-truncated triangle has no finite apex")]
    FlatShape,
    #[error("truncation window carries no probability mass ({mass:e})")]
    DegenerateWindow { mass: f64 },
    #[error("adaptive quadrature did not converge (max depth {max_depth}, {evaluations} evaluations)")]
    NoConvergence { max_depth: usize, evaluations: usize },
    #[error("target {u} is not bracketed by [F(lo), F(hi)] = [{f_lo}, {f_hi}]")]
    BracketViolation { u: f64, f_lo: f64, f_hi: f64 },
    #[error("sample is empty")]
    EmptySample,
    #[error("sample is not sorted ascending at index {0}")]
    UnsortedSample(usize),
    #[error("step must be positive, got {0}")]
    NonPositiveStep(f64),
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64, DomainViolation> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(DomainViolation::NotFinite { name, value })
    }
}

pub(crate) fn probability(u: f64) -> Result<f64, DomainViolation> {
    if (0.0..=1.0).contains(&u) {
        Ok(u)
    } else {
        Err(DomainViolation::ProbabilityOutOfRange(u))
    }
}
