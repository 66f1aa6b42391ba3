//! Command surface of the `saltbox` binary.
//!
//! Every subcommand is a deterministic data emitter. Numbers are written in
//! their shortest round-trip decimal form; CSV files use a header row, comma
//! separators and LF line endings, and are written atomically (temporary
//! file in the target directory, then rename).
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or domain error.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{finite, DomainViolation, Error};
use crate::roof::{c_limit, ResolvedSaltbox, RoofParams};
use crate::truncation::{quantile_comparison, QuantileComparison};

/// Largest quantile disagreement `validate` accepts.
pub const VALIDATE_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl From<DomainViolation> for CliError {
    fn from(v: DomainViolation) -> Self {
        Self::Domain(v.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Successful completion of a subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    /// `validate` ran but the routes disagreed beyond [`VALIDATE_TOL`].
    ValidationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Done => 0,
            Self::ValidationFailed => 1,
        }
    }
}

/// Distribution file: a flat TOML table with exactly the keys `a`, `b`, `c`, `shape`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistSpecFile {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub shape: f64,
}

impl DistSpecFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("invalid distribution file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("flat table of floats serializes")
    }

    pub fn params(&self) -> Result<RoofParams, Error> {
        RoofParams::new(self.a, self.b, self.c, self.shape)
    }
}

impl From<RoofParams> for DistSpecFile {
    fn from(p: RoofParams) -> Self {
        Self {
            a: p.a,
            b: p.b,
            c: p.c,
            shape: p.shape,
        }
    }
}

/// Quadratic `y = a2 x^2 + a1 x + a0` on `[x_m, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSpec {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub x_m: f64,
    pub x_max: f64,
}

impl CurveSpec {
    pub fn new(a0: f64, a1: f64, a2: f64, x_m: f64, x_max: f64) -> Result<Self, Error> {
        for (name, v) in [("a0", a0), ("a1", a1), ("a2", a2), ("x_m", x_m), ("x_M", x_max)] {
            finite(name, v)?;
        }
        if !(x_m < x_max) {
            return Err(DomainViolation::EmptyInterval { lo: x_m, hi: x_max }.into());
        }
        Ok(Self { a0, a1, a2, x_m, x_max })
    }

    pub fn y(&self, x: f64) -> f64 {
        (self.a2 * x + self.a1) * x + self.a0
    }

    pub fn curvature(&self, x: f64) -> Result<f64, Error> {
        curvature(x, self)
    }
}

/// Signed curvature of the quadratic: `2 a2 / (1 + (2 a2 x + a1)^2)^(3/2)`.
pub fn curvature(x: f64, curve: &CurveSpec) -> Result<f64, Error> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    let slope = 2.0 * curve.a2 * x + curve.a1;
    Ok(2.0 * curve.a2 / (1.0 + slope * slope).powf(1.5))
}

/// Non-random points placed by a distribution's quantile function.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacedPoints(pub Vec<f64>);

impl SpacedPoints {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Pushes `u_i = i / (n - 1)` through the quantile and maps the result from
/// `[a, b]` onto `[x_m, x_max]`. Both endpoints are reproduced exactly.
pub fn spaced_points(dist: &ResolvedSaltbox, n: usize, x_m: f64, x_max: f64) -> Result<SpacedPoints, Error> {
    if n < 2 {
        return Err(DomainViolation::TooFew {
            what: "point count",
            min: 2,
            got: n,
        }
        .into());
    }
    finite("x_m", x_m)?;
    finite("x_M", x_max)?;
    if !(x_m < x_max) {
        return Err(DomainViolation::EmptyInterval { lo: x_m, hi: x_max }.into());
    }
    let (a, w) = (dist.a(), dist.b() - dist.a());
    let last = n - 1;
    let points = unit_grid(n)
        .enumerate()
        .map(|(i, u)| {
            Ok(match i {
                0 => x_m,
                i if i == last => x_max,
                _ => x_m + (x_max - x_m) * ((dist.quantile(u)? - a) / w),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(SpacedPoints(points))
}

fn unit_grid(n: usize) -> impl Iterator<Item = f64> {
    let last = (n - 1) as f64;
    (0..n).map(move |i| if i + 1 == n { 1.0 } else { i as f64 / last })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub x: f64,
    pub y: f64,
    pub curvature: f64,
}

pub fn curve_rows(curve: &CurveSpec, dist: &ResolvedSaltbox, n: usize) -> Result<Vec<CurveRow>, Error> {
    spaced_points(dist, n, curve.x_m, curve.x_max)?
        .0
        .into_iter()
        .map(|x| {
            Ok(CurveRow {
                x,
                y: curve.y(x),
                curvature: curve.curvature(x)?,
            })
        })
        .collect()
}

/// `k` rows `(rho_i, c_limit(rho_i))` with `rho_i = i / (k - 1)`.
pub fn domain_grid(k: usize) -> Result<Vec<(f64, f64)>, Error> {
    if k < 2 {
        return Err(DomainViolation::TooFew {
            what: "grid size",
            min: 2,
            got: k,
        }
        .into());
    }
    unit_grid(k).map(|rho| Ok((rho, c_limit(rho)?))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

/// Equal-width bins over `[lo, hi]`; `hi` itself falls in the last bin.
pub fn histogram(samples: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Vec<HistogramBin>, Error> {
    if bins < 1 {
        return Err(DomainViolation::TooFew {
            what: "bin count",
            min: 1,
            got: bins,
        }
        .into());
    }
    if !(lo < hi) {
        return Err(DomainViolation::EmptyInterval { lo, hi }.into());
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &x in samples.iter().filter(|x| (lo..=hi).contains(*x)) {
        let i = (((x - lo) / width) as usize).min(bins - 1);
        counts[i] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| HistogramBin {
            lo: lo + width * i as f64,
            hi: if i + 1 == bins { hi } else { lo + width * (i + 1) as f64 },
            count,
        })
        .collect())
}

/// Shortest round-trip decimal; negative zero prints as `0`.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        "0".to_owned()
    } else {
        format!("{x}")
    }
}

fn csv<I, R>(header: &str, rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut out = String::new();
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

/// Writes `contents` to `path` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => stdout.write_all(contents.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

/// Path of the histogram written next to a sample file: `name.csv` becomes `name_hist.csv`.
pub fn histogram_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}_hist.csv"))
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts = parse_list(s, 2)?;
    Ok((parts[0], parts[1]))
}

fn parse_triple(s: &str) -> Result<(f64, f64, f64), String> {
    let parts = parse_list(s, 3)?;
    Ok((parts[0], parts[1], parts[2]))
}

fn parse_list(s: &str, len: usize) -> Result<Vec<f64>, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.len() != len {
        return Err(format!("expected {len} comma-separated numbers, got {}", parts.len()));
    }
    Ok(parts)
}

#[derive(Debug, Parser)]
#[command(name = "saltbox", version, about = "Saltbox-roof distribution toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Distribution parameters: an optional file, overridden flag by flag.
#[derive(Debug, Clone, Default, Args)]
pub struct DistArgs {
    /// TOML file with keys a, b, c, shape
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Lower limit
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Upper limit
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Mode
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Shape factor in [0, 1]
    #[arg(long, allow_hyphen_values = true)]
    pub shape: Option<f64>,
}

impl DistArgs {
    pub fn params(&self) -> Result<RoofParams, CliError> {
        let file = self.spec.as_deref().map(DistSpecFile::load).transpose()?;
        let pick = |name: &str, flag: Option<f64>, from_file: Option<f64>| {
            flag.or(from_file)
                .ok_or_else(|| CliError::Usage(format!("missing distribution parameter --{name}")))
        };
        let a = pick("a", self.a, file.map(|f| f.a))?;
        let b = pick("b", self.b, file.map(|f| f.b))?;
        let c = pick("c", self.c, file.map(|f| f.c))?;
        let shape = pick("shape", self.shape, file.map(|f| f.shape))?;
        Ok(RoofParams::new(a, b, c, shape)?)
    }

    pub fn resolve(&self) -> Result<ResolvedSaltbox, CliError> {
        Ok(self.params()?.resolve()?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalOp {
    Pdf,
    Cdf,
    Quantile,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print pdf(x), cdf(x) or quantile(u)
    Eval {
        #[command(flatten)]
        dist: DistArgs,
        op: EvalOp,
        #[arg(allow_hyphen_values = true)]
        value: f64,
    },
    /// Draw seeded inverse-transform samples as a one-column CSV
    Sample {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write histogram counts to <out stem>_hist.csv
        #[arg(long, requires = "out")]
        bins: Option<usize>,
    },
    /// Quantile-spaced (non-random) points on an interval
    Space {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        n: usize,
        /// x_m,x_M (defaults to [a, b])
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        interval: Option<(f64, f64)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadratic curve sampled at quantile-spaced abscissas, with curvature
    Curve {
        #[command(flatten)]
        dist: DistArgs,
        /// a2,a1,a0 for y = a2 x^2 + a1 x + a0
        #[arg(long, allow_hyphen_values = true, value_parser = parse_triple)]
        poly: (f64, f64, f64),
        /// x_m,x_M (defaults to [a, b])
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        interval: Option<(f64, f64)>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relative-mode limit for a shape, or the whole boundary curve
    #[command(group(ArgGroup::new("what").required(true).args(["rho", "grid"])))]
    Domain {
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<f64>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, requires = "grid")]
        out: Option<PathBuf>,
    },
    /// Compare the explicit quantile with the truncated-triangle route
    Validate {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-probability comparison CSV
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Eval { dist, op, value } => {
            let d = dist.resolve()?;
            let v = match op {
                EvalOp::Pdf => d.pdf(value)?,
                EvalOp::Cdf => d.cdf(value)?,
                EvalOp::Quantile => d.quantile(value)?,
            };
            emit(None, stdout, &format!("{}\n", fmt_real(v)))?;
        }
        Command::Sample {
            dist,
            n,
            seed,
            out,
            bins,
        } => {
            let d = dist.resolve()?;
            let xs = d.sample(seed, n);
            emit(out.as_deref(), stdout, &sample_csv(&xs))?;
            if let (Some(k), Some(path)) = (bins, out.as_deref()) {
                let hist = histogram(&xs, d.a(), d.b(), k)?;
                write_atomic(&histogram_path(path), &histogram_csv(&hist))?;
            }
        }
        Command::Space { dist, n, interval, out } => {
            let d = dist.resolve()?;
            let (x_m, x_max) = interval.unwrap_or((d.a(), d.b()));
            let pts = spaced_points(&d, n, x_m, x_max)?;
            let rows = unit_grid(n).zip(pts.0).map(|(u, x)| [fmt_real(u), fmt_real(x)]);
            emit(out.as_deref(), stdout, &csv("u,x", rows))?;
        }
        Command::Curve {
            dist,
            poly,
            interval,
            n,
            out,
        } => {
            let d = dist.resolve()?;
            let (x_m, x_max) = interval.unwrap_or((d.a(), d.b()));
            let (a2, a1, a0) = poly;
            let curve = CurveSpec::new(a0, a1, a2, x_m, x_max)?;
            let rows = curve_rows(&curve, &d, n)?
                .into_iter()
                .map(|r| [fmt_real(r.x), fmt_real(r.y), fmt_real(r.curvature)]);
            emit(out.as_deref(), stdout, &csv("x,y,curvature", rows))?;
        }
        Command::Domain { rho, grid, out } => match (rho, grid) {
            (Some(rho), _) => emit(None, stdout, &format!("{}\n", fmt_real(c_limit(rho)?)))?,
            (None, Some(k)) => {
                let rows = domain_grid(k)?.into_iter().map(|(r, c)| [fmt_real(r), fmt_real(c)]);
                emit(out.as_deref(), stdout, &csv("rho,c_limit", rows))?;
            }
            (None, None) => return Err(CliError::Usage("one of --rho or --grid is required".into())),
        },
        Command::Validate { dist, n, seed, out } => {
            if n < 1 {
                return Err(DomainViolation::TooFew {
                    what: "probability count",
                    min: 1,
                    got: n,
                }
                .into());
            }
            let d = dist.resolve()?;
            let cmp = quantile_comparison(&d, n, seed)?;
            if let Some(path) = out.as_deref() {
                write_atomic(path, &comparison_csv(&cmp))?;
            }
            let max = cmp.max_abs_diff();
            emit(None, stdout, &format!("{}\n", fmt_real(max)))?;
            if !(max <= VALIDATE_TOL) {
                return Ok(Outcome::ValidationFailed);
            }
        }
    }
    Ok(Outcome::Done)
}

pub fn sample_csv(xs: &[f64]) -> String {
    csv("x", xs.iter().map(|&x| [fmt_real(x)]))
}

pub fn histogram_csv(bins: &[HistogramBin]) -> String {
    csv(
        "lo,hi,count",
        bins.iter()
            .map(|b| [fmt_real(b.lo), fmt_real(b.hi), b.count.to_string()]),
    )
}

pub fn comparison_csv(cmp: &QuantileComparison) -> String {
    csv(
        "u,explicit,oracle,abs_diff",
        cmp.rows.iter().map(|r| {
            [
                fmt_real(r.u),
                fmt_real(r.explicit),
                fmt_real(r.oracle),
                fmt_real(r.abs_diff()),
            ]
        }),
    )
}
