//! The `halfguard` command-line tool.
//!
//! Exit codes: 0 success, 2 bad input, 3 the construction hit a degenerate
//! configuration, 4 a verification check or internal invariant failed.

pub mod batch;
pub mod format;
pub mod svg;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use halfguard::geom::{Polygon, Segment};
use halfguard::guard::HalfGuard;
use halfguard::place::{place_any, place_even_aligned, place_orthogonal, GuardSet, PlaceError};
use halfguard::verify::{verify_report_with, VerifyOptions};

use format::{read_guards, read_polygon, write_json, GuardFile, ReportJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// An error carrying the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn usage(error: impl Into<anyhow::Error>) -> Failure {
        Failure { code: EXIT_USAGE, error: error.into() }
    }
}

impl From<PlaceError> for Failure {
    fn from(e: PlaceError) -> Failure {
        Failure { code: place_exit_code(&e), error: e.into() }
    }
}

pub fn place_exit_code(e: &PlaceError) -> i32 {
    match e {
        PlaceError::PreconditionViolated(_) | PlaceError::NotOrthogonal => EXIT_USAGE,
        PlaceError::Geom(_) | PlaceError::Guard(_) | PlaceError::SmallCase(_) | PlaceError::Decomp(_) => EXIT_CONSTRUCTION,
        PlaceError::NotEntire(_) | PlaceError::AlignmentMissing(_) | PlaceError::InvariantViolated(_) => EXIT_VERIFY,
    }
}

#[derive(Parser, Debug)]
#[command(name = "halfguard", version, about = "Cooperative half-guard placement and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Simple,
    Orthogonal,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Place guards in a polygon and write them with a verification report.
    Place {
        input: PathBuf,
        /// Use the orthogonal construction with n/2 - 2 guards.
        #[arg(long)]
        orthogonal: bool,
        /// Require a guard aligned to side K (even n only).
        #[arg(long, value_name = "K", conflicts_with = "orthogonal")]
        align_side: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a guard file against a polygon and print the report.
    Verify {
        polygon: PathBuf,
        guards: PathBuf,
        /// Always compute coverage exactly, whatever the polygon size.
        #[arg(long)]
        exact: bool,
        /// Interior samples per unit area when coverage is sampled.
        #[arg(long, value_name = "D")]
        density: Option<f64>,
        /// Required number of guards.
        #[arg(long, value_name = "B")]
        bound: Option<usize>,
        /// Also require a guard aligned to side K.
        #[arg(long, value_name = "K")]
        align_side: Option<usize>,
    },
    /// Draw a polygon and optional guards as SVG.
    Render {
        polygon: PathBuf,
        #[arg(long)]
        guards: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Shade each guard's visibility region.
        #[arg(long)]
        regions: bool,
    },
    /// Generate, place and verify a corpus; one CSV row per instance.
    Batch {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Inclusive range of sizes, written `A..B`.
        #[arg(long, value_name = "A..B")]
        n_range: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "D")]
        density: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, Failure> {
    match cmd {
        Command::Place { input, orthogonal, align_side, out } => cmd_place(&input, orthogonal, align_side, out.as_deref()),
        Command::Verify { polygon, guards, exact, density, bound, align_side } => {
            cmd_verify(&polygon, &guards, exact, density, bound, align_side)
        }
        Command::Render { polygon, guards, out, regions } => cmd_render(&polygon, guards.as_deref(), &out, regions),
        Command::Batch { mode, n_range, count, seed, density, out } => {
            batch::cmd_batch(mode, &n_range, count, seed, density, out.as_deref())
        }
    }
}

/// Verification settings from the environment with an optional density.
pub fn verify_options(density: Option<f64>) -> Result<VerifyOptions, Failure> {
    let mut opts = VerifyOptions::from_env();
    if let Some(d) = density {
        if !(d.is_finite() && d > 0.0) {
            return Err(Failure::usage(anyhow::anyhow!("density must be positive, got {d}")));
        }
        opts.density = d;
    }
    Ok(opts)
}

/// The guard count the matching construction achieves.
pub fn guard_bound(n: usize, orthogonal: bool) -> usize {
    match (n, orthogonal) {
        (3, false) => 1,
        (_, false) => n / 2 - 1,
        (_, true) => n / 2 - 2,
    }
}

fn side(p: &Polygon, k: usize) -> Result<Segment, Failure> {
    if k >= p.n() {
        return Err(Failure::usage(anyhow::anyhow!("side {k} out of range for {} sides", p.n())));
    }
    Ok(p.edge(k))
}

/// Places guards with the construction selected by the flags.
pub fn place(p: &Polygon, orthogonal: bool, align_side: Option<usize>) -> Result<GuardSet, Failure> {
    if orthogonal {
        return Ok(place_orthogonal(p)?);
    }
    match align_side {
        Some(k) => {
            if p.n() % 2 == 1 {
                return Err(Failure::usage(anyhow::anyhow!("--align-side needs an even number of sides, got {}", p.n())));
            }
            side(p, k)?;
            Ok(place_even_aligned(p, k)?)
        }
        None => Ok(place_any(p)?),
    }
}

fn cmd_place(input: &Path, orthogonal: bool, align_side: Option<usize>, out: Option<&Path>) -> Result<i32, Failure> {
    let p = read_polygon(input).map_err(Failure::usage)?;
    let set = place(&p, orthogonal, align_side)?;
    let align = align_side.map(|k| p.edge(k));
    let report = verify_report_with(&p, &set.guards, guard_bound(p.n(), orthogonal), align.as_ref(), &VerifyOptions::from_env());
    write_json(&GuardFile::new(&set, &report), out).map_err(Failure::usage)?;
    if !report.ok() {
        eprintln!("error: verification failed: {:?}", report);
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    polygon: &Path,
    guards: &Path,
    exact: bool,
    density: Option<f64>,
    bound: Option<usize>,
    align_side: Option<usize>,
) -> Result<i32, Failure> {
    let p = read_polygon(polygon).map_err(Failure::usage)?;
    let (file, gs) = read_guards(guards).map_err(Failure::usage)?;
    require_inside(&p, &gs)?;
    let mut opts = verify_options(density)?;
    if exact {
        opts.exact_max_n = usize::MAX;
    }
    let bound = bound
        .or_else(|| file.report.as_ref().map(|r| r.cardinality.bound))
        .unwrap_or_else(|| guard_bound(p.n(), false));
    let align = align_side.map(|k| side(&p, k)).transpose()?;
    let report = verify_report_with(&p, &gs, bound, align.as_ref(), &opts);
    write_json(&ReportJson::from_report(&report), None).map_err(Failure::usage)?;
    Ok(if report.ok() { EXIT_OK } else { EXIT_VERIFY })
}

fn require_inside(p: &Polygon, guards: &[HalfGuard]) -> Result<(), Failure> {
    match guards.iter().find(|g| !p.contains(&g.pos)) {
        Some(g) => Err(Failure::usage(anyhow::anyhow!("guard at {} lies outside the polygon", g.pos))),
        None => Ok(()),
    }
}

fn cmd_render(polygon: &Path, guards: Option<&Path>, out: &Path, regions: bool) -> Result<i32, Failure> {
    let p = read_polygon(polygon).map_err(Failure::usage)?;
    let gs = match guards {
        Some(path) => read_guards(path).map_err(Failure::usage)?.1,
        None => Vec::new(),
    };
    require_inside(&p, &gs)?;
    std::fs::write(out, svg::render(&p, &gs, regions))
        .map_err(|e| Failure::usage(anyhow::Error::new(e).context(format!("writing {}", out.display()))))?;
    Ok(EXIT_OK)
}
