//! Independent checks of guard sets: coverage, mutual visibility,
//! cardinality and alignment.

mod coverage;
mod graph;
mod sample;

pub use coverage::{uncovered_region, PolygonWithHoles};
pub use graph::{is_connected, mutual_visibility_graph, VisibilityGraph};
pub use sample::{interior_samples, sample_count, sample_coverage, structured_samples, SampleOutcome};

use thiserror::Error;

use crate::geom::{Point, Polygon, Segment};
use crate::guard::{is_aligned, HalfGuard};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("sample density must be positive and finite, got {0}")]
    InvalidDensity(f64),
}

/// How the coverage claim was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covered {
    ProvedExact,
    SampledOk(usize),
    Refuted(Point),
}

impl Covered {
    pub fn ok(&self) -> bool {
        !matches!(self, Covered::Refuted(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cardinality {
    pub actual: usize,
    pub bound: usize,
    /// The construction meets its bound with equality.
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub covered: Covered,
    pub connected: bool,
    pub cardinality: Cardinality,
    /// Requested alignment side and whether some guard is aligned to it.
    pub aligned_to: Option<(Segment, bool)>,
    pub visibility_edges: Vec<(usize, usize)>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.covered.ok() && self.connected && self.cardinality.ok && self.aligned_to.as_ref().is_none_or(|(_, a)| *a)
    }
}

/// Settings for [`verify_report_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Largest `n` for which exact coverage is computed.
    pub exact_max_n: usize,
    /// Interior samples per unit area when sampling.
    pub density: f64,
    pub seed: u64,
}

pub const DEFAULT_EXACT_MAX_N: usize = 40;
pub const DEFAULT_DENSITY: f64 = 50.0;

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exact_max_n: DEFAULT_EXACT_MAX_N, density: DEFAULT_DENSITY, seed: 0 }
    }
}

impl VerifyOptions {
    /// Defaults, with the exact-coverage size cap read from `HG_EXACT_MAX_N`.
    pub fn from_env() -> Self {
        let exact_max_n = std::env::var("HG_EXACT_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_EXACT_MAX_N);
        VerifyOptions { exact_max_n, ..Default::default() }
    }
}

/// Exact coverage as a report field.
pub fn exact_coverage(p: &Polygon, guards: &[HalfGuard]) -> Covered {
    match uncovered_region(p, guards).first() {
        None => Covered::ProvedExact,
        Some(piece) => Covered::Refuted(piece.witness()),
    }
}

pub fn verify_report(p: &Polygon, guards: &[HalfGuard], bound: usize, align: Option<&Segment>) -> VerifyReport {
    verify_report_with(p, guards, bound, align, &VerifyOptions::from_env())
}

pub fn verify_report_with(
    p: &Polygon,
    guards: &[HalfGuard],
    bound: usize,
    align: Option<&Segment>,
    opts: &VerifyOptions,
) -> VerifyReport {
    let covered = if p.n() <= opts.exact_max_n {
        exact_coverage(p, guards)
    } else {
        match sample_coverage(p, guards, opts.density, opts.seed) {
            Ok(SampleOutcome::SampledOk(k)) => Covered::SampledOk(k),
            Ok(SampleOutcome::Refuted(w)) => Covered::Refuted(w),
            Err(e) => panic!("invalid verify options: {e}"),
        }
    };
    let graph = mutual_visibility_graph(p, guards);
    let connected = is_connected(&graph);
    let aligned_to = align.map(|t| (t.clone(), guards.iter().any(|g| is_aligned(p, g, t))));
    VerifyReport {
        covered,
        connected,
        cardinality: Cardinality { actual: guards.len(), bound, ok: guards.len() == bound },
        aligned_to,
        visibility_edges: graph.edges,
    }
}
