//! Recursive construction of cooperative half-guard sets.
//!
//! [`place_any`] builds `floor(n/2) - 1` guards for any simple polygon and
//! [`place_orthogonal`] builds `n/2 - 2` for orthogonal ones. Sub-solutions
//! are glued with [`attach_entire`] (an entire guard always sees some guard
//! of a monitoring set) and [`merge_aligned`] (two guards aligned to a
//! shared cut see each other).

mod general;
mod orthogonal;

use std::fmt;

use thiserror::Error;

use crate::decomp::DecompError;
use crate::geom::{GeomError, Polygon, Segment};
use crate::guard::{is_aligned, is_entire, sees_unchecked, GuardError, HalfGuard};
use crate::smallcase::SmallCaseError;

pub use general::{place_any, place_even_aligned, place_odd};
pub use orthogonal::place_orthogonal;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PlaceError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("polygon is not orthogonal")]
    NotOrthogonal,
    #[error("guard at {0} is not an entire boundary half-guard")]
    NotEntire(crate::geom::Point),
    #[error("no guard aligned to the shared segment {0:?}")]
    AlignmentMissing(Segment),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error(transparent)]
    SmallCase(#[from] SmallCaseError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

/// The construction step that placed a guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Single guard for a triangle.
    Triangle,
    /// Side-aligned guard for a quadrilateral.
    Quad,
    /// Guard monitoring the central pentagon of an odd polygon.
    Pentagon,
    /// Guard at a convex endpoint of the aligned side, above an odd-odd
    /// diagonal.
    DiagonalEndpoint,
    /// Guard where the extension of the aligned side leaves the polygon,
    /// splitting it into two odd pieces.
    CutHit,
    /// Guard at the reflex endpoint of the aligned side when its extension
    /// ends at a vertex.
    ReflexVertex,
    /// Orthogonal case: guard where a reflex extension meets an edge.
    OrthCutHit,
    /// Orthogonal case: one of the two guards on a cut between reflex
    /// vertices.
    OrthSharedCut,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Triangle => "triangle",
            Rule::Quad => "quad",
            Rule::Pentagon => "pentagon",
            Rule::DiagonalEndpoint => "diagonal-endpoint",
            Rule::CutHit => "cut-hit",
            Rule::ReflexVertex => "reflex-vertex",
            Rule::OrthCutHit => "orth-cut-hit",
            Rule::OrthSharedCut => "orth-shared-cut",
        }
    }
}

/// Where a guard came from: the rule and the recursion depth and size of
/// the sub-polygon it was placed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub rule: Rule,
    pub depth: usize,
    pub n: usize,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/depth={}/n={}", self.rule.name(), self.depth, self.n)
    }
}

/// Guards with a provenance tag each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GuardSet {
    pub guards: Vec<HalfGuard>,
    pub provenance: Vec<Provenance>,
}

impl GuardSet {
    pub fn new() -> GuardSet {
        GuardSet::default()
    }

    pub fn single(g: HalfGuard, tag: Provenance) -> GuardSet {
        GuardSet { guards: vec![g], provenance: vec![tag] }
    }

    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }

    pub fn push(&mut self, g: HalfGuard, tag: Provenance) {
        self.guards.push(g);
        self.provenance.push(tag);
    }

    pub fn extend(&mut self, other: GuardSet) {
        self.guards.extend(other.guards);
        self.provenance.extend(other.provenance);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HalfGuard, &Provenance)> {
        self.guards.iter().zip(&self.provenance)
    }

    /// First guard aligned to `t` in `p`.
    pub fn aligned_to(&self, p: &Polygon, t: &Segment) -> Option<&HalfGuard> {
        self.guards.iter().find(|g| is_aligned(p, g, t))
    }
}

/// Adds the entire boundary guard `g` to a set that monitors `p`.
pub fn attach_entire(p: &Polygon, mut set: GuardSet, g: HalfGuard, tag: Provenance) -> Result<GuardSet, PlaceError> {
    require_entire(p, &g)?;
    set.push(g, tag);
    Ok(set)
}

fn require_entire(p: &Polygon, g: &HalfGuard) -> Result<(), PlaceError> {
    if !is_entire(p, g)? {
        return Err(PlaceError::NotEntire(g.pos.clone()));
    }
    Ok(())
}

/// Unites sets for the two pieces `p1`, `p2` of `p` that meet along `s`,
/// each of which has a guard aligned to `s`.
///
/// The aligned guards are checked to see each other in `p`.
pub fn merge_aligned(
    p: &Polygon,
    p1: &Polygon,
    mut g1: GuardSet,
    p2: &Polygon,
    g2: GuardSet,
    s: &Segment,
) -> Result<GuardSet, PlaceError> {
    check_aligned_pair(p, p1, &g1, p2, &g2, s)?;
    g1.extend(g2);
    Ok(g1)
}

fn check_aligned_pair(
    p: &Polygon,
    p1: &Polygon,
    g1: &GuardSet,
    p2: &Polygon,
    g2: &GuardSet,
    s: &Segment,
) -> Result<(), PlaceError> {
    let a = g1.aligned_to(p1, s).ok_or_else(|| PlaceError::AlignmentMissing(s.clone()))?;
    let b = g2.aligned_to(p2, s).ok_or_else(|| PlaceError::AlignmentMissing(s.clone()))?;
    if !(sees_unchecked(p, a, &b.pos) && sees_unchecked(p, b, &a.pos)) {
        return Err(PlaceError::InvariantViolated(format!(
            "guards at {} and {} aligned to a shared cut do not see each other",
            a.pos, b.pos
        )));
    }
    Ok(())
}

fn check_sides(what: &str, got: usize, want: usize) -> Result<(), PlaceError> {
    if got != want {
        return Err(PlaceError::InvariantViolated(format!("{what}: pieces have {got} sides in total, expected {want}")));
    }
    Ok(())
}
