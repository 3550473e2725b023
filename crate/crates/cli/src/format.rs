//! JSON documents for polygons, guard sets and verification reports.
//!
//! Every rational is written as a `"num"` or `"num/den"` string so that a
//! file round-trips without rounding.

use std::path::Path;

use anyhow::{anyhow, Context};
use halfguard::geom::{format_rat, parse_rat, validate_polygon, Point, Polygon, Segment};
use halfguard::guard::{HalfGuard, HalfPlane};
use halfguard::place::GuardSet;
use halfguard::verify::{Covered, VerifyReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub vertices: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuardEntry {
    pub x: String,
    pub y: String,
    pub halfplane: [String; 3],
    #[serde(default)]
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuardFile {
    pub guards: Vec<GuardEntry>,
    #[serde(default)]
    pub visibility_edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub ok: bool,
    pub covered: CoveredJson,
    pub connected: bool,
    pub cardinality: CardinalityJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aligned_to: Option<AlignedJson>,
    pub visibility_edges: Vec<[usize; 2]>,
}

/// `status` is one of `proved_exact`, `sampled_ok` or `refuted`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveredJson {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardinalityJson {
    pub actual: usize,
    pub bound: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignedJson {
    pub side: [[String; 2]; 2],
    pub ok: bool,
}

fn point_json(p: &Point) -> [String; 2] {
    [format_rat(&p.x), format_rat(&p.y)]
}

fn parse_point(xy: &[String; 2]) -> anyhow::Result<Point> {
    let coord = |s: &str| parse_rat(s).ok_or_else(|| anyhow!("invalid rational {s:?}"));
    Ok(Point::new(coord(&xy[0])?, coord(&xy[1])?))
}

impl InstanceFile {
    pub fn from_polygon(p: &Polygon) -> InstanceFile {
        InstanceFile { vertices: p.vertices().iter().map(point_json).collect() }
    }

    /// Parses and validates, normalizing to counter-clockwise order.
    pub fn to_polygon(&self) -> anyhow::Result<Polygon> {
        let vs = self.vertices.iter().map(parse_point).collect::<anyhow::Result<Vec<_>>>()?;
        Ok(validate_polygon(vs)?)
    }
}

impl GuardEntry {
    pub fn from_guard(g: &HalfGuard, provenance: String) -> GuardEntry {
        let (a, b, c) = g.hp.coeffs();
        GuardEntry {
            x: format_rat(&g.pos.x),
            y: format_rat(&g.pos.y),
            halfplane: [a.to_string(), b.to_string(), c.to_string()],
            provenance,
        }
    }

    pub fn to_guard(&self) -> anyhow::Result<HalfGuard> {
        let pos = parse_point(&[self.x.clone(), self.y.clone()])?;
        let coeff = |s: &str| s.trim().parse::<BigInt>().map_err(|_| anyhow!("invalid integer {s:?}"));
        let [a, b, c] = &self.halfplane;
        let hp = HalfPlane::new(coeff(a)?, coeff(b)?, coeff(c)?).ok_or_else(|| anyhow!("half-plane normal is zero"))?;
        Ok(HalfGuard::new(pos, hp)?)
    }
}

impl ReportJson {
    pub fn from_report(r: &VerifyReport) -> ReportJson {
        let covered = match &r.covered {
            Covered::ProvedExact => CoveredJson { status: "proved_exact".into(), samples: None, witness: None },
            Covered::SampledOk(k) => CoveredJson { status: "sampled_ok".into(), samples: Some(*k), witness: None },
            Covered::Refuted(w) => CoveredJson { status: "refuted".into(), samples: None, witness: Some(point_json(w)) },
        };
        ReportJson {
            ok: r.ok(),
            covered,
            connected: r.connected,
            cardinality: CardinalityJson { actual: r.cardinality.actual, bound: r.cardinality.bound, ok: r.cardinality.ok },
            aligned_to: r.aligned_to.as_ref().map(|(s, ok): &(Segment, bool)| AlignedJson {
                side: [point_json(&s.a), point_json(&s.b)],
                ok: *ok,
            }),
            visibility_edges: edges_json(&r.visibility_edges),
        }
    }
}

fn edges_json(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(i, j)| [i, j]).collect()
}

impl GuardFile {
    pub fn new(set: &GuardSet, report: &VerifyReport) -> GuardFile {
        GuardFile {
            guards: set.iter().map(|(g, t)| GuardEntry::from_guard(g, t.to_string())).collect(),
            visibility_edges: edges_json(&report.visibility_edges),
            report: Some(ReportJson::from_report(report)),
        }
    }

    pub fn to_guards(&self) -> anyhow::Result<Vec<HalfGuard>> {
        self.guards
            .iter()
            .enumerate()
            .map(|(i, e)| e.to_guard().with_context(|| format!("guard {i}")))
            .collect()
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_polygon(path: &Path) -> anyhow::Result<Polygon> {
    let file: InstanceFile = read_json(path)?;
    file.to_polygon().with_context(|| format!("invalid polygon in {}", path.display()))
}

pub fn read_guards(path: &Path) -> anyhow::Result<(GuardFile, Vec<HalfGuard>)> {
    let file: GuardFile = read_json(path)?;
    let guards = file.to_guards().with_context(|| format!("invalid guard in {}", path.display()))?;
    Ok((file, guards))
}

/// Pretty JSON with a trailing newline, to `out` or standard output.
pub fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
