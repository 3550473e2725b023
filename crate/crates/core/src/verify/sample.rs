//! Seeded sampling falsifier for coverage.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{approx, int, rat, Location, Point, Polygon, Rat};
use crate::guard::{sees_unchecked, FastPolygon, HalfGuard};

use super::VerifyError;

/// Outcome of a sampling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleOutcome {
    SampledOk(usize),
    Refuted(Point),
}

const GRID: i64 = 1 << 20;

/// Structured samples: vertices, edge midpoints, and points at a small
/// offset in eight directions around every vertex and guard position,
/// kept when inside `P`.
pub fn structured_samples(p: &Polygon, guards: &[HalfGuard]) -> Vec<Point> {
    let (lo, hi) = p.bbox();
    let span = if &hi.x - &lo.x > &hi.y - &lo.y { &hi.x - &lo.x } else { &hi.y - &lo.y };
    let delta = span / int(1000);
    let dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
    let mut out: Vec<Point> = p.vertices().to_vec();
    out.extend(p.edges().map(|(a, b)| a.midpoint(b)));
    let centers = p.vertices().iter().chain(guards.iter().map(|g| &g.pos));
    for c in centers {
        out.push(c.clone());
        for (dx, dy) in dirs {
            let q = Point::new(&c.x + &delta * int(dx), &c.y + &delta * int(dy));
            if p.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}

/// Uniform samples inside `P` by rejection from the bounding box, on a
/// dyadic grid of `2^20` steps per axis.
pub fn interior_samples(p: &Polygon, count: usize, seed: u64) -> Vec<Point> {
    let grid = Grid::new(p);
    let fast = FastPolygon::new(p, grid.scale);
    grid.draw(p, fast.as_ref(), count, seed).iter().map(|&(kx, ky)| grid.exact(kx, ky)).collect()
}

/// Bounding-box lattice that interior samples are drawn from.
struct Grid {
    lo: Point,
    w: Rat,
    h: Rat,
    flo: (f64, f64),
    fwh: (f64, f64),
    scale: f64,
}

impl Grid {
    fn new(p: &Polygon) -> Grid {
        let (lo, hi) = p.bbox();
        let w = &hi.x - &lo.x;
        let h = &hi.y - &lo.y;
        let scale = lo.max_abs_f64().max(hi.max_abs_f64());
        Grid { flo: lo.to_f64(), fwh: (approx(&w), approx(&h)), lo, w, h, scale }
    }

    fn exact(&self, kx: i64, ky: i64) -> Point {
        Point::new(&self.lo.x + &self.w * rat(kx, GRID), &self.lo.y + &self.h * rat(ky, GRID))
    }

    fn approx(&self, kx: i64, ky: i64) -> (f64, f64) {
        let g = GRID as f64;
        (self.flo.0 + self.fwh.0 * (kx as f64 / g), self.flo.1 + self.fwh.1 * (ky as f64 / g))
    }

    fn draw(&self, p: &Polygon, fast: Option<&FastPolygon>, count: usize, seed: u64) -> Vec<(i64, i64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        let mut tries = 0usize;
        while out.len() < count && tries < 1000 * (count + 1) {
            tries += 1;
            let kx = rng.gen_range(0..=GRID);
            let ky = rng.gen_range(0..=GRID);
            let (x, y) = self.approx(kx, ky);
            let inside = match fast.and_then(|f| f.inside(x, y)) {
                Some(b) => b,
                None => p.contains(&self.exact(kx, ky)),
            };
            if inside {
                out.push((kx, ky));
            }
        }
        out
    }
}

/// Number of interior samples for a density in points per unit area.
pub fn sample_count(p: &Polygon, density: f64) -> usize {
    let area = p.area().to_f64().unwrap_or(0.0);
    (density * area).ceil().max(1.0) as usize
}

struct Sampler<'a> {
    p: &'a Polygon,
    guards: &'a [HalfGuard],
    locs: Vec<Location>,
    fast: Option<FastPolygon>,
    last: usize,
}

impl Sampler<'_> {
    fn seen_by(&self, i: usize, exact: &dyn Fn() -> Point, xy: (f64, f64)) -> bool {
        let g = &self.guards[i];
        match self.fast.as_ref().and_then(|f| f.sees(self.p, g, self.locs[i], xy.0, xy.1)) {
            Some(b) => b,
            None => sees_unchecked(self.p, g, &exact()),
        }
    }

    fn seen(&mut self, exact: &dyn Fn() -> Point, xy: (f64, f64)) -> bool {
        if self.seen_by(self.last, exact, xy) {
            return true;
        }
        match (0..self.guards.len()).find(|&i| i != self.last && self.seen_by(i, exact, xy)) {
            Some(i) => {
                self.last = i;
                true
            }
            None => false,
        }
    }
}

/// Tests `sees` over seeded interior samples plus structured samples and
/// returns the first unseen point.
pub fn sample_coverage(p: &Polygon, guards: &[HalfGuard], density: f64, seed: u64) -> Result<SampleOutcome, VerifyError> {
    if density.is_nan() || density <= 0.0 || density.is_infinite() {
        return Err(VerifyError::InvalidDensity(density));
    }
    let structured = structured_samples(p, guards);
    if guards.is_empty() {
        return Ok(SampleOutcome::Refuted(structured[0].clone()));
    }
    let grid = Grid::new(p);
    let mut s = Sampler {
        p,
        guards,
        locs: guards.iter().map(|g| p.locate(&g.pos)).collect(),
        fast: FastPolygon::new(p, grid.scale),
        last: 0,
    };
    for y in &structured {
        if !s.seen(&|| y.clone(), y.to_f64()) {
            return Ok(SampleOutcome::Refuted(y.clone()));
        }
    }
    let cells = grid.draw(p, s.fast.as_ref(), sample_count(p, density), seed);
    for &(kx, ky) in &cells {
        if !s.seen(&|| grid.exact(kx, ky), grid.approx(kx, ky)) {
            return Ok(SampleOutcome::Refuted(grid.exact(kx, ky)));
        }
    }
    Ok(SampleOutcome::SampledOk(structured.len() + cells.len()))
}
