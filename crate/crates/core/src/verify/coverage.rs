//! Exact coverage by vertical slab decomposition.
//!
//! The polygon boundary and the boundary rings of every visibility region
//! are cut into vertical slabs at every endpoint and crossing. Inside a slab
//! no two segments cross, so each gap between consecutive segments is an
//! open trapezoid lying either inside or outside each region; crossing
//! parity per region decides which.

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::geom::{segments_cross_properly, Point, Polygon, Rat};
use crate::guard::{visibility_region, HalfGuard};

/// A polygon given by an outer counter-clockwise ring and clockwise holes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonWithHoles {
    pub outer: Vec<Point>,
    pub holes: Vec<Vec<Point>>,
}

impl PolygonWithHoles {
    /// An interior point of the outer ring for trapezoid pieces.
    pub fn witness(&self) -> Point {
        let k = self.outer.len() as i64;
        let mut sx = Rat::from_integer(0.into());
        let mut sy = sx.clone();
        for p in &self.outer {
            sx += &p.x;
            sy += &p.y;
        }
        Point::new(sx / Rat::from_integer(k.into()), sy / Rat::from_integer(k.into()))
    }
}

struct Seg {
    lo: Point,
    hi: Point,
    owner: usize,
}

impl Seg {
    fn y_at(&self, x: &Rat) -> Rat {
        &self.lo.y + (&self.hi.y - &self.lo.y) * (x - &self.lo.x) / (&self.hi.x - &self.lo.x)
    }

    fn y_at_f64(&self, x: f64) -> f64 {
        let (x0, y0) = self.lo.to_f64();
        let (x1, y1) = self.hi.to_f64();
        y0 + (y1 - y0) * ((x - x0) / (x1 - x0))
    }
}

fn collect_segments(p: &Polygon, rings: &[(usize, Vec<Point>)]) -> Vec<Seg> {
    let mut segs = Vec::new();
    let mut push = |a: &Point, b: &Point, owner: usize| {
        if a.x == b.x {
            return;
        }
        let (lo, hi) = if a.x < b.x { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        segs.push(Seg { lo, hi, owner });
    };
    for (a, b) in p.edges() {
        push(a, b, 0);
    }
    for (owner, ring) in rings {
        let k = ring.len();
        for i in 0..k {
            push(&ring[i], &ring[(i + 1) % k], *owner);
        }
    }
    segs
}

fn crossing_xs(segs: &[Seg]) -> Vec<Rat> {
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| segs[i].lo.x.cmp(&segs[j].lo.x));
    let mut xs = Vec::new();
    for (oi, &i) in order.iter().enumerate() {
        let si = &segs[i];
        let (ylo_i, yhi_i) = f64_yrange(si);
        for &j in &order[oi + 1..] {
            let sj = &segs[j];
            if sj.lo.x >= si.hi.x {
                break;
            }
            let (ylo_j, yhi_j) = f64_yrange(sj);
            if ylo_j > yhi_i || ylo_i > yhi_j {
                continue;
            }
            if segments_cross_properly(&si.lo, &si.hi, &sj.lo, &sj.hi) {
                xs.push(intersection_x(si, sj));
            }
        }
    }
    xs
}

fn f64_yrange(s: &Seg) -> (f64, f64) {
    let a = s.lo.to_f64().1;
    let b = s.hi.to_f64().1;
    let slack = 1e-9 * (1.0 + a.abs().max(b.abs()));
    (a.min(b) - slack, a.max(b) + slack)
}

fn intersection_x(s: &Seg, t: &Seg) -> Rat {
    let d1 = &s.hi - &s.lo;
    let d2 = &t.hi - &t.lo;
    let den = crate::geom::cross(&d1, &d2);
    let u = crate::geom::cross(&(&t.lo - &s.lo), &d2) / den;
    &s.lo.x + d1.x * u
}

/// Ordering of active segments at a slab's middle abscissa. Approximate
/// values decide when they differ by more than their error bounds;
/// otherwise exact values are computed on demand.
struct SlabOrder<'a> {
    segs: &'a [Seg],
    xm: Rat,
    approx: Vec<f64>,
    err: Vec<f64>,
    exact: Vec<OnceLock<Rat>>,
}

impl<'a> SlabOrder<'a> {
    fn new(segs: &'a [Seg], active: &[usize], xm: Rat) -> Self {
        let fx = crate::geom::approx(&xm);
        let mut approx = Vec::with_capacity(active.len());
        let mut err = Vec::with_capacity(active.len());
        for &i in active {
            let s = &segs[i];
            let (x0, y0) = s.lo.to_f64();
            let (x1, y1) = s.hi.to_f64();
            approx.push(s.y_at_f64(fx));
            let spread = (x0.abs() + x1.abs() + fx.abs()) / (x1 - x0);
            err.push(1e-12 * (1.0 + y0.abs() + y1.abs()) * (1.0 + spread));
        }
        let exact = active.iter().map(|_| OnceLock::new()).collect();
        SlabOrder { segs, xm, approx, err, exact }
    }

    fn exact(&self, k: usize, seg: usize) -> &Rat {
        self.exact[k].get_or_init(|| self.segs[seg].y_at(&self.xm))
    }

    fn cmp(&self, a: (usize, usize), b: (usize, usize)) -> Ordering {
        let (ka, sa) = a;
        let (kb, sb) = b;
        let (ya, yb) = (self.approx[ka], self.approx[kb]);
        let tol = self.err[ka] + self.err[kb];
        if tol.is_finite() && ya.is_finite() && yb.is_finite() && (ya - yb).abs() > tol {
            return ya.partial_cmp(&yb).expect("finite");
        }
        self.exact(ka, sa).cmp(self.exact(kb, sb))
    }
}

/// The parts of `P` seen by no guard, as trapezoids. Empty exactly when
/// the guards' closed visibility regions cover `P`.
pub fn uncovered_region(p: &Polygon, guards: &[HalfGuard]) -> Vec<PolygonWithHoles> {
    let rings: Vec<(usize, Vec<Point>)> = guards
        .iter()
        .enumerate()
        .flat_map(|(g, gd)| visibility_region(p, gd).rings().into_iter().map(move |r| (g + 1, r)))
        .collect();
    let owners = guards.len() + 1;
    let segs = collect_segments(p, &rings);
    let mut xs: Vec<Rat> = segs.iter().flat_map(|s| [s.lo.x.clone(), s.hi.x.clone()]).collect();
    xs.extend(crossing_xs(&segs));
    xs.sort();
    xs.dedup();

    let mut by_start: Vec<usize> = (0..segs.len()).collect();
    by_start.sort_by(|&i, &j| segs[i].lo.x.cmp(&segs[j].lo.x));
    let mut next_start = 0;
    let mut active: Vec<usize> = Vec::new();
    let two = Rat::from_integer(2.into());
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        active.retain(|&i| &segs[i].hi.x > x0);
        while next_start < by_start.len() && &segs[by_start[next_start]].lo.x <= x0 {
            let i = by_start[next_start];
            if &segs[i].hi.x > x0 {
                active.push(i);
            }
            next_start += 1;
        }
        if active.is_empty() {
            continue;
        }
        let xm = (x0 + x1) / &two;
        let order = SlabOrder::new(&segs, &active, xm.clone());
        let mut idx: Vec<(usize, usize)> = active.iter().copied().enumerate().collect();
        idx.sort_by(|&a, &b| order.cmp(a, b));
        let mut parity = vec![false; owners];
        let mut k = 0;
        while k < idx.len() {
            let mut end = k + 1;
            while end < idx.len() && order.cmp(idx[k], idx[end]) == Ordering::Equal {
                end += 1;
            }
            for &(_, s) in &idx[k..end] {
                parity[segs[s].owner] ^= true;
            }
            if end < idx.len() && parity[0] && !parity[1..].iter().any(|&b| b) {
                let lower = &segs[idx[k].1];
                let upper = &segs[idx[end].1];
                out.push(trapezoid(lower, upper, x0, x1));
            }
            k = end;
        }
    }
    out
}

fn trapezoid(lower: &Seg, upper: &Seg, x0: &Rat, x1: &Rat) -> PolygonWithHoles {
    let mut ring = vec![
        Point::new(x0.clone(), lower.y_at(x0)),
        Point::new(x1.clone(), lower.y_at(x1)),
        Point::new(x1.clone(), upper.y_at(x1)),
        Point::new(x0.clone(), upper.y_at(x0)),
    ];
    ring.dedup();
    if ring.first() == ring.last() && ring.len() > 1 {
        ring.pop();
    }
    PolygonWithHoles { outer: ring, holes: vec![] }
}
