//! Seeded generators for random simple and orthogonal polygons.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{angle_cmp, int, orientation, pt, segments_intersect, validate_polygon, Point, Polygon, Rat};

const MAX_ATTEMPTS: usize = 200;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator argument: {0}")]
    InvalidArgument(String),
    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),
}

fn rng_for(n: usize, seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 32) ^ salt)
}

/// Random simple `n`-gon on a `4n x 4n` integer grid, deterministic per
/// `(n, seed)`. No three vertices are collinear.
pub fn gen_simple(n: usize, seed: u64) -> Result<Polygon, GenError> {
    if n < 3 {
        return Err(GenError::InvalidArgument(format!("n = {n} < 3")));
    }
    let mut rng = rng_for(n, seed, 1);
    let g = 4 * n as i64;
    for _ in 0..MAX_ATTEMPTS {
        let Some(pts) = general_position_points(&mut rng, n, g) else { continue };
        let mut ring = radial_order(pts);
        if !untangle(&mut ring) {
            continue;
        }
        if let Ok(p) = validate_polygon(ring) {
            return Ok(p);
        }
    }
    Err(GenError::GenerationFailed(MAX_ATTEMPTS))
}

fn general_position_points(rng: &mut ChaCha8Rng, n: usize, g: i64) -> Option<Vec<Point>> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut tries = 0;
    while pts.len() < n {
        tries += 1;
        if tries > 50 * n {
            return None;
        }
        let c = pt(rng.gen_range(0..=g), rng.gen_range(0..=g));
        if pts.contains(&c) {
            continue;
        }
        let collinear = (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| orientation(&pts[i], &pts[j], &c) == 0));
        if !collinear {
            pts.push(c);
        }
    }
    Some(pts)
}

fn radial_order(pts: Vec<Point>) -> Vec<Point> {
    let n = pts.len() as i64;
    let mut sx = int(0);
    let mut sy = int(0);
    for p in &pts {
        sx += &p.x;
        sy += &p.y;
    }
    let c = Point::new(sx / int(n), sy / int(n));
    let mut keyed: Vec<(Point, Point)> = pts.into_iter().map(|p| (&p - &c, p)).collect();
    keyed.sort_by(|a, b| {
        match (a.0.is_zero(), b.0.is_zero()) {
            (false, false) => angle_cmp(&a.0, &b.0).then_with(|| a.1.cmp(&b.1)),
            (za, zb) => zb.cmp(&za),
        }
    });
    keyed.into_iter().map(|(_, p)| p).collect()
}

/// Repeated 2-opt moves until no two edges cross. Returns false if the
/// iteration cap is hit.
fn untangle(ring: &mut [Point]) -> bool {
    let n = ring.len();
    for _ in 0..(20 * n * n) {
        let mut found = None;
        'scan: for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segments_intersect(&ring[i], &ring[(i + 1) % n], &ring[j], &ring[(j + 1) % n]) {
                    found = Some((i, j));
                    break 'scan;
                }
            }
        }
        match found {
            None => return true,
            Some((i, j)) => ring[i + 1..=j].reverse(),
        }
    }
    false
}

/// Random orthogonal `n`-gon on an integer grid, deterministic per
/// `(n, seed)`. Starts from a square and cuts rectangular corner notches,
/// each adding two vertices.
pub fn gen_orthogonal(n: usize, seed: u64) -> Result<Polygon, GenError> {
    if n < 4 || n % 2 != 0 {
        return Err(GenError::InvalidArgument(format!("n = {n} must be even and at least 4")));
    }
    let mut rng = rng_for(n, seed, 2);
    let g = 4 * n as i64;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut poly = validate_polygon(vec![pt(0, 0), pt(g, 0), pt(g, g), pt(0, g)]).expect("square");
        while poly.n() < n {
            let mut placed = false;
            for _ in 0..(20 * n) {
                if let Some(q) = try_notch(&poly, &mut rng) {
                    poly = q;
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'attempt;
            }
        }
        return Ok(poly);
    }
    Err(GenError::GenerationFailed(MAX_ATTEMPTS))
}

fn try_notch(poly: &Polygon, rng: &mut ChaCha8Rng) -> Option<Polygon> {
    let convex: Vec<usize> = (0..poly.n()).filter(|&i| !poly.is_reflex(i)).collect();
    let &c = convex.choose(rng)?;
    let cv = poly.vertex(c);
    let pv = poly.vertex(poly.prev(c));
    let nv = poly.vertex(poly.next(c));
    let (xn, yn) = if pv.y == cv.y { (pv, nv) } else { (nv, pv) };
    let rx = strictly_between(rng, &cv.x, &xn.x)?;
    let ry = strictly_between(rng, &cv.y, &yn.y)?;
    let r = Point::new(rx.clone(), ry.clone());
    let on_prev = if pv.y == cv.y { Point::new(rx.clone(), cv.y.clone()) } else { Point::new(cv.x.clone(), ry.clone()) };
    let on_next = if nv.y == cv.y { Point::new(rx, cv.y.clone()) } else { Point::new(cv.x.clone(), ry) };
    let mut vs = poly.vertices().to_vec();
    vs.splice(c..=c, [on_prev, r.clone(), on_next]);
    let box_area = ((&r.x - &cv.x) * (&r.y - &cv.y)).abs();
    let q = validate_polygon(vs).ok()?;
    (q.area() == poly.area() - box_area && q.is_orthogonal()).then_some(q)
}

fn strictly_between(rng: &mut ChaCha8Rng, a: &Rat, b: &Rat) -> Option<Rat> {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let lo = lo.floor().to_integer();
    let hi = hi.ceil().to_integer();
    let lo: i64 = (&lo).try_into().ok()?;
    let hi: i64 = (&hi).try_into().ok()?;
    if hi - lo < 2 {
        return None;
    }
    Some(int(rng.gen_range(lo + 1..hi)))
}
