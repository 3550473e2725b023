use halfguard::fixtures::*;
use halfguard::geom::*;
use halfguard::guard::*;
use halfguard::polygen::gen_simple;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hp(a: i64, b: i64, c: i64) -> HalfPlane {
    HalfPlane::new(BigInt::from(a), BigInt::from(b), BigInt::from(c)).unwrap()
}

fn g(x: Point, h: HalfPlane) -> HalfGuard {
    HalfGuard::new(x, h).unwrap()
}

fn q(x: &str, y: &str) -> Point {
    Point::new(parse_rat(x).unwrap(), parse_rat(y).unwrap())
}

#[test]
fn halfplane_normalization() {
    assert_eq!(hp(2, 4, 6), hp(1, 2, 3));
    assert_ne!(hp(1, 2, 3), hp(-1, -2, -3));
    assert!(HalfPlane::new(BigInt::from(0), BigInt::from(0), BigInt::from(1)).is_none());
    let h = HalfPlane::left_of(&q("0", "1/2"), &q("1", "1/2"));
    assert_eq!(h, hp(0, 2, -1));
    assert_eq!(h.flipped(), hp(0, -2, 1));
}

#[test]
fn guard_must_lie_on_its_line() {
    assert_eq!(HalfGuard::new(pt(2, 1), hp(0, 1, 0)), Err(GuardError::NotOnLine));
}

#[test]
fn sees_examples() {
    let sq = square();
    let bottom = g(pt(2, 0), hp(0, 1, 0));
    assert_eq!(sees(&sq, &bottom, &pt(2, 4)), Ok(true));
    let mid = g(pt(2, 2), hp(0, 1, -2));
    assert_eq!(sees(&sq, &mid, &pt(2, 0)), Ok(false));

    let l = l_hexagon();
    let gl = g(pt(1, 0), hp(0, 1, 0));
    assert_eq!(sees(&l, &gl, &q("3/2", "1/2")), Ok(true));
    assert_eq!(sees(&l, &gl, &q("1/2", "3/2")), Ok(true));
    assert!(!sees_unchecked(&l, &gl, &q("3/2", "3/2")));
    assert!(matches!(sees(&l, &gl, &q("3/2", "3/2")), Err(GuardError::PointOutsidePolygon(_))));
}

#[test]
fn entire_at_examples() {
    let sq = square();
    assert_eq!(entire_at(&sq, &pt(2, 0), None).unwrap().hp, hp(0, 1, 0));
    let bottom = Segment::new(pt(0, 0), pt(4, 0));
    let e = entire_at(&sq, &pt(0, 0), Some(&bottom)).unwrap();
    assert_eq!(e.hp, hp(0, 1, 0));
    assert_eq!(is_entire(&sq, &e), Ok(true));
    assert!(matches!(entire_at(&notched_pentagon(), &pt(2, 1), None), Err(GuardError::ReflexVertex(_))));
    assert!(matches!(entire_at(&sq, &pt(2, 2), None), Err(GuardError::NotOnBoundary(_))));
    // A line through the corner that splits the right angle.
    let diag = Segment::new(pt(0, 0), pt(4, 4));
    assert_eq!(entire_at(&sq, &pt(0, 0), Some(&diag)), Err(GuardError::ConeNotContained));
    // Default line at a convex vertex: parallel to the neighbor chord.
    let c = entire_at(&sq, &pt(0, 0), None).unwrap();
    assert_eq!(c.hp, hp(1, 1, 0));
}

#[test]
fn is_entire_examples() {
    let sq = square();
    assert_eq!(is_entire(&sq, &g(pt(2, 0), hp(0, -1, 0))), Ok(false));
    assert_eq!(is_entire(&sq, &g(pt(0, 0), hp(-1, 1, 0))), Ok(false));
    assert!(matches!(is_entire(&sq, &g(pt(2, 2), hp(0, 1, -2))), Err(GuardError::NotOnBoundary(_))));
    let l = l_hexagon();
    assert_eq!(is_entire(&l, &g(pt(1, 1), hp(0, 1, -1))), Ok(false));
}

#[test]
fn entire_at_round_trips_on_corpus() {
    for n in 4..=14 {
        for seed in 0..4 {
            let p = gen_simple(n, seed).unwrap();
            for i in 0..n {
                if !p.is_reflex(i) {
                    let e = entire_at(&p, p.vertex(i), None).unwrap();
                    assert_eq!(is_entire(&p, &e), Ok(true));
                }
                let m = p.vertex(i).midpoint(p.vertex(i + 1));
                let e = entire_at(&p, &m, None).unwrap();
                assert_eq!(is_entire(&p, &e), Ok(true));
            }
        }
    }
}

#[test]
fn is_aligned_examples() {
    let sq = square();
    let bottom = Segment::new(pt(0, 0), pt(4, 0));
    assert!(is_aligned(&sq, &g(pt(0, 0), hp(0, 1, 0)), &bottom));
    assert!(is_aligned(&sq, &g(pt(2, 0), hp(0, 1, 0)), &bottom));
    // Collinear but facing away from the polygon: the far endpoint is still on the
    // line, yet the guard stands on t with the wrong boundary line.
    assert!(!is_aligned(&sq, &g(pt(0, 0), hp(1, 1, 0)), &bottom));
    // Collinear with t from outside t, half-plane excluding an endpoint.
    let l = l_hexagon();
    let t = Segment::new(pt(1, 1), pt(2, 1));
    assert!(is_aligned(&l, &g(pt(0, 1), hp(0, 1, -1)), &t));
    assert!(is_aligned(&l, &g(pt(0, 1), hp(1, 0, 0)), &t));
    assert!(!is_aligned(&l, &g(pt(0, 1), hp(-1, 0, 0)), &t));
    // Not collinear.
    assert!(!is_aligned(&sq, &g(pt(2, 4), hp(0, -1, 4)), &bottom));
}

#[test]
fn visibility_region_examples() {
    let sq = square();
    let r = visibility_region(&sq, &g(pt(2, 0), hp(0, 1, 0)));
    assert_eq!(r.area2(), sq.area() * int(2));
    for v in sq.vertices() {
        assert!(r.contains(v));
    }
    let l = l_hexagon();
    let r = visibility_region(&l, &g(pt(1, 0), hp(0, 1, 0)));
    assert_eq!(r.area2(), l.area() * int(2));
    let pr = notched_pentagon();
    let r = visibility_region(&pr, &g(pt(1, 0), hp(0, 1, 0)));
    assert_eq!(r.area2(), pr.area() * int(2));
    // Guard that sees only the bottom bar of the L.
    let r = visibility_region(&l, &g(pt(0, 1), hp(0, -1, 1)));
    assert_eq!(r.area2(), int(4));
    assert!(!r.contains(&q("1/2", "3/2")));
}

fn random_point(rng: &mut ChaCha8Rng, p: &Polygon) -> Point {
    let (lo, hi) = p.bbox();
    const D: i64 = 10007;
    loop {
        let x = &lo.x + (&hi.x - &lo.x) * rat(rng.gen_range(0..=D), D);
        let y = &lo.y + (&hi.y - &lo.y) * rat(rng.gen_range(0..=D), D);
        let c = Point::new(x, y);
        if p.contains(&c) {
            return c;
        }
    }
}

fn random_guard(rng: &mut ChaCha8Rng, p: &Polygon) -> HalfGuard {
    match rng.gen_range(0..3) {
        0 => {
            let i = rng.gen_range(0..p.n());
            let m = p.vertex(i).lerp(p.vertex(i + 1), &rat(rng.gen_range(1..9), 10));
            entire_at(p, &m, None).unwrap()
        }
        1 => {
            let convex: Vec<usize> = (0..p.n()).filter(|&i| !p.is_reflex(i)).collect();
            let i = convex[rng.gen_range(0..convex.len())];
            entire_at(p, p.vertex(i), None).unwrap()
        }
        _ => {
            let x = random_point(rng, p);
            let d = pt(rng.gen_range(-5..=5), rng.gen_range(1..=5));
            HalfGuard::facing_left(x.clone(), &pt(0, 0), &d)
        }
    }
}

#[test]
fn visibility_region_agrees_with_sees() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [4, 5, 6, 8, 10, 12] {
        for seed in 0..3 {
            let p = gen_simple(n, seed).unwrap();
            for _ in 0..3 {
                let gd = random_guard(&mut rng, &p);
                let r = visibility_region(&p, &gd);
                for (a, b) in &r.wedges {
                    assert!(p.contains(a) && p.contains(b));
                    assert!(gd.hp.contains(a) && gd.hp.contains(b));
                    assert!(p.segment_in_polygon(a, b));
                }
                for _ in 0..150 {
                    let y = random_point(&mut rng, &p);
                    assert_eq!(r.contains(&y), sees_unchecked(&p, &gd, &y), "n={n} seed={seed} y={y:?} g={gd:?}");
                }
                let ring_area: Rat = r.rings().iter().map(|ring| signed_area2(ring)).sum();
                assert_eq!(ring_area, r.area2());
            }
        }
    }
}

#[test]
fn entire_guard_sees_all_of_convex_polygon() {
    for k in 3..=8 {
        let p = convex_ngon(k);
        for i in 0..k {
            let gd = entire_at(&p, p.vertex(i), None).unwrap();
            assert_eq!(visibility_region(&p, &gd).area2(), p.area() * int(2));
            let m = p.vertex(i).midpoint(p.vertex(i + 1));
            let gd = entire_at(&p, &m, None).unwrap();
            assert_eq!(visibility_region(&p, &gd).area2(), p.area() * int(2));
        }
    }
}
