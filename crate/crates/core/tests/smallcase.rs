use halfguard::fixtures::*;
use halfguard::geom::*;
use halfguard::guard::*;
use halfguard::smallcase::*;
use halfguard::verify::uncovered_region;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(x: &str, y: &str) -> Point {
    Point::new(parse_rat(x).unwrap(), parse_rat(y).unwrap())
}

fn monitors(p: &Polygon, g: &HalfGuard) -> bool {
    uncovered_region(p, std::slice::from_ref(g)).is_empty()
}

/// Random simple polygon from a shuffled random point set; unlike the
/// radial generator this readily produces several reflex vertices.
fn shuffled_polygon(rng: &mut ChaCha8Rng, n: usize) -> Polygon {
    loop {
        let mut vs: Vec<Point> = (0..n).map(|_| pt(rng.gen_range(0..30), rng.gen_range(0..30))).collect();
        vs.shuffle(rng);
        if let Ok(p) = validate_polygon(vs) {
            return p;
        }
    }
}

fn side(p: &Polygon, i: usize) -> Segment {
    Segment::new(p.vertex(i).clone(), p.vertex(i + 1).clone())
}

#[test]
fn convex_guard_examples() {
    let tri = validate_polygon(vec![pt(0, 0), pt(4, 0), pt(0, 4)]).unwrap();
    let g = convex_guard(&tri, &pt(1, 0)).unwrap();
    assert!(g.hp.contains(&pt(0, 4)) && g.hp.on_line(&pt(4, 0)));
    assert!(monitors(&tri, &g));
    let sq = square();
    assert!(monitors(&sq, &convex_guard(&sq, &pt(0, 0)).unwrap()));
    assert_eq!(convex_guard(&l_hexagon(), &pt(0, 0)), Err(SmallCaseError::NotConvex));
    assert!(matches!(convex_guard(&sq, &pt(1, 1)), Err(SmallCaseError::Guard(GuardError::NotOnBoundary(_)))));
}

#[test]
fn convex_guard_random_positions_on_hexagon() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = convex_ngon(6);
    for _ in 0..20 {
        let i = rng.gen_range(0..6);
        let t = rat(rng.gen_range(0..8), 8);
        let pos = p.vertex(i).lerp(p.vertex(i + 1), &t);
        let g = convex_guard(&p, &pos).unwrap();
        assert!(is_entire(&p, &g).unwrap());
        assert!(monitors(&p, &g), "guard at {pos}");
    }
}

#[test]
fn quad_guard_examples() {
    let sq = square();
    let g = quad_guard(&sq, 0).unwrap();
    assert_eq!(g.pos, pt(2, 0));
    assert!(g.hp.on_line(&pt(0, 0)) && g.hp.contains(&pt(0, 4)));

    let qd = dart();
    // Side (4,4)-(2,1) ends at the reflex vertex: the guard stands where the
    // extension meets the bottom edge.
    let g = quad_guard(&qd, 2).unwrap();
    assert_eq!(g.pos, q("4/3", "0"));
    assert!(is_aligned(&qd, &g, &side(&qd, 2)));
    assert!(monitors(&qd, &g));

    // Bottom side: the endpoint away from the reflex vertex is (4,0).
    let g = quad_guard(&qd, 0).unwrap();
    assert_eq!(g.pos, pt(4, 0));
    assert!(g.hp.on_line(&pt(0, 0)));
    assert!(monitors(&qd, &g));

    assert_eq!(
        quad_guard(&notched_pentagon(), 0),
        Err(SmallCaseError::InvalidSize { expected: 4, got: 5 })
    );
}

#[test]
fn dart_bottom_corner_at_reflex_neighbor_fails_to_monitor() {
    let qd = dart();
    let g = entire_at(&qd, &pt(0, 0), Some(&side(&qd, 0))).unwrap();
    assert!(!monitors(&qd, &g));
}

#[test]
fn quad_guard_random_quads_every_side() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut reflex_seen = 0;
    for _ in 0..60 {
        let p = shuffled_polygon(&mut rng, 4);
        reflex_seen += usize::from(!p.is_convex());
        for s in 0..4 {
            let g = quad_guard(&p, s).unwrap();
            assert!(is_entire(&p, &g).unwrap(), "{p:?} side {s}");
            assert!(is_aligned(&p, &g, &side(&p, s)), "{p:?} side {s}");
            assert!(monitors(&p, &g), "{p:?} side {s}");
        }
    }
    assert!(reflex_seen > 10);
}

#[test]
fn pent_guard_examples() {
    let cp = convex_pentagon();
    let g = pent_guard(&cp).unwrap();
    assert_eq!(g.pos, pt(2, 0));
    assert!(monitors(&cp, &g));

    let pr = notched_pentagon();
    let g = pent_guard(&pr).unwrap();
    assert_eq!(g.pos, pt(1, 0));
    assert!(g.hp.on_line(&pt(4, 0)) && g.hp.contains(&pt(0, 3)));
    assert!(monitors(&pr, &g));

    let dn = double_notch_pentagon();
    let g = pent_guard(&dn).unwrap();
    assert_eq!(g.pos, q("-5/4", "0"));
    assert!(monitors(&dn, &g));

    assert_eq!(pent_guard(&square()), Err(SmallCaseError::InvalidSize { expected: 5, got: 4 }));
}

#[test]
fn pent_guard_two_nonadjacent_reflex() {
    // Shape with reflex vertices on both sides of the top vertex.
    let p = validate_polygon(vec![q("1/2", "0"), q("-1/2", "1/2"), pt(-2, 3), q("-3/2", "1"), q("-5/2", "0")]).unwrap();
    assert_eq!(p.reflex_vertices().len(), 2);
    let g = pent_guard(&p).unwrap();
    assert_eq!(g.pos, q("-5/4", "0"));
    assert!(monitors(&p, &g));
}

#[test]
fn pent_guard_both_extensions_end_at_vertices() {
    // The extensions of both edges at (2,2) pass exactly through (0,0) and (4,0).
    let p = validate_polygon(vec![pt(0, 0), pt(4, 0), pt(6, 6), pt(2, 2), pt(-2, 6)]).unwrap();
    assert_eq!(ray_first_hit(&p, 2, 3).unwrap().hit, Hit::AtVertex(0));
    assert_eq!(ray_first_hit(&p, 4, 3).unwrap().hit, Hit::AtVertex(1));
    let g = pent_guard(&p).unwrap();
    assert_eq!(g.pos, pt(2, 0));
    assert!(monitors(&p, &g));
}

#[test]
fn pent_guard_random_pentagons() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut by_reflex = [0usize; 3];
    for _ in 0..100 {
        let p = shuffled_polygon(&mut rng, 5);
        by_reflex[p.reflex_vertices().len()] += 1;
        let g = pent_guard(&p).unwrap();
        assert!(is_entire(&p, &g).unwrap(), "{p:?}");
        assert!(p.find_vertex(&g.pos).is_none(), "{p:?}");
        assert!(monitors(&p, &g), "{p:?}");
    }
    assert!(by_reflex.iter().all(|&c| c >= 3), "{by_reflex:?}");
}

#[test]
fn single_guard_at_convex_vertex_between_convex_neighbors_monitors_quad() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    for _ in 0..80 {
        let p = shuffled_polygon(&mut rng, 4);
        for v in 0..4 {
            if p.is_reflex(v) || p.is_reflex(p.prev(v)) || p.is_reflex(p.next(v)) {
                continue;
            }
            for line in [None, Some(side(&p, v)), Some(side(&p, p.prev(v)))] {
                let g = entire_at(&p, p.vertex(v), line.as_ref()).unwrap();
                assert!(monitors(&p, &g), "{p:?} vertex {v}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}
