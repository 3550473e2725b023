//! Small named polygons used in documentation, tests and the CLI.

use crate::geom::{int, parse_rat, pt, validate_polygon, Point, Polygon};

fn poly(vs: Vec<Point>) -> Polygon {
    validate_polygon(vs).expect("fixture polygon is valid")
}

/// Axis-parallel square of side 4.
pub fn square() -> Polygon {
    poly(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
}

/// L-shaped hexagon with its reflex vertex at (1, 1).
pub fn l_hexagon() -> Polygon {
    poly(vec![pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)])
}

/// Pentagon with one reflex vertex at (2, 1).
pub fn notched_pentagon() -> Polygon {
    poly(vec![pt(0, 0), pt(4, 0), pt(4, 3), pt(2, 1), pt(0, 3)])
}

/// Quadrilateral with a reflex vertex at (2, 1).
pub fn dart() -> Polygon {
    poly(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 1)])
}

pub fn convex_pentagon() -> Polygon {
    poly(vec![pt(0, 0), pt(4, 0), pt(6, 3), pt(3, 6), pt(-1, 3)])
}

/// Pentagon with two adjacent reflex vertices.
pub fn double_notch_pentagon() -> Polygon {
    poly(vec![
        pt(-3, 0),
        pt(0, 0),
        pt(-2, 3),
        Point::new(parse_rat("-7/4").unwrap(), int(2)),
        Point::new(int(-2), parse_rat("1/2").unwrap()),
    ])
}

/// Regular-ish convex polygon on `n` vertices with integer coordinates.
pub fn convex_ngon(n: usize) -> Polygon {
    assert!(n >= 3);
    // Points on the parabola y = x^2 are in convex position.
    let mut vs: Vec<Point> = (0..n as i64).map(|i| pt(i, i * i)).collect();
    vs.reverse();
    poly(vs)
}

/// Vertex list of the 26-sided orthogonal polygon that needs 11 guards.
pub fn orthogonal_26_vertices() -> Vec<Point> {
    const V: [(&str, &str); 26] = [
        ("1", "0"), ("1", "1"), ("3", "1"), ("3", "4"), ("2", "4"), ("2", "2"), ("0", "2"),
        ("0", "5"), ("5", "5"), ("5", "6"), ("12", "6"), ("12", "5"), ("9", "5"), ("9", "4"),
        ("15", "4"), ("15", "1"), ("12", "1"), ("12", "0"), ("9", "0"), ("9", "7/4"),
        ("10", "7/4"), ("10", "3"), ("6", "3"), ("6", "1"), ("8", "1"), ("8", "0"),
    ];
    V.iter().map(|(x, y)| Point::new(parse_rat(x).unwrap(), parse_rat(y).unwrap())).collect()
}

/// The 26-sided orthogonal polygon, normalized to counter-clockwise order.
pub fn orthogonal_26() -> Polygon {
    poly(orthogonal_26_vertices())
}
