//! Exact rational geometry: points, predicates, polygons, rays and cuts.

mod cut;
mod point;
mod polygon;
mod predicates;
mod ray;

pub use cut::{attach_triangle, split_at_cut, Cut, CutKind, Split};
pub(crate) use point::approx;
pub use point::{cross, dot, format_rat, int, parse_rat, pt, rat, Point, Rat, Segment};
pub use polygon::{signed_area2, validate_polygon, validate_polygon_with, Location, Polygon, VertexClass};
pub use predicates::{
    angle_cmp, cross_sign, dot_sign, on_open_segment, on_segment, orientation, segments_cross_properly,
    segments_intersect, sign, vec_cross_sign,
};
pub use ray::{ray_first_hit, Hit, RayHit};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("repeated vertex {0}")]
    RepeatedVertex(Point),
    #[error("polygon is not simple")]
    NotSimple,
    #[error("straight vertex {0} is not allowed")]
    DegenerateStraightVertex(Point),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} is not reflex")]
    NotReflex(usize),
    #[error("ray from {u} through {v} is degenerate")]
    DegenerateRay { u: usize, v: usize },
    #[error("segment is not a valid cut")]
    InvalidCut,
    #[error("segment is not a side of the polygon")]
    NotASide,
    #[error("apex is collinear with the shared side")]
    DegenerateTriangle,
    #[error("attached triangle overlaps the polygon")]
    Overlap,
}
