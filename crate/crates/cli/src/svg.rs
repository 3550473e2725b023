//! Standalone SVG drawings of a polygon and its half-guards.

use std::fmt::Write;

use halfguard::geom::{Point, Polygon};
use halfguard::guard::{visibility_region, HalfGuard};
use halfguard::verify::mutual_visibility_graph;

const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#17becf"];

/// Points on the half-disc marker: an arc from one direction along the
/// boundary line through the inward normal to the other.
fn half_disc(g: &HalfGuard, r: f64) -> Vec<(f64, f64)> {
    let (cx, cy) = g.pos.to_f64();
    let (nx, ny) = g.hp.normal().to_f64();
    let len = nx.hypot(ny);
    let (nx, ny) = (nx / len, ny / len);
    // Line direction with the normal on its left.
    let (dx, dy) = (ny, -nx);
    let mut pts = vec![(cx, cy)];
    for k in 0..=16 {
        let t = std::f64::consts::PI * k as f64 / 16.0;
        pts.push((cx + r * (t.cos() * dx + t.sin() * nx), cy + r * (t.cos() * dy + t.sin() * ny)));
    }
    pts
}

fn points_attr(pts: impl IntoIterator<Item = (f64, f64)>) -> String {
    pts.into_iter().map(|(x, y)| format!("{x:.6},{y:.6}")).collect::<Vec<_>>().join(" ")
}

fn exact_points(pts: &[Point]) -> String {
    points_attr(pts.iter().map(Point::to_f64))
}

/// Renders `p` with optional guards. Visibility-graph edges are dashed;
/// with `regions`, each guard's visibility region is shaded.
pub fn render(p: &Polygon, guards: &[HalfGuard], regions: bool) -> String {
    let (lo, hi) = p.bbox();
    let ((x0, y0), (x1, y1)) = (lo.to_f64(), hi.to_f64());
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let m = span * 0.08;
    let (w, h) = (x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);
    let px = 800.0 / w.max(h);
    let stroke = span / 250.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        w * px,
        h * px,
        x0 - m,
        -(y1 + m),
        w,
        h
    );
    // Flip y so the drawing uses mathematical orientation.
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
    let _ = writeln!(
        s,
        r##"<polygon class="polygon" points="{}" fill="#f5f5f0" stroke="#222" stroke-width="{stroke:.6}" stroke-linejoin="round"/>"##,
        exact_points(p.vertices())
    );
    if regions {
        for (i, g) in guards.iter().enumerate() {
            for ring in visibility_region(p, g).rings() {
                let _ = writeln!(
                    s,
                    r#"<polygon class="region" points="{}" fill="{}" fill-opacity="0.18" stroke="none"/>"#,
                    exact_points(&ring),
                    PALETTE[i % PALETTE.len()]
                );
            }
        }
    }
    if !guards.is_empty() {
        for (i, j) in mutual_visibility_graph(p, guards).edges {
            let ((ax, ay), (bx, by)) = (guards[i].pos.to_f64(), guards[j].pos.to_f64());
            let _ = writeln!(
                s,
                r##"<line class="sight" x1="{ax:.6}" y1="{ay:.6}" x2="{bx:.6}" y2="{by:.6}" stroke="#555" stroke-width="{stroke:.6}" stroke-dasharray="{:.6} {:.6}"/>"##,
                4.0 * stroke,
                3.0 * stroke
            );
        }
    }
    for (i, g) in guards.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            r##"<polygon class="halfplane" points="{}" fill="{color}" fill-opacity="0.45" stroke="{color}" stroke-width="{:.6}"/>"##,
            points_attr(half_disc(g, span / 22.0)),
            stroke / 2.0
        );
        let (cx, cy) = g.pos.to_f64();
        let _ = writeln!(s, r##"<circle class="guard" cx="{cx:.6}" cy="{cy:.6}" r="{:.6}" fill="#c00"/>"##, span / 90.0);
    }
    s.push_str("</g>\n</svg>\n");
    s
}
