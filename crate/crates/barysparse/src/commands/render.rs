use std::fmt::Write;

use barysparse_core::{locate, Point, DEFAULT_TOL};

use crate::{CliError, Model, PolytopeDocument};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

/// SVG picture of the fan from the base vertex: outline, chords, vertex
/// labels and query points colored by their containing simplex. Outside
/// points are drawn hollow.
pub fn run(doc: &PolytopeDocument, points: &[Vec<f64>], base: Option<usize>) -> Result<String, CliError> {
    if doc.dim != 2 {
        return Err(CliError::UnsupportedDimension(doc.dim));
    }
    let model = Model::from_document(doc)?;
    let poly = model.polygon().expect("dim 2 documents build polygons");
    let base = base.or(doc.base_vertex).unwrap_or(0);
    let d = model.decompose(base)?.pointed;

    let pts = poly.points();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pts {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let scale = (SIZE - 2.0 * MARGIN) / (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let map = |x: &[f64]| (MARGIN + (x[0] - lo[0]) * scale, SIZE - MARGIN - (x[1] - lo[1]) * scale);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let outline: Vec<String> = poly
        .cycle()
        .iter()
        .map(|&v| {
            let (x, y) = map(pts[v].coords());
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        svg,
        r#"<polygon class="outline" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        outline.join(" ")
    );

    let fan = poly.cycle_from(base);
    let (bx, by) = map(pts[base].coords());
    for &v in &fan[2..fan.len() - 1] {
        let (x, y) = map(pts[v].coords());
        let _ = writeln!(
            svg,
            r#"<line class="chord" x1="{bx:.3}" y1="{by:.3}" x2="{x:.3}" y2="{y:.3}" stroke="gray" stroke-width="1"/>"#
        );
    }

    let cx: f64 = pts.iter().map(|p| p[0]).sum::<f64>() / pts.len() as f64;
    let cy: f64 = pts.iter().map(|p| p[1]).sum::<f64>() / pts.len() as f64;
    let (ox, oy) = map(&[cx, cy]);
    for (v, p) in pts.iter().enumerate() {
        let (x, y) = map(p.coords());
        let (dx, dy) = (x - ox, y - oy);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (tx, ty) = (x + 14.0 * dx / len, y + 14.0 * dy / len + 4.0);
        let _ = writeln!(svg, r#"<circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        let _ = writeln!(
            svg,
            r#"<text class="label" x="{tx:.3}" y="{ty:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">{v}</text>"#
        );
    }

    for x in points {
        let (sx, sy) = map(x);
        match locate(&d, &Point::new(x.clone())?, DEFAULT_TOL) {
            Ok(hit) => {
                let color = PALETTE[(hit.order_id - 1) % PALETTE.len()];
                let _ = writeln!(
                    svg,
                    r#"<circle class="point" data-simplex="{}" cx="{sx:.3}" cy="{sy:.3}" r="4" fill="{color}"/>"#,
                    hit.order_id
                );
            }
            Err(_) => {
                let _ = writeln!(
                    svg,
                    r#"<circle class="point outside" cx="{sx:.3}" cy="{sy:.3}" r="4" fill="none" stroke="gray"/>"#
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
