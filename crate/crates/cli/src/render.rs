//! SVG output for lattice configurations and domino tilings.

use ice20v_core::apm::{turning_profile, EdgeRef};
use ice20v_core::icemodel::LatticeConfig;
use ice20v_core::tilings::{Domino, Region};
use ice20v_core::Result;
use std::fmt::Write;

const STEP: f64 = 40.0;
const CELL: f64 = 30.0;
const COLORS: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"];

fn header(w: f64, h: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

fn ends(e: EdgeRef) -> ((f64, f64), (f64, f64)) {
    let (a, b) = match e {
        EdgeRef::H(x, y) => ((x, y), (x + 1, y)),
        EdgeRef::V(x, y) => ((x, y + 1), (x, y)),
        EdgeRef::D(x, y) => ((x, y + 1), (x + 1, y)),
    };
    ((a.0 as f64, a.1 as f64), (b.0 as f64, b.1 as f64))
}

fn lerp(p: (f64, f64), q: (f64, f64), t: f64) -> (f64, f64) {
    (p.0 + (q.0 - p.0) * t, p.1 + (q.1 - p.1) * t)
}

fn same_direction(a: EdgeRef, b: EdgeRef) -> bool {
    matches!((a, b), (EdgeRef::H(..), EdgeRef::H(..)) | (EdgeRef::V(..), EdgeRef::V(..)) | (EdgeRef::D(..), EdgeRef::D(..)))
}

/// Corner points of one path in lattice coordinates. Turns cut the corner
/// so that two paths meeting at a vertex only touch the vertex's
/// neighbourhood on opposite sides.
fn path_points(edges: &[EdgeRef]) -> Vec<(f64, f64)> {
    let mut pts = vec![ends(edges[0]).0];
    for w in edges.windows(2) {
        let (a0, a1) = ends(w[0]);
        let (_, b1) = ends(w[1]);
        if same_direction(w[0], w[1]) {
            pts.push(a1);
        } else {
            pts.push(lerp(a0, a1, 0.7));
            pts.push(lerp(a1, b1, 0.3));
        }
    }
    pts.push(ends(*edges.last().expect("nonempty path")).1);
    pts
}

pub fn render_config(c: &LatticeConfig) -> Result<String> {
    let tp = turning_profile(c)?;
    let (rows, cols) = (c.rows(), c.cols());
    let w = (cols + 1) as f64 * STEP + STEP;
    let h = (rows + 1) as f64 * STEP + STEP;
    let to_svg = |(x, y): (f64, f64)| ((x + 0.5) * STEP, (rows as f64 + 1.5 - y) * STEP);
    let mut s = header(w, h);
    s.push_str("<g stroke=\"#cccccc\" stroke-width=\"1\">\n");
    let mut grid = Vec::new();
    for y in 1..=rows {
        for x in 0..=cols {
            grid.push(EdgeRef::H(x, y));
        }
    }
    for x in 1..=cols {
        for y in 0..=rows {
            grid.push(EdgeRef::V(x, y));
        }
    }
    for x in 0..=cols {
        for y in 0..=rows {
            let (p, q) = ends(EdgeRef::D(x, y));
            let inside = |(a, b): (f64, f64)| a >= 1.0 && a <= cols as f64 && b >= 1.0 && b <= rows as f64;
            if inside(p) || inside(q) {
                grid.push(EdgeRef::D(x, y));
            }
        }
    }
    for e in grid {
        let (p, q) = ends(e);
        let (p, q) = (to_svg(p), to_svg(q));
        writeln!(s, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", p.0, p.1, q.0, q.1).unwrap();
    }
    s.push_str("</g>\n<g fill=\"#555555\">\n");
    for y in (1..=rows).rev() {
        for x in 1..=cols {
            let (cx, cy) = to_svg((x as f64, y as f64));
            writeln!(s, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"2.5\"/>").unwrap();
        }
    }
    s.push_str("</g>\n<g fill=\"none\" stroke-width=\"4\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n");
    for (k, p) in tp.paths.iter().enumerate() {
        let pts: Vec<String> = path_points(&p.edges)
            .into_iter()
            .map(|q| {
                let (a, b) = to_svg(q);
                format!("{a:.1},{b:.1}")
            })
            .collect();
        writeln!(
            s,
            "<polyline class=\"path\" data-steps=\"{}\" stroke=\"{}\" points=\"{}\"/>",
            p.edges.len(),
            COLORS[k % COLORS.len()],
            pts.join(" ")
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

pub fn render_tiling(region: &Region, tiling: &[Domino]) -> String {
    let w = region.cols() as f64 * CELL + 2.0 * CELL;
    let h = region.rows() as f64 * CELL + 2.0 * CELL;
    let mut s = header(w, h);
    s.push_str("<g fill=\"#eeeeee\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n");
    for r in 0..region.rows() {
        for c in 0..region.cols() {
            if region.contains(r, c) {
                let (x, y) = ((c as f64 + 1.0) * CELL, (r as f64 + 1.0) * CELL);
                writeln!(s, "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\"/>").unwrap();
            }
        }
    }
    s.push_str("</g>\n<g stroke=\"#222222\" stroke-width=\"2\">\n");
    let mut sorted = tiling.to_vec();
    sorted.sort();
    for d in sorted {
        let (dw, dh) = if d.horizontal { (2.0 * CELL, CELL) } else { (CELL, 2.0 * CELL) };
        let fill = if d.horizontal { "#aed6f1" } else { "#f9e79f" };
        let (x, y) = ((d.c as f64 + 1.0) * CELL, (d.r as f64 + 1.0) * CELL);
        writeln!(
            s,
            "<rect class=\"domino\" x=\"{x}\" y=\"{y}\" width=\"{dw}\" height=\"{dh}\" fill=\"{fill}\"/>"
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}
