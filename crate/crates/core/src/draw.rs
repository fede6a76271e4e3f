//! DOT and SVG export with the 2-factor, connecting edges, chords and the
//! Hamilton cycle highlighted.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt::Write as _;

use thiserror::Error;

use crate::map::{EdgeId, PlaneMultigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawFormat {
    Dot,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("barycentric layout is degenerate: {0}")]
    LayoutDegenerate(String),
}

/// Edge classes to emphasise. Ids refer to the drawn map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Highlight {
    pub x: BTreeSet<EdgeId>,
    pub m: BTreeSet<EdgeId>,
    pub chords: BTreeSet<EdgeId>,
    pub h: BTreeSet<EdgeId>,
}

impl Highlight {
    fn classes(&self, e: EdgeId) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.x.contains(&e) {
            out.push("x");
        }
        if self.m.contains(&e) {
            out.push("m");
        }
        if self.chords.contains(&e) {
            out.push("chord");
        }
        if self.h.contains(&e) {
            out.push("h");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub text: String,
    /// Set when the barycentric layout failed and a circle was used instead.
    pub layout_warning: Option<LayoutError>,
}

pub fn export_drawing(map: &PlaneMultigraph, highlight: &Highlight, format: DrawFormat) -> Drawing {
    match format {
        DrawFormat::Dot => Drawing {
            text: to_dot(map, highlight),
            layout_warning: None,
        },
        DrawFormat::Svg => {
            let (points, layout_warning) = match barycentric_layout(map) {
                Ok(p) => (p, None),
                Err(e) => (circular_layout(map.num_vertices()), Some(e)),
            };
            Drawing {
                text: to_svg(map, highlight, &points),
                layout_warning,
            }
        }
    }
}

fn to_dot(map: &PlaneMultigraph, highlight: &Highlight) -> String {
    let mut out = String::from("graph J {\n  node [shape=circle];\n");
    for v in 0..map.num_vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in 0..map.num_edges() {
        let (u, v) = map.endpoints(e);
        let classes = highlight.classes(e);
        let mut attrs = vec![format!("id=\"e{e}\"")];
        if classes.contains(&"x") {
            attrs.push("penwidth=3".into());
        }
        if classes.contains(&"m") {
            attrs.push("style=dashed".into());
        }
        if classes.contains(&"chord") {
            attrs.push("color=\"#1f77b4\"".into());
        } else if classes.contains(&"h") {
            attrs.push("color=\"#d62728\"".into());
        }
        if !classes.is_empty() {
            attrs.push(format!("class=\"{}\"", classes.join(" ")));
        }
        writeln!(out, "  {u} -- {v} [{}];", attrs.join(", ")).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn circular_layout(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            (t.cos(), t.sin())
        })
        .collect()
}

/// Tutte's barycentric drawing: the outer face is pinned to a regular
/// polygon and every other vertex sits at the mean of its neighbours.
pub fn barycentric_layout(map: &PlaneMultigraph) -> Result<Vec<(f64, f64)>, LayoutError> {
    let mut outer: Vec<VertexId> = Vec::new();
    for v in map.face_vertices(map.outer_face()) {
        if !outer.contains(&v) {
            outer.push(v);
        }
    }
    if outer.len() < 3 {
        return Err(LayoutError::LayoutDegenerate(format!(
            "outer face has {} distinct vertices",
            outer.len()
        )));
    }
    let n = map.num_vertices();
    let mut pinned = vec![false; n];
    let mut pos = vec![(0.0, 0.0); n];
    for (i, &v) in outer.iter().enumerate() {
        // Outer walk is clockwise; place it clockwise too.
        let t = PI / 2.0 - 2.0 * PI * i as f64 / outer.len() as f64;
        pos[v] = (t.cos(), t.sin());
        pinned[v] = true;
    }
    let neighbors: Vec<Vec<VertexId>> = (0..n).map(|v| map.neighbors(v).collect()).collect();
    for _ in 0..20_000 {
        let mut shift: f64 = 0.0;
        for v in (0..n).filter(|&v| !pinned[v]) {
            let k = neighbors[v].len() as f64;
            let (sx, sy) = neighbors[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / k, sy / k);
            shift = shift.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if shift < 1e-12 {
            break;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let d = (pos[u].0 - pos[v].0).hypot(pos[u].1 - pos[v].1);
            if d.is_nan() || d <= 1e-6 {
                return Err(LayoutError::LayoutDegenerate(format!(
                    "vertices {u} and {v} coincide"
                )));
            }
        }
    }
    Ok(pos)
}

fn to_svg(map: &PlaneMultigraph, highlight: &Highlight, points: &[(f64, f64)]) -> String {
    const SIZE: f64 = 600.0;
    const MARGIN: f64 = 40.0;
    let scale = |(x, y): (f64, f64)| {
        (
            MARGIN + (x + 1.0) / 2.0 * (SIZE - 2.0 * MARGIN),
            MARGIN + (1.0 - y) / 2.0 * (SIZE - 2.0 * MARGIN),
        )
    };
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    out.push_str(
        "<style>.edge{stroke:#888;stroke-width:1.5;fill:none}.x{stroke:#000;stroke-width:4}\
.m{stroke-dasharray:6 4}.h{stroke:#d62728}.chord{stroke:#1f77b4;stroke-width:3}\
circle{fill:#fff;stroke:#000}text{font:12px sans-serif;text-anchor:middle}</style>\n",
    );
    // Parallel edges fan out as quadratic arcs.
    let mut bundles: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for e in 0..map.num_edges() {
        let (u, v) = map.endpoints(e);
        bundles.entry((u.min(v), u.max(v))).or_default().push(e);
    }
    out.push_str("<g>\n");
    for ((u, v), edges) in &bundles {
        let (p, q) = (scale(points[*u]), scale(points[*v]));
        let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        let len = (q.0 - p.0).hypot(q.1 - p.1).max(1e-9);
        let normal = (-(q.1 - p.1) / len, (q.0 - p.0) / len);
        for (i, &e) in edges.iter().enumerate() {
            let offset = (i as f64 - (edges.len() as f64 - 1.0) / 2.0) * 0.35 * len;
            let c = (mx + normal.0 * offset, my + normal.1 * offset);
            let mut class = String::from("edge");
            for name in highlight.classes(e) {
                class.push(' ');
                class.push_str(name);
            }
            writeln!(
                out,
                "<path id=\"e{e}\" class=\"{class}\" d=\"M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}\"/>",
                p.0, p.1, c.0, c.1, q.0, q.1
            )
            .unwrap();
        }
    }
    out.push_str("</g>\n<g>\n");
    for (v, &pt) in points.iter().enumerate() {
        let (x, y) = scale(pt);
        writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"9\"/><text x=\"{x:.2}\" y=\"{:.2}\">{v}</text>",
            y + 4.0
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
