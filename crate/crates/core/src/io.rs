//! Text formats: `.pmg` rotation systems, cycle files, edge-id lists and
//! JSON reports.
//!
//! A `.pmg` file looks like
//!
//! ```text
//! pmg 1
//! vertex 0 darts 0 2 4
//! vertex 1 darts 1 5 3
//! edge 0 0 1
//! edge 1 2 3
//! edge 2 4 5
//! outer 0
//! ```
//!
//! Rotations are counterclockwise. `#` starts a comment.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::construction::Metrics;
use crate::map::{DartId, EdgeId, MapError, PlaneMultigraph, VertexId};
use crate::verify::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Semantic(#[from] MapError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_num(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{token}`"),
        )
    })
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub fn parse_pmg(text: &str) -> Result<PlaneMultigraph, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, tokens)) if tokens == ["pmg", "1"] => {}
        Some((line, _)) => return Err(syntax(line, "expected header `pmg 1`")),
        None => return Err(syntax(1, "empty file")),
    }
    let mut rotations: Vec<Option<Vec<DartId>>> = Vec::new();
    let mut edges: Vec<Option<(DartId, DartId)>> = Vec::new();
    let mut outer = None;
    let mut last_line = 1;
    for (line, tokens) in lines {
        last_line = line;
        match tokens[0] {
            "vertex" => {
                if tokens.len() < 3 || tokens[2] != "darts" {
                    return Err(syntax(line, "expected `vertex <id> darts <dart>...`"));
                }
                let v = parse_num(line, tokens[1])?;
                let darts = tokens[3..]
                    .iter()
                    .map(|t| parse_num(line, t))
                    .collect::<Result<Vec<_>, _>>()?;
                if v >= rotations.len() {
                    rotations.resize(v + 1, None);
                }
                if rotations[v].replace(darts).is_some() {
                    return Err(syntax(line, format!("vertex {v} declared twice")));
                }
            }
            "edge" => {
                if tokens.len() != 4 {
                    return Err(syntax(line, "expected `edge <id> <dart> <dart>`"));
                }
                let e = parse_num(line, tokens[1])?;
                let pair = (parse_num(line, tokens[2])?, parse_num(line, tokens[3])?);
                if e >= edges.len() {
                    edges.resize(e + 1, None);
                }
                if edges[e].replace(pair).is_some() {
                    return Err(syntax(line, format!("edge {e} declared twice")));
                }
            }
            "outer" => {
                if tokens.len() != 2 {
                    return Err(syntax(line, "expected `outer <dart>`"));
                }
                if outer.replace(parse_num(line, tokens[1])?).is_some() {
                    return Err(syntax(line, "outer declared twice"));
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let outer = outer.ok_or_else(|| syntax(last_line + 1, "missing `outer` line"))?;
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(last_line, format!("vertex {v} is missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(e, p)| p.ok_or_else(|| syntax(last_line, format!("edge {e} is missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PlaneMultigraph::build(rotations, edges, outer)?)
}

/// Normalized text: header, vertices, edges and the outer dart, in id order.
pub fn emit_pmg(map: &PlaneMultigraph) -> String {
    let mut out = String::from("pmg 1\n");
    for (v, rot) in map.rotations().iter().enumerate() {
        out.push_str(&format!("vertex {v} darts"));
        for d in rot {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
    }
    for (e, (a, b)) in map.edge_pairs().enumerate() {
        out.push_str(&format!("edge {e} {a} {b}\n"));
    }
    out.push_str(&format!("outer {}\n", map.outer_dart()));
    out
}

/// Reads `cycle <v1> <v2> ... <vk>`.
pub fn parse_cycle(text: &str) -> Result<Vec<VertexId>, FormatError> {
    let mut found = None;
    for (line, tokens) in content_lines(text) {
        if tokens[0] != "cycle" {
            return Err(syntax(line, "expected `cycle <vertex>...`"));
        }
        if found.is_some() {
            return Err(syntax(line, "more than one cycle line"));
        }
        let vs = tokens[1..]
            .iter()
            .map(|t| parse_num(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        found = Some(vs);
    }
    found.ok_or_else(|| syntax(1, "missing `cycle` line"))
}

pub fn emit_cycle(vertices: &[VertexId]) -> String {
    let mut out = String::from("cycle");
    for v in vertices {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    out
}

/// Whitespace-separated edge ids, `#` comments allowed.
pub fn parse_edge_list(text: &str) -> Result<BTreeSet<EdgeId>, FormatError> {
    let mut set = BTreeSet::new();
    for (line, tokens) in content_lines(text) {
        for t in tokens {
            if !set.insert(parse_num(line, t)?) {
                return Err(syntax(line, format!("edge {t} listed twice")));
            }
        }
    }
    Ok(set)
}

pub fn emit_edge_list(edges: &BTreeSet<EdgeId>) -> String {
    let ids: Vec<String> = edges.iter().map(ToString::to_string).collect();
    format!("{}\n", ids.join(" "))
}

#[derive(Serialize)]
struct ReportJson<'a> {
    pass: bool,
    edges_g: usize,
    edges_j: usize,
    components_x: usize,
    max_degree_j: usize,
    backtracks: usize,
    #[serde(flatten)]
    flags: &'a VerificationReport,
}

/// JSON with a fixed key order: status, metrics, then every flag.
pub fn emit_report(report: &VerificationReport, metrics: &Metrics) -> String {
    let json = ReportJson {
        pass: report.passed(),
        edges_g: metrics.edges_g,
        edges_j: metrics.edges_j,
        components_x: metrics.components_x,
        max_degree_j: metrics.max_degree_j,
        backtracks: metrics.backtracks,
        flags: report,
    };
    let mut text = serde_json::to_string(&json).expect("report serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "pmg 1\nvertex 0 darts 0 2 4\nvertex 1 darts 1 5 3\nedge 0 0 1\nedge 1 2 3\nedge 2 4 5\nouter 0\n";

    #[test]
    fn theta_round_trips() {
        let map = parse_pmg(THETA).unwrap();
        assert_eq!(emit_pmg(&map), THETA);
    }

    #[test]
    fn missing_outer_is_a_syntax_error() {
        let text = THETA.replace("outer 0\n", "");
        assert!(matches!(
            parse_pmg(&text),
            Err(FormatError::Syntax { line: 7, .. })
        ));
    }

    #[test]
    fn bad_header_and_tokens() {
        assert!(matches!(
            parse_pmg("pmg 2\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        let text = THETA.replace("edge 1 2 3", "edge 1 two 3");
        assert!(matches!(
            parse_pmg(&text),
            Err(FormatError::Syntax { line: 5, .. })
        ));
        let text = THETA.replace("outer 0", "face 0");
        assert!(matches!(
            parse_pmg(&text),
            Err(FormatError::Syntax { line: 7, .. })
        ));
    }

    #[test]
    fn semantic_errors_pass_through() {
        let text = THETA.replace("darts 1 5 3", "darts 1 5 5");
        assert_eq!(
            parse_pmg(&text),
            Err(FormatError::Semantic(MapError::DartReused(5)))
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!(
            "# theta\n\n{}",
            THETA.replace("outer 0", "outer 0 # dart 0")
        );
        assert_eq!(emit_pmg(&parse_pmg(&text).unwrap()), THETA);
    }

    #[test]
    fn cycle_files() {
        assert_eq!(parse_cycle("cycle 0 3 1\n").unwrap(), vec![0, 3, 1]);
        assert_eq!(emit_cycle(&[0, 3, 1]), "cycle 0 3 1\n");
        assert!(parse_cycle("").is_err());
        assert!(parse_cycle("path 0 1\n").is_err());
    }

    #[test]
    fn edge_lists() {
        let set = parse_edge_list("# x\n0 1\n4\n").unwrap();
        assert_eq!(set, BTreeSet::from([0, 1, 4]));
        assert_eq!(emit_edge_list(&set), "0 1 4\n");
        assert!(parse_edge_list("1 1").is_err());
    }
}
