//! Independent checks of a construction result.
//!
//! Nothing here trusts the construction's bookkeeping: faces, distances,
//! components and bonds are recomputed from the maps, and the recorded
//! colouring, ordering and diamonds are only read as claims to be checked.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::construction::{
    bond_toward, color_faces_by_edges, is_bond, ComponentOrdering, ConstructionResult, Diamond,
    FaceColor, FaceColoring, HamiltonCycle, Metrics, OrderingStep,
};
use crate::map::{trace_faces, EdgeId, PlaneMultigraph, VertexId};
use crate::two_factor::validate_two_factor;

/// One flag per claim. `square_strict` is informational; every other flag
/// must hold for the report to pass.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerificationReport {
    pub class_g: bool,
    pub two_factor_valid: bool,
    pub g_subgraph_of_j: bool,
    /// Faces differ in colour exactly across 2-factor edges.
    pub coloring_condition1: bool,
    pub bonds_valid: bool,
    /// No connecting edge lies on a face of length at most 3, and each chord
    /// joins distinct vertices that are non-adjacent when `G` is simple.
    pub condition2_facial: bool,
    /// No quadrilateral face carries two connecting edges.
    pub condition3: bool,
    /// Diamonds are well formed and share no edge.
    pub condition4: bool,
    pub euler_j: bool,
    pub within_square: bool,
    pub square_strict: bool,
    pub edge_count_formula: bool,
    pub max_degree_le5: bool,
    pub hamilton_valid: bool,
    pub omits_matching: bool,
    pub simplicity_preserved: bool,
    #[serde(skip)]
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mandatory().iter().all(|&(_, ok)| ok)
    }

    pub fn mandatory(&self) -> [(&'static str, bool); 15] {
        [
            ("class_g", self.class_g),
            ("two_factor_valid", self.two_factor_valid),
            ("g_subgraph_of_j", self.g_subgraph_of_j),
            ("coloring_condition1", self.coloring_condition1),
            ("bonds_valid", self.bonds_valid),
            ("condition2_facial", self.condition2_facial),
            ("condition3", self.condition3),
            ("condition4", self.condition4),
            ("euler_j", self.euler_j),
            ("within_square", self.within_square),
            ("edge_count_formula", self.edge_count_formula),
            ("max_degree_le5", self.max_degree_le5),
            ("hamilton_valid", self.hamilton_valid),
            ("omits_matching", self.omits_matching),
            ("simplicity_preserved", self.simplicity_preserved),
        ]
    }

    pub fn failed_flags(&self) -> Vec<&'static str> {
        self.mandatory()
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect()
    }
}

/// Whether `cycle` visits every vertex of `j` once and consecutive vertices
/// can be joined by pairwise distinct edges of `j` outside `forbidden`.
pub fn check_hamilton(
    j: &PlaneMultigraph,
    cycle: &[VertexId],
    forbidden: &BTreeSet<EdgeId>,
) -> bool {
    let n = j.num_vertices();
    if cycle.len() != n || n < 2 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let mut needed: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        *needed.entry((u.min(v), u.max(v))).or_default() += 1;
    }
    let mut available: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for e in (0..j.num_edges()).filter(|e| !forbidden.contains(e)) {
        let (u, v) = j.endpoints(e);
        *available.entry((u.min(v), u.max(v))).or_default() += 1;
    }
    needed
        .iter()
        .all(|(pair, &k)| available.get(pair).copied().unwrap_or(0) >= k)
}

/// Checks a result produced by [`crate::construction::construct`].
pub fn verify(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    result: &ConstructionResult,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let n = check_inputs(g, x_edges, &mut report);
    check_supergraph(g, x_edges, &result.j, &result.hamilton, n, &mut report);
    check_certificate(
        g,
        x_edges,
        &result.j,
        &result.coloring,
        &result.ordering,
        &result.diamonds,
        n,
        &mut report,
    );
    report
}

/// Checks `J` and a cycle read from files. The colouring, ordering and
/// diamonds are rebuilt from `J`'s chords before being checked.
pub fn verify_embedding(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    j: &PlaneMultigraph,
    cycle: &[VertexId],
) -> (VerificationReport, Metrics) {
    let mut report = VerificationReport::default();
    let n = check_inputs(g, x_edges, &mut report);
    let hamilton = HamiltonCycle {
        vertices: cycle.to_vec(),
        edges: Vec::new(),
    };
    check_supergraph(g, x_edges, j, &hamilton, n, &mut report);
    let metrics = Metrics {
        edges_g: g.num_edges(),
        edges_j: j.num_edges(),
        components_x: n.unwrap_or(0),
        max_degree_j: j.max_degree(),
        backtracks: 0,
    };
    if !report.g_subgraph_of_j || n.is_none() {
        report
            .diagnostics
            .push("certificate not rebuilt: inputs are inconsistent".into());
        return (report, metrics);
    }
    match reconstruct_certificate(g, x_edges, j) {
        Ok((coloring, ordering, diamonds)) => {
            check_certificate(
                g,
                x_edges,
                j,
                &coloring,
                &ordering,
                &diamonds,
                n,
                &mut report,
            );
        }
        Err(message) => report
            .diagnostics
            .push(format!("certificate not rebuilt: {message}")),
    }
    (report, metrics)
}

fn check_inputs(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    report: &mut VerificationReport,
) -> Option<usize> {
    let class = g.check_class_g();
    report.class_g = class.member();
    report.diagnostics.extend(class.failures);
    match validate_two_factor(g, x_edges) {
        Ok(x) => {
            report.two_factor_valid = true;
            Some(x.n())
        }
        Err(e) => {
            report.diagnostics.push(format!("2-factor: {e}"));
            None
        }
    }
}

fn check_supergraph(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    j: &PlaneMultigraph,
    hamilton: &HamiltonCycle,
    n: Option<usize>,
    report: &mut VerificationReport,
) {
    let diag = &mut report.diagnostics;
    // G ⊆ J with ids and rotations preserved.
    report.g_subgraph_of_j = j.num_vertices() == g.num_vertices()
        && j.num_edges() >= g.num_edges()
        && (0..g.num_edges())
            .all(|e| j.edge_darts(e) == g.edge_darts(e) && j.endpoints(e) == g.endpoints(e))
        && (0..g.num_vertices()).all(|v| {
            let restricted: Vec<_> = j
                .rotation(v)
                .iter()
                .copied()
                .filter(|&d| d < g.num_darts())
                .collect();
            same_cyclic_order(&restricted, g.rotation(v))
        });
    if !report.g_subgraph_of_j {
        diag.push("J does not extend G's embedding".into());
    }
    let faces = trace_faces(j).len();
    report.euler_j = j.num_vertices() + faces == j.num_edges() + 2;

    let distances: Vec<Vec<Option<usize>>> = (0..g.num_vertices())
        .map(|v| g.distances_from(v).expect("vertex exists"))
        .collect();
    report.within_square = report.g_subgraph_of_j
        && (0..j.num_edges()).all(|e| {
            let (u, v) = j.endpoints(e);
            let ok = matches!(distances[u][v], Some(1) | Some(2));
            if !ok {
                diag.push(format!(
                    "edge {e} of J joins {u} and {v}, not within distance 2 in G"
                ));
            }
            ok
        });
    if report.g_subgraph_of_j {
        report.square_strict = (0..g.num_vertices()).any(|u| {
            (u + 1..g.num_vertices())
                .any(|v| matches!(distances[u][v], Some(1) | Some(2)) && j.multiplicity(u, v) == 0)
        });
    }

    report.edge_count_formula = match n {
        Some(n) => j.num_edges() == g.num_edges() + 2 * n - 2,
        None => false,
    };
    if !report.edge_count_formula {
        diag.push(format!(
            "|E(J)| = {}, |E(G)| = {}, n = {n:?}",
            j.num_edges(),
            g.num_edges()
        ));
    }
    report.max_degree_le5 = j.max_degree() <= 5;
    report.simplicity_preserved = !g.is_simple() || j.is_simple();

    let cycle = &hamilton.vertices;
    let edges_consistent = hamilton.edges.is_empty()
        || (hamilton.edges.len() == cycle.len()
            && hamilton.edges.iter().collect::<BTreeSet<_>>().len() == cycle.len()
            && hamilton.edges.iter().enumerate().all(|(i, &e)| {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                e < j.num_edges() && {
                    let (a, b) = j.endpoints(e);
                    (a, b) == (u, v) || (a, b) == (v, u)
                }
            }));
    report.hamilton_valid = edges_consistent && check_hamilton(j, cycle, &BTreeSet::new());
    if !report.hamilton_valid {
        diag.push("cycle is not a Hamilton cycle of J".into());
    }
    let matching: BTreeSet<EdgeId> = (0..g.num_edges())
        .filter(|e| !x_edges.contains(e))
        .collect();
    report.omits_matching = report.g_subgraph_of_j
        && check_hamilton(j, cycle, &matching)
        && hamilton.edges.iter().all(|e| !matching.contains(e));
    if !report.omits_matching {
        diag.push("cycle cannot avoid the matching edges".into());
    }
}

fn same_cyclic_order(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match a.iter().position(|&x| x == b[0]) {
        Some(shift) => (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]),
        None => false,
    }
}

#[allow(clippy::too_many_arguments)]
fn check_certificate(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    j: &PlaneMultigraph,
    coloring: &FaceColoring,
    ordering: &ComponentOrdering,
    diamonds: &[Diamond],
    n: Option<usize>,
    report: &mut VerificationReport,
) {
    let Some(n) = n else {
        return;
    };
    let x = validate_two_factor(g, x_edges).expect("validated by caller");
    let diag = &mut report.diagnostics;

    // Colours differ exactly across 2-factor edges.
    report.coloring_condition1 = match g.face_adjacency() {
        Ok(adjacency) => {
            coloring.color.len() == g.num_faces()
                && coloring.reversed.len() == g.num_faces()
                && coloring
                    .color
                    .iter()
                    .zip(&coloring.reversed)
                    .all(|(&c, &r)| r == (c == FaceColor::Alpha))
                && adjacency.iter().enumerate().all(|(e, &(f, h))| {
                    let ok = (coloring.color[f] != coloring.color[h]) == x_edges.contains(&e);
                    if !ok {
                        diag.push(format!("colouring is wrong across edge {e}"));
                    }
                    ok
                })
        }
        Err(e) => {
            diag.push(e.to_string());
            false
        }
    };

    let m: BTreeSet<EdgeId> = ordering.connectors().into_iter().collect();

    // Ordering and bonds.
    report.bonds_valid = check_ordering(g, &x, x_edges, ordering, &m, diag);

    // No connecting edge on a face of length at most 3, no quadrilateral
    // with two of them, and every chord joins distinct non-adjacent vertices.
    let simple = g.is_simple();
    report.condition2_facial = true;
    report.condition3 = true;
    for face in g.faces() {
        let on_face: Vec<usize> = (0..face.len())
            .filter(|&i| m.contains(&g.edge_of(face.walk[i])))
            .collect();
        if on_face.is_empty() {
            continue;
        }
        if face.len() <= 3 {
            report.condition2_facial = false;
            diag.push(format!(
                "face {} of length {} carries a connecting edge",
                face.id,
                face.len()
            ));
        }
        if face.len() == 4 && on_face.len() > 1 {
            report.condition3 = false;
            diag.push(format!(
                "4-face {} carries {} connecting edges",
                face.id,
                on_face.len()
            ));
        }
        let k = face.len();
        for &i in &on_face {
            let d = face.walk[i];
            let ahead = g.head(face.walk[(i + 1) % k]);
            let behind = g.tail(face.walk[(i + k - 1) % k]);
            for (p, q) in [(g.tail(d), ahead), (g.head(d), behind)] {
                if p == q || (simple && g.multiplicity(p, q) > 0) {
                    report.condition2_facial = false;
                    diag.push(format!("chord {p}-{q} on face {} is degenerate", face.id));
                }
            }
        }
    }

    // Diamonds are well formed and pairwise edge-disjoint.
    report.condition4 =
        check_diamonds(g, j, x_edges, coloring, &m, diamonds, diag) && diamonds.len() + 1 == n;
}

fn check_ordering(
    g: &PlaneMultigraph,
    x: &crate::two_factor::TwoFactor,
    x_edges: &BTreeSet<EdgeId>,
    ordering: &ComponentOrdering,
    m: &BTreeSet<EdgeId>,
    diag: &mut Vec<String>,
) -> bool {
    let n = x.n();
    let mut order = ordering.order.clone();
    order.sort_unstable();
    if order != (0..n).collect::<Vec<_>>() || ordering.steps.len() + 1 != n || m.len() + 1 != n {
        diag.push("ordering is not a permutation of the components".into());
        return false;
    }
    let mut inside = vec![false; g.num_vertices()];
    for &v in &x.components()[ordering.order[0]].vertices {
        inside[v] = true;
    }
    let mut used_edges: BTreeSet<EdgeId> = x_edges.clone();
    for (i, step) in ordering.steps.iter().enumerate() {
        let OrderingStep {
            grown,
            component,
            bond,
            connector,
        } = step;
        let expected_grown: Vec<VertexId> = (0..g.num_vertices()).filter(|&v| inside[v]).collect();
        if *grown != expected_grown || *component != ordering.order[i + 1] {
            diag.push(format!("step {i}: grown set or component mismatch"));
            return false;
        }
        let members: BTreeSet<VertexId> = x.components()[*component]
            .vertices
            .iter()
            .copied()
            .collect();
        let claimed: BTreeSet<EdgeId> = bond.iter().copied().collect();
        if !is_bond(g, &claimed) {
            diag.push(format!("step {i}: {claimed:?} is not a bond"));
            return false;
        }
        let on_boundary = |e: EdgeId| {
            let (u, v) = g.endpoints(e);
            inside[u] != inside[v]
        };
        if !claimed.iter().all(|&e| on_boundary(e)) {
            diag.push(format!("step {i}: bond leaves the boundary of S_i"));
            return false;
        }
        let (u, v) = g.endpoints(*connector);
        let joins = (inside[u] && members.contains(&v)) || (inside[v] && members.contains(&u));
        if !joins || !claimed.contains(connector) || x_edges.contains(connector) {
            diag.push(format!(
                "step {i}: connector does not join S_i to the new component"
            ));
            return false;
        }
        if claimed.iter().filter(|e| m.contains(e)).count() != 1 {
            diag.push(format!(
                "step {i}: bond carries more than one connecting edge"
            ));
            return false;
        }
        // S_i stays connected through 2-factor edges and earlier connectors.
        let sub: Vec<EdgeId> = used_edges
            .iter()
            .copied()
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                inside[u] && inside[v]
            })
            .collect();
        let parts = g.components(sub);
        if parts.iter().filter(|p| inside[p[0]]).count() != 1 {
            diag.push(format!("step {i}: grown subgraph is disconnected"));
            return false;
        }
        for &v in &members {
            inside[v] = true;
        }
        used_edges.insert(*connector);
    }
    true
}

fn check_diamonds(
    g: &PlaneMultigraph,
    j: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    coloring: &FaceColoring,
    m: &BTreeSet<EdgeId>,
    diamonds: &[Diamond],
    diag: &mut Vec<String>,
) -> bool {
    let eg = g.num_edges();
    let joins = |map: &PlaneMultigraph, e: EdgeId, u: VertexId, v: VertexId| {
        e < map.num_edges() && {
            let (a, b) = map.endpoints(e);
            (a, b) == (u, v) || (a, b) == (v, u)
        }
    };
    let mut ok = true;
    let mut seen_m = BTreeSet::new();
    for dm in diamonds {
        let distinct: BTreeSet<VertexId> = dm.vertices().into_iter().collect();
        let shape = distinct.len() == 4
            && m.contains(&dm.m_edge)
            && dm.e0[0] == dm.m_edge
            && joins(g, dm.e0[0], dm.a, dm.b)
            && dm.e0[1] < eg
            && joins(g, dm.e0[1], dm.b, dm.c)
            && x_edges.contains(&dm.e0[1])
            && dm.e0[2] < eg
            && joins(g, dm.e0[2], dm.a, dm.d)
            && x_edges.contains(&dm.e0[2])
            && dm.e1.iter().all(|&e| e >= eg)
            && joins(j, dm.e1[0], dm.a, dm.c)
            && joins(j, dm.e1[1], dm.b, dm.d);
        let kind_ok = g
            .face_adjacency()
            .map(|adj| {
                let (f, h) = adj[dm.m_edge];
                coloring.color.get(f) == Some(&dm.kind) && coloring.color.get(h) == Some(&dm.kind)
            })
            .unwrap_or(false);
        if !shape || !kind_ok || !seen_m.insert(dm.m_edge) {
            diag.push(format!("diamond of edge {} is malformed", dm.m_edge));
            ok = false;
        }
    }
    if seen_m != *m {
        diag.push("diamonds do not match the connecting edges".into());
        ok = false;
    }
    let mut owner: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for dm in diamonds {
        for e in dm.edges() {
            if let Some(prev) = owner.insert(e, dm.m_edge) {
                diag.push(format!(
                    "diamonds of {prev} and {} share edge {e}",
                    dm.m_edge
                ));
                ok = false;
            }
        }
    }
    let chords: BTreeSet<EdgeId> = (eg..j.num_edges()).collect();
    let claimed: BTreeSet<EdgeId> = diamonds.iter().flat_map(|d| d.e1).collect();
    if chords != claimed {
        diag.push("chords of J are not exactly the diamond chords".into());
        ok = false;
    }
    let mut per_vertex = vec![0; g.num_vertices()];
    for dm in diamonds {
        for v in dm.vertices() {
            if v < per_vertex.len() {
                per_vertex[v] += 1;
            }
        }
    }
    if let Some(v) = per_vertex.iter().position(|&c| c > 2) {
        diag.push(format!("vertex {v} lies in {} diamonds", per_vertex[v]));
        ok = false;
    }
    ok
}

/// A triangle of `J` bounded by a chord `a c`, a matching edge `a b` and a
/// 2-factor edge `b c`.
#[derive(Debug, Clone, Copy)]
struct HalfDiamond {
    chord: EdgeId,
    m_edge: EdgeId,
    a: VertexId,
    b: VertexId,
    c: VertexId,
    bc: EdgeId,
}

type Certificate = (FaceColoring, ComponentOrdering, Vec<Diamond>);

/// Rebuilds colouring, connecting edges, diamonds and an ordering from `J`.
fn reconstruct_certificate(
    g: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    j: &PlaneMultigraph,
) -> Result<Certificate, String> {
    let x = validate_two_factor(g, x_edges).map_err(|e| e.to_string())?;
    let coloring = color_faces_by_edges(g, x_edges, FaceColor::Alpha).map_err(|e| e.to_string())?;
    let eg = g.num_edges();
    let mut halves: Vec<HalfDiamond> = Vec::new();
    for face in j.faces().iter().filter(|f| f.len() == 3) {
        let edges: Vec<EdgeId> = face.walk.iter().map(|&d| j.edge_of(d)).collect();
        let chord: Vec<EdgeId> = edges.iter().copied().filter(|&e| e >= eg).collect();
        let matching: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|&e| e < eg && !x_edges.contains(&e))
            .collect();
        let factor: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|e| x_edges.contains(e))
            .collect();
        if let ([ch], [me], [xe]) = (chord.as_slice(), matching.as_slice(), factor.as_slice()) {
            let (p, q) = j.endpoints(*ch);
            let (s, t) = g.endpoints(*me);
            let (a, c) = if p == s || p == t { (p, q) } else { (q, p) };
            let b = if s == a { t } else { s };
            halves.push(HalfDiamond {
                chord: *ch,
                m_edge: *me,
                a,
                b,
                c,
                bc: *xe,
            });
        }
    }
    // Candidate diamonds: two halves on the same matching edge, one from each end.
    let mut candidates: Vec<Diamond> = Vec::new();
    for h1 in &halves {
        for h2 in &halves {
            if h1.m_edge == h2.m_edge && h1.a == h2.b && h1.b == h2.a && h1.chord != h2.chord {
                let (f, _) = g.face_adjacency().map_err(|e| e.to_string())?[h1.m_edge];
                candidates.push(Diamond {
                    m_edge: h1.m_edge,
                    a: h1.a,
                    b: h1.b,
                    c: h1.c,
                    d: h2.c,
                    e0: [h1.m_edge, h1.bc, h2.bc],
                    e1: [h1.chord, h2.chord],
                    kind: coloring.color[f],
                });
            }
        }
    }
    let chords: Vec<EdgeId> = (eg..j.num_edges()).collect();
    let mut chosen = Vec::new();
    if !cover_chords(&chords, &candidates, &mut BTreeSet::new(), &mut chosen) {
        return Err("chords of J do not split into diamonds".into());
    }
    let diamonds: Vec<Diamond> = chosen.into_iter().map(|i| candidates[i].clone()).collect();
    let m: BTreeSet<EdgeId> = diamonds.iter().map(|d| d.m_edge).collect();

    // Grow from the component of vertex 0 along connecting edges, each with
    // a bond around the grown part that holds no other connecting edge.
    let start = x.component_of(0);
    let mut inside = vec![false; g.num_vertices()];
    for &v in &x.components()[start].vertices {
        inside[v] = true;
    }
    let mut order = vec![start];
    let mut steps = Vec::new();
    if !grow_along(g, &x, &m, &mut inside, &mut order, &mut steps) {
        return Err("connecting edges admit no bond ordering".into());
    }
    let ordering = ComponentOrdering {
        order,
        steps,
        backtracks: 0,
    };
    Ok((coloring, ordering, diamonds))
}

fn grow_along(
    g: &PlaneMultigraph,
    x: &crate::two_factor::TwoFactor,
    m: &BTreeSet<EdgeId>,
    inside: &mut Vec<bool>,
    order: &mut Vec<usize>,
    steps: &mut Vec<OrderingStep>,
) -> bool {
    if order.len() == x.n() {
        return true;
    }
    for &e in m {
        let (u, v) = g.endpoints(e);
        if inside[u] == inside[v] {
            continue;
        }
        let out = if inside[u] { v } else { u };
        let bond = bond_toward(g, inside, out);
        if bond.iter().filter(|b| m.contains(b)).count() != 1 {
            continue;
        }
        let c = x.component_of(out);
        steps.push(OrderingStep {
            grown: (0..g.num_vertices()).filter(|&w| inside[w]).collect(),
            component: c,
            bond: bond.into_iter().collect(),
            connector: e,
        });
        order.push(c);
        for &w in &x.components()[c].vertices {
            inside[w] = true;
        }
        if grow_along(g, x, m, inside, order, steps) {
            return true;
        }
        for &w in &x.components()[c].vertices {
            inside[w] = false;
        }
        order.pop();
        steps.pop();
    }
    false
}

fn cover_chords(
    chords: &[EdgeId],
    candidates: &[Diamond],
    covered: &mut BTreeSet<EdgeId>,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(&next) = chords.iter().find(|c| !covered.contains(c)) else {
        return true;
    };
    for (i, cand) in candidates.iter().enumerate() {
        if !cand.e1.contains(&next) || cand.e1.iter().any(|e| covered.contains(e)) {
            continue;
        }
        if chosen.iter().any(|&k| candidates[k].m_edge == cand.m_edge) {
            continue;
        }
        covered.extend(cand.e1);
        chosen.push(i);
        if cover_chords(chords, candidates, covered, chosen) {
            return true;
        }
        chosen.pop();
        for e in cand.e1 {
            covered.remove(&e);
        }
    }
    false
}
