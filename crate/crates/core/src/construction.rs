//! Builds the plane supergraph `J` and its Hamilton cycle.
//!
//! Pipeline: 2-colour the faces so colours flip exactly across 2-factor
//! edges, give every face a traversal direction from its colour, order the
//! 2-factor components so each new one hangs off the grown part through a
//! bond, then for every connecting matching edge `ab` add the two chords of
//! its diamond and splice the cycles together.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map::{ClassReport, DartId, EdgeId, FaceId, MapError, PlaneMultigraph, VertexId};
use crate::two_factor::{validate_two_factor, TwoFactor, TwoFactorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input is not a cubic 2-connected loopless plane multigraph: {0:?}")]
    NotInClass(Vec<String>),
    #[error(transparent)]
    TwoFactor(#[from] TwoFactorError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("faces are not all reachable across 2-factor edges ({reached} of {total})")]
    DualDisconnectedOverX { reached: usize, total: usize },
    #[error("face colouring is inconsistent at edge {0}")]
    ParityClash(EdgeId),
    #[error("no bond-respecting ordering of the 2-factor components exists from component {0}")]
    NoBondOrdering(usize),
    #[error("chord {0}-{1} would duplicate an edge of a simple graph")]
    ChordParallelInSimple(VertexId, VertexId),
    #[error("connecting edge {edge} lies on a facial cycle of length {len}")]
    ShortFace { edge: EdgeId, len: usize },
    #[error("face {face} of length 4 carries {count} connecting edges")]
    CrowdedQuadrilateral { face: FaceId, count: usize },
    #[error("connecting edge {edge} received {found} chords instead of 2")]
    MissingChords { edge: EdgeId, found: usize },
    #[error("diamonds of edges {0} and {1} share edge {2}")]
    DiamondOverlap(EdgeId, EdgeId, EdgeId),
    #[error("edge {0} missing from the cycle it should be removed from")]
    EdgeNotPresentForRemoval(EdgeId),
    #[error("assembled edge set is not a single spanning cycle")]
    NotSingleCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceColor {
    Alpha,
    Beta,
}

impl FaceColor {
    pub fn flip(self) -> Self {
        match self {
            FaceColor::Alpha => FaceColor::Beta,
            FaceColor::Beta => FaceColor::Alpha,
        }
    }
}

impl fmt::Display for FaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FaceColor::Alpha => "alpha",
            FaceColor::Beta => "beta",
        })
    }
}

/// Face colours indexed by face id, plus whether the assigned walk runs
/// against the traced one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    pub color: Vec<FaceColor>,
    pub reversed: Vec<bool>,
}

impl FaceColoring {
    fn from_colors(color: Vec<FaceColor>) -> Self {
        // Tracing runs inner faces counterclockwise and the outer face
        // clockwise, so flipping exactly the alpha faces gives inner alpha
        // faces clockwise and an alpha outer face counterclockwise.
        let reversed = color.iter().map(|&c| c == FaceColor::Alpha).collect();
        FaceColoring { color, reversed }
    }
}

/// One step of the assigned walk of a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStep {
    pub from: VertexId,
    pub to: VertexId,
    pub edge: EdgeId,
    /// The dart of the traced walk lying on this edge.
    pub traced: DartId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingStep {
    /// Vertex set of the grown subgraph before this step, sorted.
    pub grown: Vec<VertexId>,
    /// Index of the component attached in this step.
    pub component: usize,
    /// A bond inside the boundary of `grown` that contains the connector and
    /// no other connector, ascending. It is every edge from `grown` to the
    /// component of `G - grown` holding the new cycle, which is exactly the
    /// edges between `grown` and the new cycle when those already form a bond.
    pub bond: Vec<EdgeId>,
    /// The connecting edge used for the splice.
    pub connector: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentOrdering {
    /// Component indices in attachment order.
    pub order: Vec<usize>,
    /// `steps[i]` attaches `order[i + 1]`.
    pub steps: Vec<OrderingStep>,
    pub backtracks: usize,
}

impl ComponentOrdering {
    pub fn connectors(&self) -> Vec<EdgeId> {
        self.steps.iter().map(|s| s.connector).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diamond {
    pub m_edge: EdgeId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    /// `ab`, `bc`, `ad` in the original graph.
    pub e0: [EdgeId; 3],
    /// Chords `ac`, `bd`.
    pub e1: [EdgeId; 2],
    pub kind: FaceColor,
}

impl Diamond {
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.e0.iter().chain(self.e1.iter()).copied()
    }

    pub fn vertices(&self) -> [VertexId; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    pub vertices: Vec<VertexId>,
    /// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub edges_g: usize,
    pub edges_j: usize,
    pub components_x: usize,
    pub max_degree_j: usize,
    pub backtracks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub j: PlaneMultigraph,
    pub hamilton: HamiltonCycle,
    pub diamonds: Vec<Diamond>,
    pub coloring: FaceColoring,
    pub ordering: ComponentOrdering,
    pub metrics: Metrics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructOptions {
    /// Colour given to the outer face.
    pub root_color: FaceColor,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            root_color: FaceColor::Alpha,
        }
    }
}

/// Colours faces by breadth-first search across 2-factor edges from the
/// outer face, which gets colour alpha.
pub fn color_faces(
    map: &PlaneMultigraph,
    x: &TwoFactor,
) -> Result<FaceColoring, ConstructionError> {
    color_faces_by_edges(map, x.edges(), FaceColor::Alpha)
}

/// Colouring for an arbitrary edge set: colours flip across `x_edges` and
/// stay across every other edge. Fails if that is impossible.
pub fn color_faces_by_edges(
    map: &PlaneMultigraph,
    x_edges: &BTreeSet<EdgeId>,
    root_color: FaceColor,
) -> Result<FaceColoring, ConstructionError> {
    let adjacency = map.face_adjacency()?;
    let mut across: Vec<Vec<FaceId>> = vec![Vec::new(); map.num_faces()];
    for &e in x_edges {
        let (f, g) = adjacency[e];
        across[f].push(g);
        across[g].push(f);
    }
    let root = map.outer_face();
    let mut color: Vec<Option<FaceColor>> = vec![None; map.num_faces()];
    color[root] = Some(root_color);
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        let next = color[f].unwrap().flip();
        for &g in &across[f] {
            if color[g].is_none() {
                color[g] = Some(next);
                queue.push_back(g);
            }
        }
    }
    let reached = color.iter().filter(|c| c.is_some()).count();
    if reached != color.len() {
        return Err(ConstructionError::DualDisconnectedOverX {
            reached,
            total: color.len(),
        });
    }
    let color: Vec<FaceColor> = color.into_iter().map(Option::unwrap).collect();
    for (e, &(f, g)) in adjacency.iter().enumerate() {
        let differ = color[f] != color[g];
        if differ != x_edges.contains(&e) {
            return Err(ConstructionError::ParityClash(e));
        }
    }
    Ok(FaceColoring::from_colors(color))
}

/// The face walk in its assigned direction: the traced walk, reversed when
/// the face is alpha.
pub fn assigned_walk(
    map: &PlaneMultigraph,
    coloring: &FaceColoring,
    face: FaceId,
) -> Vec<WalkStep> {
    let walk = &map.faces()[face].walk;
    let step = |d: DartId, forward: bool| {
        let (from, to) = if forward {
            (map.tail(d), map.head(d))
        } else {
            (map.head(d), map.tail(d))
        };
        WalkStep {
            from,
            to,
            edge: map.edge_of(d),
            traced: d,
        }
    };
    if coloring.reversed[face] {
        walk.iter().rev().map(|&d| step(d, false)).collect()
    } else {
        walk.iter().map(|&d| step(d, true)).collect()
    }
}

/// Whether removing `edges` leaves exactly two components with every
/// removed edge running between them.
pub fn is_bond(map: &PlaneMultigraph, edges: &BTreeSet<EdgeId>) -> bool {
    if edges.is_empty() || edges.iter().any(|&e| e >= map.num_edges()) {
        return false;
    }
    let parts = map.components((0..map.num_edges()).filter(|e| !edges.contains(e)));
    if parts.len() != 2 {
        return false;
    }
    let mut side = vec![0; map.num_vertices()];
    for &v in &parts[1] {
        side[v] = 1;
    }
    edges.iter().all(|&e| {
        let (u, v) = map.endpoints(e);
        side[u] != side[v]
    })
}

/// Edges with one end in `inside` and the other in `target`.
fn edges_between(map: &PlaneMultigraph, inside: &[bool], target: &[bool]) -> BTreeSet<EdgeId> {
    (0..map.num_edges())
        .filter(|&e| {
            let (u, v) = map.endpoints(e);
            (inside[u] && target[v]) || (inside[v] && target[u])
        })
        .collect()
}

/// Edges from `inside` to the component of `G - inside` containing `toward`.
/// For connected `inside` this is always a bond.
pub fn bond_toward(map: &PlaneMultigraph, inside: &[bool], toward: VertexId) -> BTreeSet<EdgeId> {
    let outside = (0..map.num_edges()).filter(|&e| {
        let (u, v) = map.endpoints(e);
        !inside[u] && !inside[v]
    });
    let mut reach = vec![false; map.num_vertices()];
    if let Some(part) = map
        .components(outside)
        .into_iter()
        .find(|p| p.contains(&toward))
    {
        for v in part {
            reach[v] = true;
        }
    }
    edges_between(map, inside, &reach)
}

/// Orders the components so that each new one hangs off everything before
/// it by a connecting edge that is the only connecting edge of some bond
/// around the grown part. Starts at the component of vertex 0. Candidates
/// whose edges to the grown part already form a bond come first, then the
/// rest, each by increasing component index; dead ends backtrack.
pub fn order_components(
    map: &PlaneMultigraph,
    x: &TwoFactor,
) -> Result<ComponentOrdering, ConstructionError> {
    let n = x.n();
    let start = x.component_of(0);
    let mut members = vec![vec![false; map.num_vertices()]; n];
    for (i, c) in x.components().iter().enumerate() {
        for &v in &c.vertices {
            members[i][v] = true;
        }
    }
    let mut search = OrderSearch {
        map,
        x,
        members: &members,
        inside: members[start].clone(),
        used: vec![false; n],
        order: vec![start],
        steps: Vec::new(),
        backtracks: 0,
    };
    search.used[start] = true;
    if search.extend() {
        Ok(ComponentOrdering {
            order: search.order,
            steps: search.steps,
            backtracks: search.backtracks,
        })
    } else {
        Err(ConstructionError::NoBondOrdering(start))
    }
}

struct OrderSearch<'a> {
    map: &'a PlaneMultigraph,
    x: &'a TwoFactor,
    members: &'a [Vec<bool>],
    inside: Vec<bool>,
    used: Vec<bool>,
    order: Vec<usize>,
    steps: Vec<OrderingStep>,
    backtracks: usize,
}

impl OrderSearch<'_> {
    /// Viable next steps as (component, connector, bond), strict ones first.
    fn candidates(&self) -> Vec<(usize, EdgeId, BTreeSet<EdgeId>)> {
        let mut strict = Vec::new();
        let mut loose = Vec::new();
        for c in (0..self.members.len()).filter(|&c| !self.used[c]) {
            let between = edges_between(self.map, &self.inside, &self.members[c]);
            // An edge already in an earlier bond would be its second connector.
            let Some(&connector) = between
                .iter()
                .find(|e| !self.steps.iter().any(|s| s.bond.contains(e)))
            else {
                continue;
            };
            let bond = bond_toward(self.map, &self.inside, self.x.components()[c].vertices[0]);
            if bond == between {
                strict.push((c, connector, bond));
            } else {
                loose.push((c, connector, bond));
            }
        }
        strict.extend(loose);
        strict
    }

    fn extend(&mut self) -> bool {
        if self.order.len() == self.members.len() {
            return true;
        }
        for (c, connector, bond) in self.candidates() {
            let grown = (0..self.inside.len()).filter(|&v| self.inside[v]).collect();
            self.steps.push(OrderingStep {
                grown,
                component: c,
                connector,
                bond: bond.into_iter().collect(),
            });
            self.order.push(c);
            self.used[c] = true;
            for (v, &m) in self.members[c].iter().enumerate() {
                if m {
                    self.inside[v] = true;
                }
            }
            if self.extend() {
                return true;
            }
            self.backtracks += 1;
            for (v, &m) in self.members[c].iter().enumerate() {
                if m {
                    self.inside[v] = false;
                }
            }
            self.used[c] = false;
            self.order.pop();
            self.steps.pop();
        }
        false
    }
}

/// A chord to be inserted: spans two consecutive traced darts starting at `first`.
#[derive(Debug, Clone, Copy)]
struct PlannedChord {
    m_edge: EdgeId,
    first: DartId,
    from: VertexId,
    to: VertexId,
    /// The G-edge following the connecting edge in the assigned walk.
    next_edge: EdgeId,
}

/// Adds the chords `c_i c_{i+2}` after every connecting edge `c_i c_{i+1}`
/// on every face, in assigned-walk order, and records one diamond per
/// connecting edge.
pub fn plan_and_insert_diamonds(
    map: &PlaneMultigraph,
    coloring: &FaceColoring,
    ordering: &ComponentOrdering,
) -> Result<(PlaneMultigraph, Vec<Diamond>), ConstructionError> {
    let connectors: BTreeSet<EdgeId> = ordering.connectors().into_iter().collect();
    let simple = map.is_simple();
    let mut planned: Vec<PlannedChord> = Vec::new();
    for face in map.faces() {
        let steps = assigned_walk(map, coloring, face.id);
        let k = steps.len();
        let on_face = steps
            .iter()
            .filter(|s| connectors.contains(&s.edge))
            .count();
        if on_face == 0 {
            continue;
        }
        if k == 4 && on_face > 1 {
            return Err(ConstructionError::CrowdedQuadrilateral {
                face: face.id,
                count: on_face,
            });
        }
        for (i, s) in steps.iter().enumerate() {
            if !connectors.contains(&s.edge) {
                continue;
            }
            if k <= 3 {
                return Err(ConstructionError::ShortFace {
                    edge: s.edge,
                    len: k,
                });
            }
            let next = steps[(i + 1) % k];
            let first = if coloring.reversed[face.id] {
                next.traced
            } else {
                s.traced
            };
            if s.from == next.to {
                return Err(MapError::ChordEndpointsEqual(s.from).into());
            }
            if simple && map.multiplicity(s.from, next.to) > 0 {
                return Err(ConstructionError::ChordParallelInSimple(s.from, next.to));
            }
            planned.push(PlannedChord {
                m_edge: s.edge,
                first,
                from: s.from,
                to: next.to,
                next_edge: next.edge,
            });
        }
    }

    let mut j = map.clone();
    let mut inserted: BTreeMap<EdgeId, Vec<(PlannedChord, EdgeId)>> = BTreeMap::new();
    for chord in planned {
        let face = j.face_of_dart(chord.first);
        // Traced darts keep their ids, so the corner is found again in the
        // current remainder face.
        let target = if j.tail(chord.first) == chord.from {
            chord.to
        } else {
            chord.from
        };
        let (next, edge) = j.insert_chord(face, chord.first, target)?;
        if simple && next.multiplicity(chord.from, chord.to) > 1 {
            return Err(ConstructionError::ChordParallelInSimple(
                chord.from, chord.to,
            ));
        }
        j = next;
        inserted
            .entry(chord.m_edge)
            .or_default()
            .push((chord, edge));
    }

    let mut diamonds = Vec::new();
    for step in &ordering.steps {
        let m = step.connector;
        let pair = inserted.get(&m).map(Vec::as_slice).unwrap_or(&[]);
        let [(c1, e1), (c2, e2)] = pair else {
            return Err(ConstructionError::MissingChords {
                edge: m,
                found: pair.len(),
            });
        };
        // c1 runs a→b then b→c; c2 runs b→a then a→d.
        let (a, b) = map.endpoints(m);
        let (first, second) = if c1.from == a {
            ((c1, e1), (c2, e2))
        } else {
            ((c2, e2), (c1, e1))
        };
        let (ac, ce) = first;
        let (bd, de) = second;
        let (fa, fb) = map.face_adjacency()?[m];
        debug_assert_eq!(coloring.color[fa], coloring.color[fb]);
        diamonds.push(Diamond {
            m_edge: m,
            a,
            b,
            c: ac.to,
            d: bd.to,
            e0: [m, ac.next_edge, bd.next_edge],
            e1: [*ce, *de],
            kind: coloring.color[fa],
        });
    }
    for (i, p) in diamonds.iter().enumerate() {
        for q in &diamonds[i + 1..] {
            if let Some(e) = p.edges().find(|e| q.edges().any(|f| f == *e)) {
                return Err(ConstructionError::DiamondOverlap(p.m_edge, q.m_edge, e));
            }
        }
    }
    Ok((j, diamonds))
}

/// Splices the components together: `H_1 = C_1`, then each step adds the
/// next component, drops `bc` and `ad`, and adds `ac` and `bd`.
pub fn assemble_hamilton(
    j: &PlaneMultigraph,
    x: &TwoFactor,
    ordering: &ComponentOrdering,
    diamonds: &[Diamond],
) -> Result<HamiltonCycle, ConstructionError> {
    let by_edge: BTreeMap<EdgeId, &Diamond> = diamonds.iter().map(|d| (d.m_edge, d)).collect();
    let mut cycle: BTreeSet<EdgeId> = x.components()[ordering.order[0]]
        .edges
        .iter()
        .copied()
        .collect();
    for step in &ordering.steps {
        cycle.extend(x.components()[step.component].edges.iter().copied());
        let diamond = by_edge
            .get(&step.connector)
            .ok_or(ConstructionError::EdgeNotPresentForRemoval(step.connector))?;
        if cycle.contains(&diamond.m_edge) {
            return Err(ConstructionError::NotSingleCycle);
        }
        for e in [diamond.e0[1], diamond.e0[2]] {
            if !cycle.remove(&e) {
                return Err(ConstructionError::EdgeNotPresentForRemoval(e));
            }
        }
        cycle.extend(diamond.e1);
    }
    trace_cycle(j, &cycle)
}

/// Walks a spanning cycle given as an edge set, starting at vertex 0 along
/// its lower incident edge.
fn trace_cycle(
    j: &PlaneMultigraph,
    edges: &BTreeSet<EdgeId>,
) -> Result<HamiltonCycle, ConstructionError> {
    let n = j.num_vertices();
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in edges {
        let (u, v) = j.endpoints(e);
        incident[u].push(e);
        incident[v].push(e);
    }
    if edges.len() != n || incident.iter().any(|l| l.len() != 2) {
        return Err(ConstructionError::NotSingleCycle);
    }
    let mut vertices = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    let mut v = 0;
    let mut e = *incident[0].iter().min().unwrap();
    loop {
        vertices.push(v);
        order.push(e);
        v = j.opposite(e, v);
        if v == 0 {
            break;
        }
        e = *incident[v].iter().find(|&&x| x != e).unwrap();
    }
    if vertices.len() != n {
        return Err(ConstructionError::NotSingleCycle);
    }
    Ok(HamiltonCycle {
        vertices,
        edges: order,
    })
}

fn require_class(report: ClassReport) -> Result<(), ConstructionError> {
    if report.member() {
        Ok(())
    } else {
        Err(ConstructionError::NotInClass(report.failures))
    }
}

/// Runs the whole pipeline with the outer face coloured alpha.
pub fn construct(
    map: &PlaneMultigraph,
    x: &TwoFactor,
) -> Result<ConstructionResult, ConstructionError> {
    construct_with(map, x, ConstructOptions::default())
}

pub fn construct_with(
    map: &PlaneMultigraph,
    x: &TwoFactor,
    options: ConstructOptions,
) -> Result<ConstructionResult, ConstructionError> {
    require_class(map.check_class_g())?;
    let x = validate_two_factor(map, x.edges())?;
    let coloring = color_faces_by_edges(map, x.edges(), options.root_color)?;
    let ordering = order_components(map, &x)?;
    let (j, diamonds) = plan_and_insert_diamonds(map, &coloring, &ordering)?;
    let hamilton = assemble_hamilton(&j, &x, &ordering, &diamonds)?;
    let metrics = Metrics {
        edges_g: map.num_edges(),
        edges_j: j.num_edges(),
        components_x: x.n(),
        max_degree_j: j.max_degree(),
        backtracks: ordering.backtracks,
    };
    Ok(ConstructionResult {
        j,
        hamilton,
        diamonds,
        coloring,
        ordering,
        metrics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::verify::verify;

    fn edges_by_ends(map: &PlaneMultigraph, pairs: &[(VertexId, VertexId)]) -> BTreeSet<EdgeId> {
        pairs
            .iter()
            .map(|&(u, v)| {
                (0..map.num_edges())
                    .find(|&e| {
                        let (a, b) = map.endpoints(e);
                        (a, b) == (u, v) || (a, b) == (v, u)
                    })
                    .unwrap()
            })
            .collect()
    }

    fn prism_triangles() -> (PlaneMultigraph, TwoFactor) {
        let g = named("prism").unwrap();
        let x = edges_by_ends(&g, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let x = validate_two_factor(&g, &x).unwrap();
        (g, x)
    }

    fn cube_squares() -> (PlaneMultigraph, TwoFactor) {
        let g = named("cube").unwrap();
        let x = edges_by_ends(
            &g,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
            ],
        );
        let x = validate_two_factor(&g, &x).unwrap();
        (g, x)
    }

    #[test]
    fn theta_colouring() {
        let g = named("theta").unwrap();
        let x = validate_two_factor(&g, &BTreeSet::from([0, 1])).unwrap();
        let c = color_faces(&g, &x).unwrap();
        let (f, h) = g.face_adjacency().unwrap()[2];
        assert_eq!(c.color[g.outer_face()], FaceColor::Alpha);
        assert_eq!(c.color[f], c.color[h]);
        let alphas = c.color.iter().filter(|&&k| k == FaceColor::Alpha).count();
        assert_eq!(alphas, 1);
    }

    #[test]
    fn colouring_satisfies_condition_one() {
        for (g, x) in [prism_triangles(), cube_squares()] {
            let c = color_faces(&g, &x).unwrap();
            for (e, (f, h)) in g.face_adjacency().unwrap().into_iter().enumerate() {
                assert_eq!(c.color[f] != c.color[h], x.contains(e));
            }
        }
    }

    #[test]
    fn odd_bond_is_a_parity_clash() {
        let g = named("k4").unwrap();
        let all: BTreeSet<EdgeId> = (0..g.num_edges()).collect();
        assert!(matches!(
            color_faces_by_edges(&g, &all, FaceColor::Alpha),
            Err(ConstructionError::ParityClash(_))
        ));
        let star: BTreeSet<EdgeId> = g.incident_edges(0).collect();
        assert!(matches!(
            color_faces_by_edges(&g, &star, FaceColor::Alpha),
            Err(ConstructionError::DualDisconnectedOverX {
                reached: 3,
                total: 4
            })
        ));
    }

    #[test]
    fn assigned_walk_directions() {
        let (g, x) = prism_triangles();
        let c = color_faces(&g, &x).unwrap();
        for face in g.faces() {
            let walk = assigned_walk(&g, &c, face.id);
            let traced: Vec<DartId> = walk.iter().map(|s| s.traced).collect();
            if c.reversed[face.id] {
                let mut back = face.walk.clone();
                back.reverse();
                assert_eq!(traced, back);
                assert!(walk.iter().all(|s| s.from == g.head(s.traced)));
            } else {
                assert_eq!(traced, face.walk);
                assert!(walk.iter().all(|s| s.from == g.tail(s.traced)));
            }
        }
        // Matching edges are run in opposite directions by their two faces.
        for e in x.complement(&g) {
            let (f, h) = g.face_adjacency().unwrap()[e];
            let dir = |face| {
                let s = assigned_walk(&g, &c, face)
                    .into_iter()
                    .find(|s| s.edge == e)
                    .unwrap();
                (s.from, s.to)
            };
            let (p, q) = dir(f);
            assert_eq!(dir(h), (q, p));
        }
    }

    #[test]
    fn bonds() {
        let theta = named("theta").unwrap();
        assert!(is_bond(&theta, &BTreeSet::from([0, 1, 2])));
        assert!(!is_bond(&theta, &BTreeSet::from([0, 1])));
        assert!(!is_bond(&theta, &BTreeSet::new()));
        let k4 = named("k4").unwrap();
        assert!(is_bond(&k4, &k4.incident_edges(2).collect()));
        assert!(!is_bond(&k4, &BTreeSet::from([0])));
    }

    #[test]
    fn orderings() {
        let k4 = named("k4").unwrap();
        let x = min_factor(&k4);
        let ord = order_components(&k4, &x).unwrap();
        assert!(ord.steps.is_empty() && ord.connectors().is_empty());

        let (g, x) = prism_triangles();
        let ord = order_components(&g, &x).unwrap();
        let rungs = edges_by_ends(&g, &[(0, 3), (1, 4), (2, 5)]);
        assert_eq!(ord.steps[0].bond, rungs.iter().copied().collect::<Vec<_>>());
        assert_eq!(ord.steps[0].connector, *rungs.first().unwrap());
        assert_eq!(ord.backtracks, 0);

        let (g, x) = cube_squares();
        let ord = order_components(&g, &x).unwrap();
        let rungs = edges_by_ends(&g, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert_eq!(ord.steps[0].bond, rungs.iter().copied().collect::<Vec<_>>());
        assert_eq!(ord.steps[0].connector, *rungs.first().unwrap());
    }

    fn min_factor(g: &PlaneMultigraph) -> TwoFactor {
        crate::two_factor::min_component_two_factor(g, Default::default()).unwrap()
    }

    #[test]
    fn prism_construction() {
        let (g, x) = prism_triangles();
        let r = construct(&g, &x).unwrap();
        assert_eq!(r.j.num_edges(), 11);
        assert_eq!(r.diamonds.len(), 1);
        let d = &r.diamonds[0];
        assert_eq!(d.vertices().iter().collect::<BTreeSet<_>>().len(), 4);
        assert!(d.e1.iter().all(|&e| e >= g.num_edges()));
        let h = &r.hamilton;
        assert_eq!(h.vertices.len(), 6);
        assert_eq!(h.edges.iter().filter(|&&e| e >= g.num_edges()).count(), 2);
        assert_eq!(h.edges.iter().filter(|&&e| x.contains(e)).count(), 4);
        assert!(verify(&g, x.edges(), &r).passed());
    }

    #[test]
    fn cube_construction() {
        let (g, x) = cube_squares();
        let r = construct(&g, &x).unwrap();
        assert_eq!(r.j.num_edges(), 14);
        assert_eq!(
            r.hamilton
                .edges
                .iter()
                .filter(|&&e| e >= g.num_edges())
                .count(),
            2
        );
        assert_eq!(
            r.hamilton.edges.iter().filter(|&&e| x.contains(e)).count(),
            6
        );
        assert!(r.j.is_simple());
    }

    #[test]
    fn single_cycle_gives_j_equal_g() {
        let k4 = named("k4").unwrap();
        let x = min_factor(&k4);
        let r = construct(&k4, &x).unwrap();
        assert_eq!(r.j, k4);
        assert!(r.diamonds.is_empty());
        let mut cycle = r.hamilton.edges.clone();
        cycle.sort_unstable();
        assert_eq!(cycle, x.edges().iter().copied().collect::<Vec<_>>());
    }

    #[test]
    fn tutte_two_cycles() {
        let g = named("tutte").unwrap();
        let x = min_factor(&g);
        let r = construct(&g, &x).unwrap();
        assert_eq!((x.n(), r.j.num_edges()), (2, 71));
        assert!(r.j.is_simple() && r.j.max_degree() <= 5);
    }

    #[test]
    fn beta_root_also_works() {
        let (g, x) = cube_squares();
        let options = ConstructOptions {
            root_color: FaceColor::Beta,
        };
        let r = construct_with(&g, &x, options).unwrap();
        assert_eq!(r.j.num_edges(), 14);
        assert!(crate::verify::check_hamilton(
            &r.j,
            &r.hamilton.vertices,
            &x.complement(&g)
        ));
    }

    #[test]
    fn rejects_inputs_outside_the_class() {
        let k4 = named("k4").unwrap();
        let x = min_factor(&k4);
        let (bigger, _, _) = k4.subdivide_edge(0).unwrap();
        assert!(matches!(
            construct(&bigger, &x),
            Err(ConstructionError::NotInClass(_))
        ));
    }
}
