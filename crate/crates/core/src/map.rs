//! Rotation-system representation of loopless plane multigraphs.
//!
//! Every edge is a pair of twin darts. Each vertex stores its darts in
//! counterclockwise order. Faces are the orbits of the successor rule
//! `succ(d) = prev_rotation(twin(d))`, which traces inner faces
//! counterclockwise and the outer face clockwise.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("dart {0} appears more than once")]
    DartReused(DartId),
    #[error("dart {0} is not matched between rotations and edges")]
    DanglingDart(DartId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error(
        "rotation system is not a plane embedding: V - E + F = {vertices} - {edges} + {faces} != 2"
    )]
    NotPlanarEmbedding {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Empty,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("unknown dart {0}")]
    UnknownDart(DartId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} has the same face on both sides")]
    BridgeEdge(EdgeId),
    #[error("chord would join vertex {0} to itself")]
    ChordEndpointsEqual(VertexId),
    #[error("dart {dart} with target {target} does not give a corner of face {face}")]
    CornerNotOnFace {
        face: FaceId,
        dart: DartId,
        target: VertexId,
    },
}

/// A half-edge: `tail` is where it starts, `edge` the undirected edge it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub id: DartId,
    pub tail: VertexId,
    pub edge: EdgeId,
}

/// A traced face. `walk[i + 1]` is the successor of `walk[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub walk: Vec<DartId>,
    pub is_outer: bool,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }
}

/// Outcome of the membership test for cubic 2-connected loopless plane multigraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub is_cubic: bool,
    pub is_2connected: bool,
    pub loopless: bool,
    pub plane: bool,
    pub failures: Vec<String>,
}

impl ClassReport {
    pub fn member(&self) -> bool {
        self.is_cubic && self.is_2connected && self.loopless && self.plane
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    rotation: Vec<Vec<DartId>>,
    edge_darts: Vec<[DartId; 2]>,
    dart_edge: Vec<EdgeId>,
    dart_tail: Vec<VertexId>,
    rot_index: Vec<usize>,
    outer_dart: DartId,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
}

impl PlaneMultigraph {
    /// Validates a rotation system. Vertex `i` is `vertex_rotations[i]`
    /// (counterclockwise), edge `j` is `edge_pairs[j]`. Dart ids must be
    /// exactly `0..2 * edge_pairs.len()`.
    pub fn build(
        vertex_rotations: Vec<Vec<DartId>>,
        edge_pairs: Vec<(DartId, DartId)>,
        outer_dart: DartId,
    ) -> Result<Self, MapError> {
        if edge_pairs.is_empty() {
            return Err(MapError::Empty);
        }
        let num_darts = 2 * edge_pairs.len();
        let mut dart_edge = vec![usize::MAX; num_darts];
        for (e, &(a, b)) in edge_pairs.iter().enumerate() {
            for d in [a, b] {
                if d >= num_darts {
                    return Err(MapError::DanglingDart(d));
                }
                if dart_edge[d] != usize::MAX {
                    return Err(MapError::DartReused(d));
                }
                dart_edge[d] = e;
            }
        }
        let mut dart_tail = vec![usize::MAX; num_darts];
        let mut rot_index = vec![0; num_darts];
        for (v, rot) in vertex_rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= num_darts {
                    return Err(MapError::DanglingDart(d));
                }
                if dart_tail[d] != usize::MAX {
                    return Err(MapError::DartReused(d));
                }
                dart_tail[d] = v;
                rot_index[d] = i;
            }
        }
        if let Some(d) = dart_tail.iter().position(|&t| t == usize::MAX) {
            return Err(MapError::DanglingDart(d));
        }
        for (e, &(a, b)) in edge_pairs.iter().enumerate() {
            if dart_tail[a] == dart_tail[b] {
                return Err(MapError::LoopEdge(e));
            }
        }
        if outer_dart >= num_darts {
            return Err(MapError::UnknownDart(outer_dart));
        }
        let mut map = PlaneMultigraph {
            rotation: vertex_rotations,
            edge_darts: edge_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            dart_edge,
            dart_tail,
            rot_index,
            outer_dart,
            faces: Vec::new(),
            dart_face: Vec::new(),
        };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        let faces = trace_faces(&map);
        let (v, e, f) = (map.num_vertices(), map.num_edges(), faces.len());
        if v + f != e + 2 {
            return Err(MapError::NotPlanarEmbedding {
                vertices: v,
                edges: e,
                faces: f,
            });
        }
        let mut dart_face = vec![0; num_darts];
        for face in &faces {
            for &d in &face.walk {
                dart_face[d] = face.id;
            }
        }
        map.faces = faces;
        map.dart_face = dart_face;
        Ok(map)
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn num_darts(&self) -> usize {
        self.dart_tail.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            tail: self.dart_tail[d],
            edge: self.dart_edge[d],
        }
    }

    pub fn twin(&self, d: DartId) -> DartId {
        let [a, b] = self.edge_darts[self.dart_edge[d]];
        if a == d {
            b
        } else {
            a
        }
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.dart_tail[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.dart_tail[self.twin(d)]
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    pub fn edge_darts(&self, e: EdgeId) -> [DartId; 2] {
        self.edge_darts[e]
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edge_darts[e];
        (self.dart_tail[a], self.dart_tail[b])
    }

    /// The endpoint of `e` other than `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<DartId>] {
        &self.rotation
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (DartId, DartId)> + '_ {
        self.edge_darts.iter().map(|&[a, b]| (a, b))
    }

    pub fn outer_dart(&self) -> DartId {
        self.outer_dart
    }

    pub fn rotation_next(&self, d: DartId) -> DartId {
        let rot = &self.rotation[self.dart_tail[d]];
        rot[(self.rot_index[d] + 1) % rot.len()]
    }

    pub fn rotation_prev(&self, d: DartId) -> DartId {
        let rot = &self.rotation[self.dart_tail[d]];
        rot[(self.rot_index[d] + rot.len() - 1) % rot.len()]
    }

    /// Next dart along the face walk containing `d`.
    pub fn succ(&self, d: DartId) -> DartId {
        self.rotation_prev(self.twin(d))
    }

    /// Previous dart along the face walk containing `d`.
    pub fn pred(&self, d: DartId) -> DartId {
        self.twin(self.rotation_next(d))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> Result<&Face, MapError> {
        self.faces.get(f).ok_or(MapError::UnknownFace(f))
    }

    pub fn face_of_dart(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    pub fn outer_face(&self) -> FaceId {
        self.dart_face[self.outer_dart]
    }

    /// Vertices of a face walk in traced order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f]
            .walk
            .iter()
            .map(|&d| self.dart_tail[d])
            .collect()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), MapError> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(MapError::UnknownVertex(v))
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, MapError> {
        self.check_vertex(v)?;
        Ok(self.rotation[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges incident with `v`, in rotation order.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.rotation[v].iter().map(|&d| self.dart_edge[d])
    }

    /// Neighbours of `v` with multiplicity, in rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v].iter().map(|&d| self.head(d))
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.neighbors(u).filter(|&w| w == v).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edge_darts.iter().all(|&[a, b]| {
            let (u, v) = (self.dart_tail[a], self.dart_tail[b]);
            seen.insert((u.min(v), u.max(v)))
        })
    }

    fn is_connected(&self) -> bool {
        self.components((0..self.num_edges()).collect::<Vec<_>>())
            .len()
            == 1
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Result<Vec<Option<usize>>, MapError> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.num_vertices()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn dist(&self, u: VertexId, v: VertexId) -> Result<Option<usize>, MapError> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Whether `u` and `v` are adjacent in the square of the graph (distance 1 or 2).
    pub fn within_square(&self, u: VertexId, v: VertexId) -> Result<bool, MapError> {
        Ok(matches!(self.dist(u, v)?, Some(1) | Some(2)))
    }

    /// Connected components of the spanning subgraph with the given edges.
    /// Each component is sorted; components are ordered by their lowest vertex.
    pub fn components<I>(&self, edges: I) -> Vec<Vec<VertexId>>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut parent: Vec<usize> = (0..self.num_vertices()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in edges {
            let (u, v) = self.endpoints(e);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot = vec![usize::MAX; self.num_vertices()];
        for v in 0..self.num_vertices() {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    /// Articulation points of the underlying graph.
    fn cut_vertices(&self) -> Vec<VertexId> {
        let n = self.num_vertices();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS; the stack holds (vertex, edge used to enter, next rotation index).
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
                if *idx < self.rotation[v].len() {
                    let d = self.rotation[v][*idx];
                    *idx += 1;
                    let e = self.dart_edge[d];
                    if Some(e) == via {
                        continue;
                    }
                    let w = self.head(d);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    pub fn check_class_g(&self) -> ClassReport {
        let mut failures = Vec::new();
        let bad_degree: Vec<_> = (0..self.num_vertices())
            .filter(|&v| self.rotation[v].len() != 3)
            .collect();
        if !bad_degree.is_empty() {
            failures.push(format!("vertices with degree != 3: {bad_degree:?}"));
        }
        let loopless = (0..self.num_edges()).all(|e| {
            let (u, v) = self.endpoints(e);
            u != v
        });
        if !loopless {
            failures.push("graph has a loop".to_string());
        }
        let connected = self.is_connected();
        let is_2connected = match self.num_vertices() {
            0 | 1 => false,
            2 => connected && self.num_edges() >= 2,
            _ => {
                let cuts = self.cut_vertices();
                if !cuts.is_empty() {
                    failures.push(format!("cut vertices: {cuts:?}"));
                }
                connected && cuts.is_empty()
            }
        };
        if !is_2connected {
            failures.push("graph is not 2-connected".to_string());
        }
        let faces = trace_faces(self).len();
        let plane = connected && self.num_vertices() + faces == self.num_edges() + 2;
        if !plane {
            failures.push("Euler characteristic is not 2".to_string());
        }
        ClassReport {
            is_cubic: bad_degree.is_empty(),
            is_2connected,
            loopless,
            plane,
            failures,
        }
    }

    /// For every edge, the face of its first dart and the face of its second dart.
    pub fn face_adjacency(&self) -> Result<Vec<(FaceId, FaceId)>, MapError> {
        self.edge_darts
            .iter()
            .enumerate()
            .map(|(e, &[a, b])| {
                let (fa, fb) = (self.dart_face[a], self.dart_face[b]);
                if fa == fb {
                    Err(MapError::BridgeEdge(e))
                } else {
                    Ok((fa, fb))
                }
            })
            .collect()
    }

    /// Adds an edge inside the face containing `arrive_a` and `arrive_b`,
    /// joining `head(arrive_a)` and `head(arrive_b)`. The new dart at each end
    /// is placed right after the arriving dart's corner, so the face splits
    /// into the part from `arrive_a`'s successor to `arrive_b` and the rest.
    /// Returns the new map and the id of the new edge.
    pub fn split_face(
        &self,
        arrive_a: DartId,
        arrive_b: DartId,
    ) -> Result<(PlaneMultigraph, EdgeId), MapError> {
        for d in [arrive_a, arrive_b] {
            if d >= self.num_darts() {
                return Err(MapError::UnknownDart(d));
            }
        }
        let (u, v) = (self.head(arrive_a), self.head(arrive_b));
        if u == v {
            return Err(MapError::ChordEndpointsEqual(u));
        }
        let face = self.dart_face[arrive_a];
        if self.dart_face[arrive_b] != face {
            return Err(MapError::CornerNotOnFace {
                face,
                dart: arrive_b,
                target: v,
            });
        }
        let new_edge = self.num_edges();
        let (du, dv) = (self.num_darts(), self.num_darts() + 1);
        let mut rotation = self.rotation.clone();
        for (vertex, arrive, dart) in [(u, arrive_a, du), (v, arrive_b, dv)] {
            let anchor = self.twin(arrive);
            let pos = rotation[vertex].iter().position(|&x| x == anchor).unwrap();
            rotation[vertex].insert(pos, dart);
        }
        let mut pairs: Vec<_> = self.edge_pairs().collect();
        pairs.push((du, dv));
        let map = PlaneMultigraph::build(rotation, pairs, self.outer_dart)?;
        Ok((map, new_edge))
    }

    /// Inserts the chord spanning two consecutive darts of face `face`:
    /// `first` runs p→q, its successor runs q→r with `r == target`, and the
    /// new edge p-r cuts the triangle (p, q, r) off the face.
    pub fn insert_chord(
        &self,
        face: FaceId,
        first: DartId,
        target: VertexId,
    ) -> Result<(PlaneMultigraph, EdgeId), MapError> {
        self.face(face)?;
        if first >= self.num_darts() {
            return Err(MapError::UnknownDart(first));
        }
        self.check_vertex(target)?;
        let second = self.succ(first);
        if self.dart_face[first] != face || self.head(second) != target {
            return Err(MapError::CornerNotOnFace {
                face,
                dart: first,
                target,
            });
        }
        if self.tail(first) == target {
            return Err(MapError::ChordEndpointsEqual(target));
        }
        self.split_face(self.pred(first), second)
    }

    /// Splits edge `e` with a new degree-2 vertex. The edge keeps its id for
    /// the half at its first dart's tail; the other half gets a new id.
    /// Returns the new map, the new vertex and the new edge.
    pub fn subdivide_edge(
        &self,
        e: EdgeId,
    ) -> Result<(PlaneMultigraph, VertexId, EdgeId), MapError> {
        if e >= self.num_edges() {
            return Err(MapError::UnknownEdge(e));
        }
        let [a, b] = self.edge_darts[e];
        let x = self.num_vertices();
        let new_edge = self.num_edges();
        let (xa, xb) = (self.num_darts(), self.num_darts() + 1);
        let mut rotation = self.rotation.clone();
        rotation.push(vec![xa, xb]);
        let mut pairs: Vec<_> = self.edge_pairs().collect();
        pairs[e] = (a, xa);
        pairs.push((b, xb));
        let map = PlaneMultigraph::build(rotation, pairs, self.outer_dart)?;
        Ok((map, x, new_edge))
    }

    /// Deletes edge `e`, merging its two faces. Later edges and darts shift
    /// down to keep ids dense.
    pub fn remove_edge(&self, e: EdgeId) -> Result<PlaneMultigraph, MapError> {
        if e >= self.num_edges() {
            return Err(MapError::UnknownEdge(e));
        }
        let gone = self.edge_darts[e];
        let renumber = |d: DartId| d - gone.iter().filter(|&&g| g < d).count();
        let rotation = self
            .rotation
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|d| !gone.contains(d))
                    .map(|&d| renumber(d))
                    .collect()
            })
            .collect();
        let pairs = self
            .edge_pairs()
            .enumerate()
            .filter(|&(f, _)| f != e)
            .map(|(_, (a, b))| (renumber(a), renumber(b)))
            .collect();
        let mut outer = self.outer_dart;
        while gone.contains(&outer) {
            outer = self.succ(outer);
        }
        PlaneMultigraph::build(rotation, pairs, renumber(outer))
    }
}

/// Traces all face walks. Faces are numbered in order of their lowest dart.
pub fn trace_faces(map: &PlaneMultigraph) -> Vec<Face> {
    let mut seen = vec![false; map.num_darts()];
    let mut faces = Vec::new();
    for start in 0..map.num_darts() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            walk.push(d);
            d = map.succ(d);
        }
        let is_outer = walk.contains(&map.outer_dart);
        faces.push(Face {
            id: faces.len(),
            walk,
            is_outer,
        });
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> PlaneMultigraph {
        PlaneMultigraph::build(
            vec![vec![0, 2, 4], vec![5, 3, 1]],
            vec![(0, 1), (2, 3), (4, 5)],
            0,
        )
        .unwrap()
    }

    /// K4 drawn with vertex 0 in the middle of triangle 1, 2, 3.
    fn k4() -> PlaneMultigraph {
        // edges: 0:01 1:02 2:03 3:12 4:23 5:31, darts 2e (first endpoint), 2e+1
        PlaneMultigraph::build(
            vec![vec![0, 2, 4], vec![1, 11, 6], vec![3, 7, 8], vec![5, 9, 10]],
            (0..6).map(|e| (2 * e, 2 * e + 1)).collect(),
            6,
        )
        .unwrap()
    }

    #[test]
    fn theta_has_three_two_walk_faces() {
        let g = theta();
        assert_eq!((g.num_vertices(), g.num_edges(), g.num_faces()), (2, 3, 3));
        assert!(g.faces().iter().all(|f| f.len() == 2));
        assert_eq!(g.faces().iter().filter(|f| f.is_outer).count(), 1);
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = k4();
        assert_eq!(g.num_faces(), 4);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!(g.check_class_g().member());
        assert!(g.is_simple());
        for v in 0..4 {
            for w in 0..4 {
                if v != w {
                    assert!(g.within_square(v, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn face_walks_close_up() {
        let g = k4();
        for f in g.faces() {
            for (i, &d) in f.walk.iter().enumerate() {
                let next = f.walk[(i + 1) % f.len()];
                assert_eq!(g.head(d), g.tail(next));
                assert_eq!(g.pred(next), d);
            }
        }
    }

    #[test]
    fn build_rejects_bad_rotations() {
        assert_eq!(
            PlaneMultigraph::build(
                vec![vec![0, 0, 4], vec![5, 3, 1]],
                vec![(0, 1), (2, 3), (4, 5)],
                0
            ),
            Err(MapError::DartReused(0))
        );
        assert_eq!(
            PlaneMultigraph::build(
                vec![vec![0, 2], vec![5, 3, 1]],
                vec![(0, 1), (2, 3), (4, 5)],
                0
            ),
            Err(MapError::DanglingDart(4))
        );
        assert_eq!(
            PlaneMultigraph::build(vec![vec![0, 1], vec![]], vec![(0, 1)], 0),
            Err(MapError::LoopEdge(0))
        );
        assert_eq!(
            PlaneMultigraph::build(
                vec![vec![0], vec![1], vec![2], vec![3]],
                vec![(0, 1), (2, 3)],
                0
            ),
            Err(MapError::Disconnected)
        );
        // theta with one vertex's rotation order not reversed: the three
        // edges trace a single face, so V - E + F = 2 - 3 + 1.
        assert!(matches!(
            PlaneMultigraph::build(
                vec![vec![0, 2, 4], vec![1, 3, 5]],
                vec![(0, 1), (2, 3), (4, 5)],
                0
            ),
            Err(MapError::NotPlanarEmbedding { faces: 1, .. })
        ));
    }

    #[test]
    fn k4_minus_edge_is_not_cubic() {
        // K4 without edge 0-1: vertices 0 and 1 have degree 2.
        let g = PlaneMultigraph::build(
            vec![vec![0, 2], vec![9, 4], vec![1, 5, 6], vec![3, 7, 8]],
            vec![(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)],
            0,
        )
        .unwrap();
        let report = g.check_class_g();
        assert!(!report.is_cubic);
        assert!(!report.member());
    }

    #[test]
    fn chord_in_digon_is_rejected() {
        let g = theta();
        let f = g.face_of_dart(0);
        assert_eq!(
            g.insert_chord(f, 0, 0),
            Err(MapError::ChordEndpointsEqual(0))
        );
    }

    #[test]
    fn chord_on_wrong_face_is_rejected() {
        let g = k4();
        let f = g.face_of_dart(0);
        let other = (0..g.num_faces()).find(|&x| x != f).unwrap();
        let target = g.head(g.succ(0));
        assert!(matches!(
            g.insert_chord(other, 0, target),
            Err(MapError::CornerNotOnFace { .. })
        ));
    }

    #[test]
    fn subdivision_keeps_euler() {
        let g = theta();
        let (h, x, _) = g.subdivide_edge(1).unwrap();
        assert_eq!(x, 2);
        assert_eq!(h.num_vertices(), 3);
        assert_eq!(h.num_edges(), 4);
        assert_eq!(h.degree(x).unwrap(), 2);
        assert_eq!(h.num_faces(), 3);
    }

    #[test]
    fn removing_a_chord_undoes_it() {
        let g = k4();
        let f = g.faces().iter().find(|f| !f.is_outer).unwrap();
        let (h, e) = g
            .subdivide_edge(g.edge_of(f.walk[0]))
            .unwrap()
            .0
            .split_face(f.walk[1], f.walk[2])
            .unwrap();
        assert_eq!(h.num_faces(), g.num_faces() + 1);
        let back = h.remove_edge(e).unwrap();
        assert_eq!(back, g.subdivide_edge(g.edge_of(f.walk[0])).unwrap().0);
        assert_eq!(h.remove_edge(0).unwrap().num_edges(), h.num_edges() - 1);
        assert_eq!(g.remove_edge(6), Err(MapError::UnknownEdge(6)));
    }

    #[test]
    fn unknown_vertex_errors() {
        let g = theta();
        assert_eq!(g.degree(7), Err(MapError::UnknownVertex(7)));
        assert_eq!(g.dist(0, 9), Err(MapError::UnknownVertex(9)));
    }
}
