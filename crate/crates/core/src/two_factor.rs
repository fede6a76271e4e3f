//! 2-factors of cubic maps, obtained as complements of perfect matchings.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::ControlFlow;

use thiserror::Error;

use crate::map::{EdgeId, PlaneMultigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoFactorError {
    #[error("vertex {vertex} has {degree} incident edges in the set, expected 2")]
    DegreeViolation { vertex: VertexId, degree: usize },
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} does not have degree 3")]
    NotCubic(VertexId),
    #[error("matching is not perfect")]
    MatchingNotPerfect,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
}

/// A closed walk through distinct vertices; `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    edges: BTreeSet<EdgeId>,
    components: Vec<Cycle>,
    component_of: Vec<usize>,
}

impl TwoFactor {
    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    /// Cycles ordered by their lowest vertex. Each starts at that vertex.
    pub fn components(&self) -> &[Cycle] {
        &self.components
    }

    /// Number of components.
    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v]
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Edges of the map not in the 2-factor.
    pub fn complement(&self, map: &PlaneMultigraph) -> BTreeSet<EdgeId> {
        (0..map.num_edges())
            .filter(|e| !self.edges.contains(e))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub edges: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// No two edges share an endpoint.
    pub fn is_matching(&self, map: &PlaneMultigraph) -> bool {
        let mut covered = vec![false; map.num_vertices()];
        for &e in &self.edges {
            if e >= map.num_edges() {
                return false;
            }
            let (u, v) = map.endpoints(e);
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        true
    }

    pub fn is_perfect(&self, map: &PlaneMultigraph) -> bool {
        self.is_matching(map) && 2 * self.edges.len() == map.num_vertices()
    }
}

/// Caps for exhaustive matching enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: usize,
    pub max_matchings: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_vertices: 60,
            max_matchings: 2_000_000,
        }
    }
}

/// Checks that every vertex has exactly two incident edges from `edges`
/// and splits them into cycles.
pub fn validate_two_factor(
    map: &PlaneMultigraph,
    edges: &BTreeSet<EdgeId>,
) -> Result<TwoFactor, TwoFactorError> {
    let n = map.num_vertices();
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in edges {
        if e >= map.num_edges() {
            return Err(TwoFactorError::UnknownEdge(e));
        }
        let (u, v) = map.endpoints(e);
        incident[u].push(e);
        incident[v].push(e);
    }
    if let Some(v) = (0..n).find(|&v| incident[v].len() != 2) {
        return Err(TwoFactorError::DegreeViolation {
            vertex: v,
            degree: incident[v].len(),
        });
    }
    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut cycle = Cycle {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        let mut v = start;
        let mut e = *incident[start].iter().min().unwrap();
        loop {
            component_of[v] = id;
            cycle.vertices.push(v);
            cycle.edges.push(e);
            v = map.opposite(e, v);
            if v == start {
                break;
            }
            e = *incident[v].iter().find(|&&x| x != e).unwrap();
        }
        components.push(cycle);
    }
    Ok(TwoFactor {
        edges: edges.clone(),
        components,
        component_of,
    })
}

/// The 2-factor formed by the edges outside a perfect matching of a cubic map.
pub fn complement_two_factor(
    map: &PlaneMultigraph,
    matching: &Matching,
) -> Result<TwoFactor, TwoFactorError> {
    if let Some(v) = (0..map.num_vertices()).find(|&v| map.rotation(v).len() != 3) {
        return Err(TwoFactorError::NotCubic(v));
    }
    if !matching.is_perfect(map) {
        return Err(TwoFactorError::MatchingNotPerfect);
    }
    let rest = (0..map.num_edges())
        .filter(|e| !matching.edges.contains(e))
        .collect();
    validate_two_factor(map, &rest)
}

/// Maximum-cardinality matching by Edmonds' blossom search on the underlying
/// simple graph; each matched pair is represented by its lowest edge id.
pub fn maximum_matching(map: &PlaneMultigraph) -> Matching {
    let n = map.num_vertices();
    let mut lowest: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
    for e in 0..map.num_edges() {
        let (u, v) = map.endpoints(e);
        lowest.entry((u.min(v), u.max(v))).or_insert(e);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in lowest.keys() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mate = Blossom::new(&adj).solve();
    let edges = (0..n)
        .filter_map(|u| mate[u].filter(|&v| u < v).map(|v| lowest[&(u, v)]))
        .collect();
    Matching { edges }
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn solve(mut self) -> Vec<Option<usize>> {
        for root in 0..self.adj.len() {
            if self.mate[root].is_some() {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                // Flip the alternating path ending at the exposed vertex v.
                loop {
                    let pv = self.parent[v].unwrap();
                    let next = self.mate[pv];
                    self.mate[v] = Some(pv);
                    self.mate[pv] = Some(v);
                    match next {
                        Some(w) => v = w,
                        None => break,
                    }
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].unwrap(),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].unwrap()].unwrap();
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].unwrap();
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].unwrap();
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                if to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some()) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Visits every perfect matching (as ascending edge ids). Branches on the
/// lowest uncovered vertex, trying its edges by increasing id.
pub fn for_each_perfect_matching<F>(
    map: &PlaneMultigraph,
    limits: EnumerationLimits,
    mut visit: F,
) -> Result<usize, TwoFactorError>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    if map.num_vertices() > limits.max_vertices {
        return Err(TwoFactorError::LimitExceeded(format!(
            "{} vertices > {}",
            map.num_vertices(),
            limits.max_vertices
        )));
    }
    if map.num_vertices() % 2 == 1 {
        return Ok(0);
    }
    let mut incident: Vec<Vec<EdgeId>> = (0..map.num_vertices())
        .map(|v| map.incident_edges(v).collect())
        .collect();
    for list in &mut incident {
        list.sort_unstable();
        list.dedup();
    }
    let mut search = MatchingSearch {
        map,
        incident,
        covered: vec![false; map.num_vertices()],
        chosen: Vec::new(),
        count: 0,
        limit: limits.max_matchings,
        over_limit: false,
    };
    let _ = search.run(&mut visit);
    if search.over_limit {
        return Err(TwoFactorError::LimitExceeded(format!(
            "more than {} perfect matchings",
            limits.max_matchings
        )));
    }
    Ok(search.count)
}

struct MatchingSearch<'a> {
    map: &'a PlaneMultigraph,
    incident: Vec<Vec<EdgeId>>,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    count: usize,
    limit: usize,
    over_limit: bool,
}

impl MatchingSearch<'_> {
    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[EdgeId]) -> ControlFlow<()>,
    {
        let Some(v) = self.covered.iter().position(|&c| !c) else {
            self.count += 1;
            if self.count > self.limit {
                self.over_limit = true;
                return ControlFlow::Break(());
            }
            let mut sorted = self.chosen.clone();
            sorted.sort_unstable();
            return visit(&sorted);
        };
        self.covered[v] = true;
        for i in 0..self.incident[v].len() {
            let e = self.incident[v][i];
            let w = self.map.opposite(e, v);
            if self.covered[w] {
                continue;
            }
            self.covered[w] = true;
            self.chosen.push(e);
            let dead = self.strands_a_neighbor(w) || self.strands_a_neighbor(v);
            let flow = if dead {
                ControlFlow::Continue(())
            } else {
                self.run(visit)
            };
            self.chosen.pop();
            self.covered[w] = false;
            if flow.is_break() {
                self.covered[v] = false;
                return flow;
            }
        }
        self.covered[v] = false;
        ControlFlow::Continue(())
    }

    /// Some uncovered neighbour of `x` has no uncovered neighbour left.
    fn strands_a_neighbor(&self, x: VertexId) -> bool {
        self.map
            .neighbors(x)
            .any(|y| !self.covered[y] && self.map.neighbors(y).all(|z| self.covered[z]))
    }
}

/// All perfect matchings, sorted lexicographically by their ascending edge ids.
pub fn enumerate_perfect_matchings(
    map: &PlaneMultigraph,
    limits: EnumerationLimits,
) -> Result<Vec<Matching>, TwoFactorError> {
    let mut all: Vec<Vec<EdgeId>> = Vec::new();
    for_each_perfect_matching(map, limits, |m| {
        all.push(m.to_vec());
        ControlFlow::Continue(())
    })?;
    all.sort();
    Ok(all
        .into_iter()
        .map(|edges| Matching {
            edges: edges.into_iter().collect(),
        })
        .collect())
}

fn count_cycles(map: &PlaneMultigraph, matching: &[EdgeId]) -> usize {
    let mut in_matching = vec![false; map.num_edges()];
    for &e in matching {
        in_matching[e] = true;
    }
    map.components((0..map.num_edges()).filter(|&e| !in_matching[e]))
        .len()
}

/// A 2-factor with the fewest components; ties go to the lexicographically
/// smallest complementary matching.
pub fn min_component_two_factor(
    map: &PlaneMultigraph,
    limits: EnumerationLimits,
) -> Result<TwoFactor, TwoFactorError> {
    if let Some(v) = (0..map.num_vertices()).find(|&v| map.rotation(v).len() != 3) {
        return Err(TwoFactorError::NotCubic(v));
    }
    let mut best: Option<(usize, Vec<EdgeId>)> = None;
    for_each_perfect_matching(map, limits, |m| {
        let n = count_cycles(map, m);
        let better = match &best {
            None => true,
            Some((bn, bm)) => (n, m) < (*bn, bm.as_slice()),
        };
        if better {
            best = Some((n, m.to_vec()));
        }
        ControlFlow::Continue(())
    })?;
    let (_, edges) = best.ok_or(TwoFactorError::NoPerfectMatching)?;
    complement_two_factor(
        map,
        &Matching {
            edges: edges.into_iter().collect(),
        },
    )
}

/// The complement of the blossom matching.
pub fn first_matching_two_factor(map: &PlaneMultigraph) -> Result<TwoFactor, TwoFactorError> {
    let matching = maximum_matching(map);
    if !matching.is_perfect(map) {
        return Err(TwoFactorError::NoPerfectMatching);
    }
    complement_two_factor(map, &matching)
}

/// Fewest cycles when enumeration stays within the default limits,
/// otherwise the complement of the blossom matching.
pub fn default_two_factor(map: &PlaneMultigraph) -> Result<TwoFactor, TwoFactorError> {
    match min_component_two_factor(map, EnumerationLimits::default()) {
        Err(TwoFactorError::LimitExceeded(_)) => first_matching_two_factor(map),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named, random_class_g};

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

    #[test]
    fn matchings_are_perfect_on_corpus() {
        for name in crate::corpus::NAMES {
            let g = named(name).unwrap();
            let m = maximum_matching(&g);
            assert!(m.is_perfect(&g), "{name}");
            assert_eq!(m.edges.len(), g.num_vertices() / 2);
        }
        assert_eq!(maximum_matching(&named("tutte").unwrap()).edges.len(), 23);
    }

    #[test]
    fn matching_counts() {
        let count = |name| {
            enumerate_perfect_matchings(&named(name).unwrap(), EnumerationLimits::default())
                .unwrap()
                .len()
        };
        assert_eq!(count("theta"), 3);
        assert_eq!(count("k4"), 3);
        assert_eq!(count("cube"), 9);
    }

    #[test]
    fn complements() {
        let k4 = named("k4").unwrap();
        let m = Matching {
            edges: edges_by_ends(&k4, &[(0, 1), (2, 3)]),
        };
        let x = complement_two_factor(&k4, &m).unwrap();
        assert_eq!(x.n(), 1);
        assert_eq!(x.components()[0].vertices.len(), 4);

        let prism = named("prism").unwrap();
        let rungs = Matching {
            edges: edges_by_ends(&prism, &[(0, 3), (1, 4), (2, 5)]),
        };
        assert_eq!(complement_two_factor(&prism, &rungs).unwrap().n(), 2);

        let theta = named("theta").unwrap();
        let x = complement_two_factor(
            &theta,
            &Matching {
                edges: BTreeSet::from([2]),
            },
        )
        .unwrap();
        assert_eq!((x.n(), x.components()[0].vertices.len()), (1, 2));
        assert_eq!(
            complement_two_factor(
                &theta,
                &Matching {
                    edges: BTreeSet::new()
                }
            ),
            Err(TwoFactorError::MatchingNotPerfect)
        );
    }

    #[test]
    fn validation() {
        let prism = named("prism").unwrap();
        let triangles = edges_by_ends(&prism, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(validate_two_factor(&prism, &triangles).unwrap().n(), 2);
        let k4 = named("k4").unwrap();
        let triangle = edges_by_ends(&k4, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            validate_two_factor(&k4, &triangle),
            Err(TwoFactorError::DegreeViolation {
                vertex: 3,
                degree: 0
            })
        ));
        let theta = named("theta").unwrap();
        assert!(matches!(
            validate_two_factor(&theta, &BTreeSet::from([0, 1, 2])),
            Err(TwoFactorError::DegreeViolation { degree: 3, .. })
        ));
    }

    #[test]
    fn min_components() {
        let limits = EnumerationLimits::default();
        assert_eq!(
            min_component_two_factor(&named("k4").unwrap(), limits)
                .unwrap()
                .n(),
            1
        );
        let prism = named("prism").unwrap();
        let x = min_component_two_factor(&prism, limits).unwrap();
        assert_eq!(x.n(), 1);
        assert_eq!(x.components()[0].vertices.len(), 6);
        assert_eq!(
            min_component_two_factor(&named("tutte").unwrap(), limits)
                .unwrap()
                .n(),
            2
        );
    }

    #[test]
    fn limits_are_enforced() {
        let cube = named("cube").unwrap();
        let tight = EnumerationLimits {
            max_vertices: 60,
            max_matchings: 5,
        };
        assert!(matches!(
            enumerate_perfect_matchings(&cube, tight),
            Err(TwoFactorError::LimitExceeded(_))
        ));
        let small = EnumerationLimits {
            max_vertices: 6,
            max_matchings: 100,
        };
        assert!(matches!(
            enumerate_perfect_matchings(&cube, small),
            Err(TwoFactorError::LimitExceeded(_))
        ));
    }

    /// Counts perfect matchings by choosing, for the lowest uncovered vertex,
    /// each incident edge in turn.
    fn brute_count(map: &PlaneMultigraph, covered: &mut Vec<bool>) -> usize {
        let Some(v) = (0..map.num_vertices()).find(|&v| !covered[v]) else {
            return 1;
        };
        let mut total = 0;
        for e in map.incident_edges(v).collect::<Vec<_>>() {
            let w = map.opposite(e, v);
            if w != v && !covered[w] {
                covered[v] = true;
                covered[w] = true;
                total += brute_count(map, covered);
                covered[v] = false;
                covered[w] = false;
            }
        }
        total
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        for seed in 0..15 {
            for multi in [false, true] {
                let g = random_class_g(12, seed, multi).unwrap();
                let all = enumerate_perfect_matchings(&g, EnumerationLimits::default()).unwrap();
                assert_eq!(
                    all.len(),
                    brute_count(&g, &mut vec![false; 12]),
                    "seed {seed}"
                );
                assert!(all.windows(2).all(|w| w[0].edges < w[1].edges));
                for m in &all {
                    let x = complement_two_factor(&g, m).unwrap();
                    assert_eq!(x.complement(&g), m.edges);
                }
            }
        }
    }
}
