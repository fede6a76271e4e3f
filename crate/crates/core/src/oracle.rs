//! Brute-force ground truth for small instances.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::construction::{construct, is_bond, ConstructionError};
use crate::map::{EdgeId, PlaneMultigraph, VertexId};
use crate::two_factor::TwoFactor;
use crate::verify::check_hamilton;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large: {what} = {size} > {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

pub const MAX_HAMILTON_VERTICES: usize = 20;
pub const MAX_DUAL_FACES: usize = 16;
pub const MAX_BIPARTITION_VERTICES: usize = 20;

fn limit(what: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}

/// Searches for a Hamilton cycle of the multigraph with `n` vertices and
/// the given edges, never using an edge whose index is in `forbidden`.
pub fn hamilton_search(
    n: usize,
    edges: &[(VertexId, VertexId)],
    forbidden: &BTreeSet<EdgeId>,
    max_vertices: usize,
) -> Result<Option<Vec<VertexId>>, OracleError> {
    limit("vertices", n, max_vertices)?;
    let mut mult = vec![vec![0usize; n]; n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u != v && !forbidden.contains(&e) {
            mult[u][v] += 1;
            mult[v][u] += 1;
        }
    }
    match n {
        0 | 1 => return Ok(None),
        2 => return Ok((mult[0][1] >= 2).then(|| vec![0, 1])),
        _ => {}
    }
    let adj: Vec<Vec<VertexId>> = (0..n)
        .map(|u| (0..n).filter(|&v| mult[u][v] > 0).collect())
        .collect();
    if adj.iter().any(|a| a.len() < 2) {
        return Ok(None);
    }
    let mut path = vec![0];
    let mut on_path = vec![false; n];
    on_path[0] = true;
    Ok(extend_path(&adj, &mut path, &mut on_path).then_some(path))
}

fn extend_path(adj: &[Vec<VertexId>], path: &mut Vec<VertexId>, on_path: &mut [bool]) -> bool {
    let n = adj.len();
    let last = *path.last().unwrap();
    if path.len() == n {
        return adj[last].contains(&path[0]);
    }
    // Every vertex off the path still needs two usable neighbours.
    let stuck = (0..n).any(|v| {
        !on_path[v]
            && adj[v]
                .iter()
                .filter(|&&w| !on_path[w] || w == last || w == path[0])
                .count()
                < 2
    });
    if stuck {
        return false;
    }
    for &w in &adj[last] {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if extend_path(adj, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

pub fn hamilton_search_map(
    map: &PlaneMultigraph,
    forbidden: &BTreeSet<EdgeId>,
) -> Result<Option<Vec<VertexId>>, OracleError> {
    let edges: Vec<_> = (0..map.num_edges()).map(|e| map.endpoints(e)).collect();
    hamilton_search(map.num_vertices(), &edges, forbidden, MAX_HAMILTON_VERTICES)
}

/// Every bond, as the set of edges crossed by a simple cycle of the dual.
/// Sorted by the ascending edge lists.
pub fn bonds_via_dual_cycles(
    map: &PlaneMultigraph,
    max_faces: usize,
) -> Result<Vec<BTreeSet<EdgeId>>, OracleError> {
    limit("faces", map.num_faces(), max_faces)?;
    let f = map.num_faces();
    let mut dual: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); f];
    for e in 0..map.num_edges() {
        let [a, b] = map.edge_darts(e);
        let (fa, fb) = (map.face_of_dart(a), map.face_of_dart(b));
        if fa != fb {
            dual[fa].push((fb, e));
            dual[fb].push((fa, e));
        }
    }
    let mut found: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    for start in 0..f {
        let mut on_path = vec![false; f];
        on_path[start] = true;
        let mut used = Vec::new();
        dual_cycles_from(&dual, start, start, &mut on_path, &mut used, &mut found);
    }
    Ok(found.into_iter().map(|v| v.into_iter().collect()).collect())
}

fn dual_cycles_from(
    dual: &[Vec<(usize, EdgeId)>],
    start: usize,
    at: usize,
    on_path: &mut [bool],
    used: &mut Vec<EdgeId>,
    found: &mut BTreeSet<Vec<EdgeId>>,
) {
    for &(next, e) in &dual[at] {
        if next == start && !used.is_empty() && used[0] != e {
            let mut cycle = used.clone();
            cycle.push(e);
            cycle.sort_unstable();
            found.insert(cycle);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            used.push(e);
            dual_cycles_from(dual, start, next, on_path, used, found);
            used.pop();
            on_path[next] = false;
        }
    }
}

/// Every bond, as `E[S, V \ S]` over vertex bipartitions with both sides connected.
pub fn bonds_by_bipartition(
    map: &PlaneMultigraph,
    max_vertices: usize,
) -> Result<Vec<BTreeSet<EdgeId>>, OracleError> {
    let n = map.num_vertices();
    limit("vertices", n, max_vertices)?;
    let mut found = BTreeSet::new();
    // Vertex 0 always sits on the `false` side.
    for mask in 1u64..(1u64 << (n - 1)) {
        let side = |v: VertexId| v > 0 && mask >> (v - 1) & 1 == 1;
        let cut: Vec<EdgeId> = (0..map.num_edges())
            .filter(|&e| {
                let (u, v) = map.endpoints(e);
                side(u) != side(v)
            })
            .collect();
        let inner = (0..map.num_edges()).filter(|&e| {
            let (u, v) = map.endpoints(e);
            side(u) == side(v)
        });
        if map.components(inner).len() == 2 {
            found.insert(cut);
        }
    }
    Ok(found.into_iter().map(|v| v.into_iter().collect()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossCheckReport {
    /// Every dual-cycle set passes `is_bond`, the two bond enumerations
    /// agree, and every ordering bond is among them.
    pub bonds_agree: bool,
    /// Every bond inside the 2-factor has even size.
    pub even_factor_bonds: bool,
    /// The oracle finds a Hamilton cycle of `J` avoiding the matching, and
    /// the constructed cycle is accepted.
    pub hamilton_agree: bool,
    pub num_bonds: usize,
    pub diagnostics: Vec<String>,
}

impl CrossCheckReport {
    pub fn all_agree(&self) -> bool {
        self.bonds_agree && self.even_factor_bonds && self.hamilton_agree
    }
}

pub fn cross_check(map: &PlaneMultigraph, x: &TwoFactor) -> Result<CrossCheckReport, OracleError> {
    let mut report = CrossCheckReport::default();
    let dual = bonds_via_dual_cycles(map, MAX_DUAL_FACES)?;
    let cuts = bonds_by_bipartition(map, MAX_BIPARTITION_VERTICES)?;
    let result = construct(map, x)?;
    report.num_bonds = dual.len();

    let every_is_bond = dual.iter().all(|b| is_bond(map, b));
    let enumerations_match = dual == cuts;
    let ordering_bonds_found = result.ordering.steps.iter().all(|s| {
        let b: BTreeSet<EdgeId> = s.bond.iter().copied().collect();
        is_bond(map, &b) && dual.contains(&b)
    });
    report.bonds_agree = every_is_bond && enumerations_match && ordering_bonds_found;
    if !report.bonds_agree {
        report.diagnostics.push(format!(
            "is_bond on dual cycles: {every_is_bond}, enumerations match: {enumerations_match}, ordering bonds found: {ordering_bonds_found}"
        ));
    }

    report.even_factor_bonds = dual
        .iter()
        .filter(|b| b.iter().all(|e| x.contains(*e)))
        .all(|b| b.len() % 2 == 0);
    if !report.even_factor_bonds {
        report
            .diagnostics
            .push("odd bond inside the 2-factor".into());
    }

    let matching = x.complement(map);
    let searched = hamilton_search_map(&result.j, &matching)?;
    let accepted = check_hamilton(&result.j, &result.hamilton.vertices, &matching);
    report.hamilton_agree = searched.is_some() && accepted;
    if !report.hamilton_agree {
        report.diagnostics.push(format!(
            "oracle cycle found: {}, constructed cycle accepted: {accepted}",
            searched.is_some()
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::two_factor::{min_component_two_factor, validate_two_factor};

    #[test]
    fn hamilton_cycles() {
        let k4 = named("k4").unwrap();
        let cycle = hamilton_search_map(&k4, &BTreeSet::new()).unwrap().unwrap();
        assert!(check_hamilton(&k4, &cycle, &BTreeSet::new()));
        let star = [(0, 1), (0, 2), (0, 3)];
        assert_eq!(
            hamilton_search(4, &star, &BTreeSet::new(), 20).unwrap(),
            None
        );
        let theta = named("theta").unwrap();
        assert!(hamilton_search_map(&theta, &BTreeSet::from([0]))
            .unwrap()
            .is_some());
        assert!(hamilton_search_map(&theta, &BTreeSet::from([0, 1]))
            .unwrap()
            .is_none());
        assert!(matches!(
            hamilton_search_map(&named("tutte").unwrap(), &BTreeSet::new()),
            Err(OracleError::SizeLimit { .. })
        ));
    }

    #[test]
    fn bond_enumeration() {
        let theta = named("theta").unwrap();
        assert_eq!(
            bonds_via_dual_cycles(&theta, 16).unwrap(),
            vec![BTreeSet::from([0, 1, 2])]
        );
        let k4 = named("k4").unwrap();
        let bonds = bonds_via_dual_cycles(&k4, 16).unwrap();
        assert_eq!(bonds.len(), 7);
        assert_eq!(bonds.iter().filter(|b| b.len() == 3).count(), 4);
        assert_eq!(bonds, bonds_by_bipartition(&k4, 20).unwrap());
        for name in ["prism", "cube"] {
            let g = named(name).unwrap();
            let bonds = bonds_via_dual_cycles(&g, 16).unwrap();
            assert!(bonds.iter().all(|b| is_bond(&g, b)));
            assert_eq!(bonds, bonds_by_bipartition(&g, 20).unwrap());
        }
    }

    #[test]
    fn cross_checks_agree() {
        let theta = named("theta").unwrap();
        let x = validate_two_factor(&theta, &BTreeSet::from([0, 1])).unwrap();
        assert!(cross_check(&theta, &x).unwrap().all_agree());
        for name in ["k4", "prism", "cube"] {
            let g = named(name).unwrap();
            let x = min_component_two_factor(&g, Default::default()).unwrap();
            let report = cross_check(&g, &x).unwrap();
            assert!(report.all_agree(), "{name}: {:?}", report.diagnostics);
        }
    }
}
