//! Named reference embeddings and random cubic 2-connected plane maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::io::{parse_pmg, FormatError};
use crate::map::PlaneMultigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown corpus graph `{0}`")]
    UnknownName(String),
    #[error("cannot grow a cubic map with {0} vertices from this start")]
    BadParity(usize),
    #[error(transparent)]
    Format(#[from] FormatError),
}

pub const NAMES: [&str; 5] = ["theta", "k4", "prism", "cube", "tutte"];

const THETA: &str = include_str!("../data/theta.pmg");
const K4: &str = include_str!("../data/k4.pmg");
const PRISM: &str = include_str!("../data/prism.pmg");
const CUBE: &str = include_str!("../data/cube.pmg");
const TUTTE: &str = include_str!("../data/tutte.pmg");

pub fn named_text(name: &str) -> Result<&'static str, CorpusError> {
    Ok(match name {
        "theta" => THETA,
        "k4" => K4,
        "prism" => PRISM,
        "cube" => CUBE,
        "tutte" => TUTTE,
        other => return Err(CorpusError::UnknownName(other.to_string())),
    })
}

pub fn named(name: &str) -> Result<PlaneMultigraph, CorpusError> {
    Ok(parse_pmg(named_text(name)?)?)
}

/// Grows a map from the theta graph (`allow_multi`) or from K4 by repeated
/// local expansions until it has `n_target` vertices.
///
/// Each move adds two vertices and three edges inside one face: either two
/// distinct edges of the face are subdivided and the new vertices joined, or
/// (multigraph mode only) an edge is subdivided twice and its middle piece
/// doubled. Both keep the map cubic, 2-connected, loopless and plane.
pub fn random_class_g(
    n_target: usize,
    seed: u64,
    allow_multi: bool,
) -> Result<PlaneMultigraph, CorpusError> {
    let start = if allow_multi { 2 } else { 4 };
    if n_target % 2 == 1 || n_target < start {
        return Err(CorpusError::BadParity(n_target));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map = named(if allow_multi { "theta" } else { "k4" })?;
    while map.num_vertices() < n_target {
        map = if allow_multi && rng.gen_bool(0.25) {
            double_subdivided_edge(&map, &mut rng)
        } else {
            join_subdivided_edges(&map, &mut rng)
        };
        let report = map.check_class_g();
        assert!(
            report.member(),
            "expansion left the class: {:?}",
            report.failures
        );
    }
    Ok(map)
}

fn join_subdivided_edges(map: &PlaneMultigraph, rng: &mut ChaCha8Rng) -> PlaneMultigraph {
    let face = &map.faces()[rng.gen_range(0..map.num_faces())];
    let k = face.len();
    let i = rng.gen_range(0..k);
    let j = (i + rng.gen_range(1..k)) % k;
    let (di, dj) = (face.walk[i], face.walk[j]);
    // Subdivision keeps each dart's id and tail, so di and dj now arrive at
    // the new vertices on the same face.
    let (map, _, _) = map.subdivide_edge(map.edge_of(di)).expect("edge exists");
    let (map, _, _) = map.subdivide_edge(map.edge_of(dj)).expect("edge exists");
    map.split_face(di, dj).expect("corners share a face").0
}

fn double_subdivided_edge(map: &PlaneMultigraph, rng: &mut ChaCha8Rng) -> PlaneMultigraph {
    let e = rng.gen_range(0..map.num_edges());
    let [a, _] = map.edge_darts(e);
    let (map, _, far) = map.subdivide_edge(e).expect("edge exists");
    let (map, _, middle) = map.subdivide_edge(far).expect("edge exists");
    // Now a runs u→x and the middle edge runs x→y.
    let xy = map.edge_darts(middle)[0];
    debug_assert_eq!(map.head(a), map.tail(xy));
    map.split_face(a, xy).expect("corners share a face").0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_expected_sizes() {
        let sizes = [
            ("theta", 2, 3, 3),
            ("k4", 4, 6, 4),
            ("prism", 6, 9, 5),
            ("cube", 8, 12, 6),
            ("tutte", 46, 69, 25),
        ];
        for (name, v, e, f) in sizes {
            let g = named(name).unwrap();
            assert_eq!(
                (g.num_vertices(), g.num_edges(), g.num_faces()),
                (v, e, f),
                "{name}"
            );
            assert!(g.check_class_g().member(), "{name}");
        }
        assert!(named("tutte").unwrap().is_simple());
        assert!(!named("theta").unwrap().is_simple());
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            named("petersen"),
            Err(CorpusError::UnknownName("petersen".into()))
        );
    }

    #[test]
    fn random_start_cases() {
        assert_eq!(random_class_g(4, 7, false).unwrap(), named("k4").unwrap());
        assert_eq!(random_class_g(2, 7, true).unwrap(), named("theta").unwrap());
        assert_eq!(random_class_g(5, 0, false), Err(CorpusError::BadParity(5)));
        assert_eq!(random_class_g(2, 0, false), Err(CorpusError::BadParity(2)));
    }

    #[test]
    fn random_graphs_are_in_class_and_deterministic() {
        for seed in 0..20 {
            for multi in [false, true] {
                let g = random_class_g(16, seed, multi).unwrap();
                assert_eq!(g.num_vertices(), 16);
                assert_eq!(g.num_edges(), 24);
                assert!(g.check_class_g().member());
                assert_eq!(g, random_class_g(16, seed, multi).unwrap());
                if !multi {
                    assert!(g.is_simple());
                }
            }
        }
    }
}
