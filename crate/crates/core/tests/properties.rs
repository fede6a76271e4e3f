use std::collections::BTreeSet;

use planesq::construction::{construct, is_bond};
use planesq::corpus::random_class_g;
use planesq::io::{emit_pmg, parse_pmg};
use planesq::oracle::bonds_by_bipartition;
use planesq::two_factor::{complement_two_factor, enumerate_perfect_matchings, EnumerationLimits};
use planesq::verify::{verify, verify_embedding};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pmg_text_round_trips(half in 1usize..20, seed in any::<u64>(), multi in any::<bool>()) {
        let n = if multi { 2 * half } else { 2 * half + 2 };
        let g = random_class_g(n, seed, multi).unwrap();
        let text = emit_pmg(&g);
        prop_assert_eq!(emit_pmg(&parse_pmg(&text).unwrap()), text);
    }

    #[test]
    fn every_two_factor_yields_a_verified_construction(
        half in 2usize..8,
        seed in any::<u64>(),
        multi in any::<bool>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let g = random_class_g(2 * half, seed, multi).unwrap();
        let all = enumerate_perfect_matchings(&g, EnumerationLimits::default()).unwrap();
        let m = pick.get(&all);
        let x = complement_two_factor(&g, m).unwrap();
        prop_assert_eq!(&x.complement(&g), &m.edges);
        let r = construct(&g, &x).unwrap();
        prop_assert_eq!(r.j.num_edges(), g.num_edges() + 2 * x.n() - 2);
        prop_assert!(r.j.max_degree() <= 5);
        let report = verify(&g, x.edges(), &r);
        prop_assert!(report.passed(), "{:?}", report.diagnostics);
        let (again, _) = verify_embedding(&g, x.edges(), &r.j, &r.hamilton.vertices);
        prop_assert!(again.passed(), "{:?}", again.diagnostics);
    }

    #[test]
    fn is_bond_matches_vertex_bipartitions(
        half in 2usize..6,
        seed in any::<u64>(),
        multi in any::<bool>(),
        mask in any::<u32>(),
    ) {
        let g = random_class_g(2 * half, seed, multi).unwrap();
        let bonds = bonds_by_bipartition(&g, 20).unwrap();
        let subset: BTreeSet<usize> = (0..g.num_edges()).filter(|e| mask >> (e % 32) & 1 == 1).collect();
        prop_assert_eq!(is_bond(&g, &subset), bonds.contains(&subset));
        for b in &bonds {
            prop_assert!(is_bond(&g, b));
        }
    }
}
