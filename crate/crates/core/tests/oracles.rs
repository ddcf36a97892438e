mod common;

use std::collections::BTreeSet;

use common::*;
use connpart::arith::{count_partitions, TTable};
use connpart::exact::{cmc, edge_partition_profile, vertex_partition_profile, ExactConfig};
use connpart::splits::tree_exact_p2;
use connpart::{Graph, Parallelism};
use proptest::prelude::*;

fn set(p: &connpart::SizeProfile) -> BTreeSet<Vec<usize>> {
    p.iter().cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_profile_matches_enumeration(g in connected_graph(6), k in 2usize..=3) {
        prop_assume!(g.m() <= 10);
        let p = edge_partition_profile(&g, k, &ExactConfig::default()).unwrap();
        prop_assert_eq!(set(&p.profile), edge_profile(&g, k));
        prop_assert!(p.witnesses_valid(&g));
    }

    #[test]
    fn vertex_profile_matches_enumeration(g in connected_graph(8), k in 2usize..=3) {
        prop_assume!(g.n() >= k);
        let p = vertex_partition_profile(&g, k, &ExactConfig::default()).unwrap();
        prop_assert_eq!(set(&p.profile), vertex_profile(&g, k));
        prop_assert!(p.witnesses_valid(&g));
    }

    #[test]
    fn cmc_matches_enumeration(g in connected_graph(7), r in 2usize..=3) {
        prop_assume!(g.n() >= r);
        let w = cmc(&g, r, &ExactConfig::default()).unwrap();
        prop_assert!(w.is_valid(&g));
        prop_assert_eq!(w.cut_size, max_connected_cut(&g, r));
    }

    #[test]
    fn tree_p2_matches_enumeration(t in tree(10)) {
        prop_assert_eq!(set(&tree_exact_p2(&t).unwrap()), edge_profile(&t, 2));
    }

    #[test]
    fn modes_agree(g in connected_graph(7)) {
        let seq = ExactConfig::default().with_parallelism(Parallelism::Sequential);
        let par = ExactConfig::default().with_parallelism(Parallelism::Rayon);
        let a = edge_partition_profile(&g, 2, &seq).unwrap();
        let b = edge_partition_profile(&g, 2, &par).unwrap();
        prop_assert_eq!(a.profile, b.profile);
        prop_assert_eq!(a.witnesses, b.witnesses);
        prop_assert_eq!(cmc(&g, 2, &seq).unwrap().partition.to_lists(), cmc(&g, 2, &par).unwrap().partition.to_lists());
    }
}

#[test]
fn t_table_matches_definition() {
    let t = TTable::new(3000);
    for n in 1..=400 {
        assert_eq!(t.t(n), t_naive(n), "n = {n}");
    }
    assert_eq!(t.t(3000), t_naive(3000));
}

#[test]
fn partition_counts_match_recursion() {
    for n in 0..=40 {
        for k in 1..=6 {
            assert_eq!(count_partitions(n, k, false), partitions(n, k).into(), "p({n},{k})");
            let with_zero: u64 = (1..=k).map(|j| partitions(n, j)).sum::<u64>() + u64::from(n == 0);
            assert_eq!(count_partitions(n, k, true), with_zero.into(), "p0({n},{k})");
        }
    }
}

#[test]
fn small_named_graphs() {
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(edge_profile(&c4, 2), BTreeSet::from([vec![3, 1], vec![2, 2]]));
    let p = edge_partition_profile(&c4, 2, &ExactConfig::default()).unwrap();
    assert_eq!(set(&p.profile), edge_profile(&c4, 2));
    for n in 3..=6 {
        let k = complete(n);
        assert_eq!(cmc(&k, 2, &ExactConfig::default()).unwrap().cut_size, max_connected_cut(&k, 2));
    }
}
