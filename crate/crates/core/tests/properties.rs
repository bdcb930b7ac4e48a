//! Structural properties checked over random graphs (fixed seed) and over
//! the generated corpus of R-bricks.

mod common;

use brickforge::graph::{EdgeId, Graph};
use brickforge::{iso, matching, removability, structure, transforms};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn assert_none(failures: Failures) {
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

/// Bipartite graph with colour classes `0..k` and `k..2k` from an
/// adjacency bit list.
fn bipartite_from_bits(k: usize, bits: &[bool]) -> (Graph, Vec<usize>, Vec<usize>) {
    let mut g = Graph::new(2 * k);
    for a in 0..k {
        for b in 0..k {
            if bits[a * k + b] {
                g.add_edge(a, k + b).unwrap();
            }
        }
    }
    (g, (0..k).collect(), (k..2 * k).collect())
}

fn bipartite_strategy(kmin: usize, kmax: usize) -> impl Strategy<Value = (usize, Vec<bool>)> {
    (kmin..=kmax).prop_flat_map(|k| (Just(k), proptest::collection::vec(prop::bool::weighted(0.65), k * k)))
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn bipartite_matching_covered_characterizations((k, bits) in bipartite_strategy(2, 6)) {
        let (h, a, b) = bipartite_from_bits(k, &bits);
        prop_assert_eq!(bipartite_mc_equivalence(&h, &a, &b), Ok(()));
    }

    #[test]
    fn brace_characterizations((k, bits) in bipartite_strategy(3, 5)) {
        let (h, a, b) = bipartite_from_bits(k, &bits);
        prop_assert_eq!(brace_equivalence(&h, &a, &b), Ok(()));
    }

    #[test]
    fn split_then_bicontract_round_trip(index in 0usize..61, v in 0usize..8, mask in any::<u32>()) {
        let c = corpus(8);
        let g = &c.entries[index % c.len()].graph;
        let v = v % g.order();
        let at: Vec<EdgeId> = g.incident(v).map(|e| e.id).collect();
        let p1: Vec<EdgeId> = (0..at.len()).filter(|i| mask & (1 << i) != 0).map(|i| at[i]).collect();
        let p2: Vec<EdgeId> = (0..at.len()).filter(|i| mask & (1 << i) == 0).map(|i| at[i]).collect();
        prop_assume!(!p1.is_empty() && !p2.is_empty());
        let s = transforms::bi_split(g, v, &p1, &p2).unwrap();
        prop_assert!(matching::is_matching_covered(&s.graph));
        let back = transforms::bicontract(&s.graph, s.v0).unwrap();
        prop_assert!(iso::are_isomorphic(&back, g));
    }

    #[test]
    fn removability_matches_definition(index in 0usize..4018, pick in any::<usize>()) {
        let c = corpus(10);
        let g = &c.entries[index % c.len()].graph;
        let e = g.edge_ids()[pick % g.size()];
        prop_assert_eq!(removability::is_removable(g, e).unwrap(), naive_removable(g, e));
    }

    #[test]
    fn barriers_match_definition(index in 0usize..4018, pick in any::<usize>()) {
        let c = corpus(10);
        let g = &c.entries[index % c.len()].graph;
        let e = g.edge_ids()[pick % g.size()];
        let h = g.delete_edge(e).unwrap();
        prop_assume!(matching::is_matching_covered(&h));
        let mut lib: Vec<Vec<usize>> = matching::barriers(&h).unwrap().iter().map(|b| b.vertices()).collect();
        let mut naive = naive_barriers(&h);
        lib.sort();
        naive.sort();
        prop_assert_eq!(lib, naive);
    }
}

#[test]
fn exchange_property() {
    assert_none(check_exchange(corpus(8)));
}

#[test]
fn non_removable_edges_have_partition_witnesses() {
    assert_none(check_partition_witness(corpus(8)));
}

#[test]
fn quadrilateral_corollaries() {
    assert_none(check_quadrilateral_corollaries(corpus(10)));
}

#[test]
fn thin_edges_by_barriers_and_index_by_degrees() {
    assert_none(check_thin_equivalence_and_index(corpus(8)));
}

#[test]
fn compatible_and_thin_edges_exist() {
    assert_none(check_existence(corpus(10)));
}

#[test]
fn rank_index_dichotomy() {
    assert_none(check_rank_index_dichotomy(corpus(10)));
}

#[test]
fn configuration_structure() {
    assert_none(check_configurations(corpus(10)));
}

#[test]
fn retract_is_independent_of_order() {
    assert_none(check_retract_uniqueness(&split_graphs(50, SEED), 10, SEED));
}

#[test]
fn decomposition_is_independent_of_cut_order() {
    assert_none(check_decomposition_invariance(&decomposition_graphs()));
}

#[test]
fn brick_test_matches_tight_cut_definition() {
    let mut graphs: Vec<Graph> = corpus(8).entries.iter().map(|e| e.graph.clone()).collect();
    graphs.extend(decomposition_graphs().into_iter().filter(|g| g.order() <= 10));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 2..=5 {
        for _ in 0..10 {
            let mut g = random_bipartite(&mut rng, k, 0.7);
            g.add_edge(0, 1).unwrap();
            g.add_edge(k, k + 1).unwrap();
            graphs.push(g);
        }
    }
    assert_none(check_bricks_by_definition(&graphs));
}

#[test]
fn reduction_is_total() {
    assert_none(check_reduction_totality(corpus(10)));
}

#[test]
fn degree_two_vertices_give_barrier_cuts() {
    // a degree-2 vertex with its neighbours is a tight shore
    for g in split_graphs(20, SEED + 7) {
        for v in (0..g.order()).filter(|&v| g.degree(v) == 2) {
            let mut shore = 1u32 << v;
            for w in g.neighbors(v) {
                shore |= 1 << w;
            }
            if shore.count_ones() == 3 {
                assert!(structure::is_tight_cut(&g, shore).unwrap());
            }
        }
    }
}
