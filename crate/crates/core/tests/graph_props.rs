mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use turanlab::constructions::{clique, turan};
use turanlab::graph::*;
use turanlab::graph6::{graph6_decode, graph6_encode};
use turanlab::BigCount;

proptest! {
    #![proptest_config(common::config(128))]

    #[test]
    fn copies_times_automorphisms(h in arb_graph(1, 5), g in arb_graph(1, 7)) {
        let emb = count_embeddings(&h, &g);
        prop_assert_eq!(&emb, &BigCount::from(naive_embeddings(&h, &g)));
        prop_assert_eq!(count_copies(&h, &g) * automorphism_count(&h), emb);
    }

    #[test]
    fn adding_edges_never_loses_embeddings(h in arb_graph(1, 5), g in arb_graph(2, 7)) {
        let before = count_embeddings(&h, &g);
        for (u, v) in g.non_edges() {
            let mut bigger = g.clone();
            bigger.add_edge(u, v);
            prop_assert!(count_embeddings(&h, &bigger) >= before);
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(0, 12), seed in any::<u64>()) {
        let form = canonical_form(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            prop_assert_eq!(canonical_form(&g.permuted(&perm)), form.clone());
        }
    }

    #[test]
    fn canonical_form_separates_classes(a in arb_graph(5, 6), b in arb_graph(5, 6)) {
        let same = a.order() == b.order() && naive_canon(&a) == naive_canon(&b);
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), same);
    }

    #[test]
    fn automorphisms_match_brute_force(g in arb_graph(0, 7)) {
        prop_assert_eq!(automorphism_count(&g), BigCount::from(naive_automorphisms(&g)));
    }

    #[test]
    fn chromatic_matches_brute_force(g in arb_graph(0, 7)) {
        prop_assert_eq!(chromatic_number(&g), naive_chromatic(&g));
    }

    #[test]
    fn edges_are_copies_of_k2(g in arb_graph(0, 12)) {
        let k2 = clique(2).unwrap();
        prop_assert_eq!(count_copies(&k2, &g), BigCount::from(g.edge_count()));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(0, 12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }
}

#[test]
fn turan_graphs_have_chromatic_number_r() {
    for n in 1..=12u64 {
        for r in 1..=n {
            let g = turan(n, r).unwrap().materialize().unwrap();
            assert_eq!(chromatic_number(&g), r as usize, "T({n},{r})");
        }
    }
}
