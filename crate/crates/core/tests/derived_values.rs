//! Reference values computed by brute force in `common` and frozen here;
//! the library must reproduce each one.

mod common;

use common::*;
use turanlab::constructions::*;
use turanlab::formulas::*;
use turanlab::graph::*;
use turanlab::hom::*;
use turanlab::oracle::{count_classes, ex_oracle, OracleMode};
use turanlab::BigCount;

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn k4_minus_edge() -> Graph {
    Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

#[test]
fn embedding_counts() {
    let cases = [
        (path(4).unwrap(), cycle(4).unwrap(), 8),
        (
            clique(3).unwrap(),
            turan(5, 3).unwrap().materialize().unwrap(),
            24,
        ),
        (path(3).unwrap(), star(3).unwrap(), 6),
    ];
    for (h, g, frozen) in cases {
        assert_eq!(naive_embeddings(&h, &g), frozen);
        assert_eq!(count_embeddings(&h, &g), big(frozen));
    }
}

#[test]
fn copy_counts() {
    let k44 = biclique(4, 4).unwrap();
    assert_eq!(naive_copies(&cycle(4).unwrap(), &k44), 36);
    assert_eq!(count_copies(&cycle(4).unwrap(), &k44), big(36));
    assert_eq!(naive_copies(&path(3).unwrap(), &star(3).unwrap()), 3);
    assert_eq!(count_copies(&path(3).unwrap(), &star(3).unwrap()), big(3));
}

#[test]
fn automorphisms() {
    let k33 = biclique(3, 3).unwrap();
    assert_eq!(naive_automorphisms(&k33), 72);
    assert_eq!(automorphism_count(&k33), big(72));
    let ds = double_star(2, 2).unwrap();
    assert_eq!(naive_automorphisms(&ds), 8);
    assert_eq!(automorphism_count(&ds), big(8));
}

#[test]
fn canonical_forms_on_four() {
    let naive: std::collections::HashSet<_> = all_labeled(4).map(|g| naive_canon(&g)).collect();
    assert_eq!(naive.len(), 11);
    let lib: std::collections::HashSet<_> = all_labeled(4).map(|g| canonical_form(&g)).collect();
    assert_eq!(lib.len(), 11);
}

#[test]
fn chromatic_values() {
    let c72 = graph_power(&cycle(7).unwrap(), 2).unwrap();
    assert_eq!(c72.edge_count(), 14);
    assert_eq!(naive_chromatic(&c72), 4);
    assert_eq!(chromatic_number(&c72), 4);
    let f = k4_minus_edge();
    let naive_critical: Vec<usize> = (0..4)
        .filter(|&v| naive_chromatic(&f.remove_vertex(v)) < 3)
        .collect();
    assert_eq!(naive_critical, vec![2, 3]);
    assert_eq!(color_critical_vertices(&f), vec![2, 3]);
}

#[test]
fn construction_values() {
    let g = BlowupSpec::from_sizes(path(3).unwrap(), &[2, 2, 2])
        .unwrap()
        .materialize()
        .unwrap();
    assert_eq!(g.edge_count(), 8);
    let e = end_blown_path_power(6, 3, 2).unwrap();
    assert_eq!(e.base().edge_count(), 9);
    assert_eq!(e.sizes(), &[2, 1, 1, 1, 1, 2].map(big)[..]);
    let bp = blown_path(4, 2, 3, 3).unwrap().materialize().unwrap();
    let mut classes: Vec<usize> = twin_classes(&bp).iter().map(Vec::len).collect();
    assert_eq!(classes.clone(), vec![3, 2, 2, 3]);
    classes.sort();
    assert_eq!(classes, vec![2, 2, 3, 3]);
}

#[test]
fn homomorphism_values() {
    let c7 = cycle(7).unwrap();
    let c5 = cycle(5).unwrap();
    assert!(!naive_homs(&c7, &c5).is_empty());
    assert!(hom_exists(&c7, &c5).unwrap().is_valid(&c7, &c5));

    let f = k4_minus_edge();
    let k3 = clique(3).unwrap();
    let caps = [Some(1), None, None];
    let naive_first = naive_homs(&f, &k3)
        .into_iter()
        .find(|m| m.iter().filter(|&&t| t == 0).count() <= 1)
        .unwrap();
    let w = hom_exists_with_fiber_caps(&f, &k3, &caps).unwrap();
    assert_eq!(w.map, naive_first);
    assert_eq!(w.map[0], w.map[1]);

    assert_eq!(longest_odd_cycle_target(&c5).unwrap(), 5);
    let two = c5.disjoint_union(&c5).unwrap();
    let mut glued = Graph::empty(9).unwrap();
    for (u, v) in two.edges() {
        let m = |x: usize| {
            if x == 5 {
                0
            } else if x > 5 {
                x - 1
            } else {
                x
            }
        };
        glued.add_edge(m(u), m(v));
    }
    // odd girth 5 rules out longer targets
    let naive_len = (3..=5)
        .step_by(2)
        .filter(|&l| !naive_homs(&glued, &cycle(l).unwrap()).is_empty())
        .max()
        .unwrap();
    assert_eq!(naive_len, 5);
    assert_eq!(longest_odd_cycle_target(&glued).unwrap(), 5);
}

#[test]
fn blowup_counting_values() {
    let c4 = BlowupSpec::from_graph(&cycle(4).unwrap());
    let host = BlowupSpec::from_sizes(clique(2).unwrap(), &[4, 4]).unwrap();
    let k44 = host.materialize().unwrap();
    assert_eq!(naive_embeddings(&cycle(4).unwrap(), &k44), 288);
    assert_eq!(count_embeddings_blowup(&c4, &host).unwrap(), big(288));
    assert_eq!(count_copies_blowup(&c4, &host).unwrap(), big(36));

    let h = blown_path(4, 1, 2, 2).unwrap();
    let host = BlowupSpec::from_sizes(clique(2).unwrap(), &[5, 5]).unwrap();
    let frozen = naive_embeddings(&h.materialize().unwrap(), &host.materialize().unwrap());
    assert_eq!(frozen, 7_200);
    assert_eq!(count_embeddings_blowup(&h, &host).unwrap(), big(frozen));
}

#[test]
fn coloring_values() {
    assert_eq!(naive_proper_colorings(&path(3).unwrap(), 2), 2);
    assert_eq!(count_proper_colorings(&path(3).unwrap(), 2), big(2));
    let p82 = graph_power(&path(8).unwrap(), 2).unwrap();
    assert_eq!(naive_proper_colorings(&p82, 3), 6);
    assert!(has_unique_r_coloring(&p82, 3));
}

#[test]
fn formula_values() {
    let naive_central = |a: usize, b: usize, x: usize, y: usize| {
        let g = biclique(x, y).unwrap();
        let h = double_star(a, b).unwrap();
        naive_copies(&h, &g) * h.edge_count() as u64
    };
    assert_eq!(double_star_central_count(1, 1, 3, 3), big(4));
    assert_eq!(double_star_central_count(2, 1, 3, 4), big(9));
    assert_eq!(double_star_central_count(5, 0, 3, 9), big(56));
    // P_4 in K_{2,2}: one copy per edge as central edge
    assert_eq!(naive_copies(&path(4).unwrap(), &biclique(2, 2).unwrap()), 4);
    assert_eq!(central_edge_count_check(1, 1, 2, 2).unwrap(), big(1));
    assert!(naive_central(1, 1, 2, 2) > 0);
    assert_eq!(central_edge_count_check(1, 2, 3, 3).unwrap(), big(4));

    assert_eq!(
        naive_copies(&cycle(4).unwrap(), &biclique(4, 4).unwrap()),
        36
    );
    assert_eq!(count_kab_complete_bipartite(2, 2, 4, 4).unwrap(), big(36));
    assert_eq!(
        naive_copies(&star(3).unwrap(), &biclique(6, 2).unwrap()),
        40
    );
    assert_eq!(count_kab_complete_bipartite(1, 3, 6, 2).unwrap(), big(40));
    assert_eq!(
        naive_copies(
            &clique(3).unwrap(),
            &complete_multipartite(&[2, 2, 1]).unwrap()
        ),
        4
    );
    assert_eq!(
        count_clique_multipartite(3, &[big(2), big(2), big(1)]).unwrap(),
        big(4)
    );

    assert!(ma_qiu_is_good(2, 1).unwrap());
    assert!(!ma_qiu_is_good(3, 1).unwrap());
    assert!(ma_qiu_is_good(5, 3).unwrap());
    assert!(brown_sidorenko_balanced_ok(3, 1).unwrap());
    assert!(!brown_sidorenko_balanced_ok(4, 1).unwrap());
    let p = end_blown_path_power(6, 3, 2).unwrap();
    assert_eq!(
        partite_upper_bound_labeled(&p, 10, 3).unwrap(),
        big(6_250_000)
    );
}

#[test]
fn oracle_values() {
    let k2 = clique(2).unwrap();
    let k3 = clique(3).unwrap();
    let k4 = clique(4).unwrap();
    let p3 = path(3).unwrap();
    let cases = [(5, &k2, &k3, 6), (5, &k3, &k4, 4), (4, &p3, &k3, 4)];
    for (n, h, f, frozen) in cases {
        assert_eq!(naive_ex(n, h, f), frozen);
        assert_eq!(
            ex_oracle(n, h, f, OracleMode::All).unwrap().value,
            big(frozen)
        );
    }
    let naive_classes: std::collections::HashSet<_> = all_labeled(5)
        .filter(|g| naive_embeddings(&k3, g) == 0)
        .map(|g| naive_canon(&g))
        .collect();
    assert_eq!(naive_classes.len(), 14);
    let free = |g: &Graph| !contains_subgraph(g, &k3);
    assert_eq!(count_classes(5, Some(&free)).unwrap(), 14);
}
