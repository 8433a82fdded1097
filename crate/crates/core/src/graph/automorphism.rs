use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::canon::refine;
use super::{bits, BigCount, Graph};
use crate::arith::factorial;

/// Order of the automorphism group of `g`.
pub fn automorphism_count(g: &Graph) -> BigCount {
    labeled_automorphism_count(g, &vec![0; g.order()])
}

/// Number of automorphisms of `g` that preserve the vertex labels.
///
/// Twin classes (same label, same open or same closed neighborhood) are
/// contracted first, each contributing `size!`; the contracted graph carries
/// the class size and kind in its labels. What remains is counted by
/// backtracking over the equitable refinement of the labels.
pub fn labeled_automorphism_count(g: &Graph, labels: &[u64]) -> BigCount {
    assert_eq!(labels.len(), g.order());
    let mut factor = BigCount::one();
    let mut graph = g.clone();
    let mut labels = labels.to_vec();
    while let Some((f, q, ql)) = contract_twins(&graph, &labels) {
        factor *= f;
        graph = q;
        labels = ql;
    }
    factor * BigCount::from(count_by_search(&graph, &labels))
}

/// One round of twin contraction; `None` when the graph is twin-free.
fn contract_twins(g: &Graph, labels: &[u64]) -> Option<(BigCount, Graph, Vec<u64>)> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    // (representative vertex, size, kind) where kind 1 = independent, 2 = clique
    let mut classes: Vec<(usize, usize, u8)> = Vec::new();

    let mut open: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for (v, &label) in labels.iter().enumerate().take(n) {
        open.entry((label, g.neighbors(v))).or_default().push(v);
    }
    for v in 0..n {
        let group = &open[&(labels[v], g.neighbors(v))];
        if group.len() > 1 && class_of[v] == usize::MAX {
            for &u in group {
                class_of[u] = classes.len();
            }
            classes.push((v, group.len(), 1));
        }
    }
    let mut closed: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for v in (0..n).filter(|&v| class_of[v] == usize::MAX) {
        closed
            .entry((labels[v], g.neighbors(v) | 1 << v))
            .or_default()
            .push(v);
    }
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let group = &closed[&(labels[v], g.neighbors(v) | 1 << v)];
        let kind = if group.len() > 1 { 2 } else { 0 };
        for &u in group {
            class_of[u] = classes.len();
        }
        classes.push((v, group.len(), kind));
    }
    if classes.len() == n {
        return None;
    }

    let factor = classes
        .iter()
        .fold(BigCount::one(), |acc, &(_, s, _)| acc * factorial(s as u64));
    let keys: BTreeMap<(u64, usize, u8), u64> = classes
        .iter()
        .map(|&(rep, s, k)| ((labels[rep], s, k), 0))
        .collect::<BTreeMap<_, _>>()
        .into_keys()
        .enumerate()
        .map(|(i, k)| (k, i as u64))
        .collect();
    let q_labels = classes
        .iter()
        .map(|&(rep, s, k)| keys[&(labels[rep], s, k)])
        .collect();
    let mut rows = vec![0u64; classes.len()];
    for (a, &(ra, _, _)) in classes.iter().enumerate() {
        for (b, &(rb, _, _)) in classes.iter().enumerate() {
            if a != b && g.has_edge(ra, rb) {
                rows[a] |= 1 << b;
            }
        }
    }
    let q = Graph::from_rows(rows).expect("quotient of a valid graph");
    Some((factor, q, q_labels))
}

fn count_by_search(g: &Graph, labels: &[u64]) -> u128 {
    let n = g.order();
    if n == 0 {
        return 1;
    }
    let mut by_label: BTreeMap<u64, u64> = BTreeMap::new();
    for (v, &l) in labels.iter().enumerate() {
        *by_label.entry(l).or_default() |= 1 << v;
    }
    let cells = refine(g, by_label.into_values().collect());
    let mut cell_of = vec![0u64; n];
    for &c in &cells {
        for v in bits(c) {
            cell_of[v] = c;
        }
    }
    // BFS-like order so that consistency constraints bite early.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbors(v) & placed).count_ones(),
                    std::cmp::Reverse(cell_of[v].count_ones()),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        placed |= 1 << v;
    }
    let mut image = vec![0usize; n];
    fn rec(
        g: &Graph,
        order: &[usize],
        cell_of: &[u64],
        image: &mut [usize],
        step: usize,
        used: u64,
    ) -> u128 {
        if step == order.len() {
            return 1;
        }
        let v = order[step];
        let mut cand = cell_of[v] & !used;
        for &u in &order[..step] {
            let nu = g.neighbors(image[u]);
            cand &= if g.has_edge(u, v) { nu } else { !nu };
        }
        let mut total = 0;
        for w in bits(cand) {
            image[v] = w;
            total += rec(g, order, cell_of, image, step + 1, used | 1 << w);
        }
        total
    }
    rec(g, &order, &cell_of, &mut image, 0, 0)
}
