use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::graph::{bits, is_colorable, BigCount, Graph};

/// Number of proper colorings `V(g) -> {1..r}` (not necessarily surjective),
/// i.e. the chromatic polynomial evaluated at `r`.
///
/// Vertices are added one at a time; the state is the coloring of the
/// already-placed vertices that still have unplaced neighbors.
pub fn count_proper_colorings(g: &Graph, r: usize) -> BigCount {
    let n = g.order();
    let order = frontier_order(g);
    let mut placed = 0u64;
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u8>, BigCount> = HashMap::from([(Vec::new(), BigCount::one())]);
    for &v in &order {
        placed |= 1 << v;
        let nbr_pos: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|&(_, &u)| g.has_edge(u, v))
            .map(|(i, _)| i)
            .collect();
        let mut next_frontier: Vec<usize> = frontier.clone();
        next_frontier.push(v);
        let keep: Vec<bool> = next_frontier
            .iter()
            .map(|&u| g.neighbors(u) & !placed != 0)
            .collect();
        let mut next: HashMap<Vec<u8>, BigCount> = HashMap::new();
        for (colors, ways) in states {
            for c in 0..r as u8 {
                if nbr_pos.iter().any(|&i| colors[i] == c) {
                    continue;
                }
                let key: Vec<u8> = colors
                    .iter()
                    .chain(std::iter::once(&c))
                    .zip(&keep)
                    .filter(|(_, &k)| k)
                    .map(|(&c, _)| c)
                    .collect();
                *next.entry(key).or_insert_with(BigCount::zero) += &ways;
            }
        }
        states = next;
        frontier = next_frontier
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(u, _)| u)
            .collect();
    }
    debug_assert!(n == 0 || frontier.is_empty());
    states.into_values().sum()
}

/// Vertex order keeping the frontier small: repeatedly take the vertex with
/// the most placed neighbors.
fn frontier_order(g: &Graph) -> Vec<usize> {
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(g.order());
    for _ in 0..g.order() {
        let v = bits(g.vertex_mask() & !placed)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }
    order
}

/// Whether `g` has exactly one proper `r`-coloring up to permuting colors,
/// and that coloring uses all `r` colors.
pub fn has_unique_r_coloring(g: &Graph, r: usize) -> bool {
    if r == 0 || g.order() < r || is_colorable(g, r - 1) {
        return false;
    }
    count_proper_colorings(g, r) == factorial(r as u64)
}
