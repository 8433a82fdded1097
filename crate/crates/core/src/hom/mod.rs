//! Homomorphisms between small graphs, proper colorings, and exact
//! embedding counts between blow-ups.

mod blowup;
mod coloring;

pub use blowup::{
    blowup_automorphism_count, count_copies_blowup, count_embeddings_blowup, LoadProfile,
};
pub use coloring::{count_proper_colorings, has_unique_r_coloring};

use serde::{Deserialize, Serialize};

use crate::constructions::cycle;
use crate::error::{Error, Result};
use crate::graph::{bits, chromatic_number, low_mask, odd_girth, Graph};

/// An edge-preserving map from a pattern to a target: `map[v]` is the image
/// of pattern vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomWitness {
    pub map: Vec<usize>,
}

impl HomWitness {
    /// Number of pattern vertices sent to each target vertex.
    pub fn fiber_sizes(&self, target_order: usize) -> Vec<usize> {
        let mut out = vec![0; target_order];
        for &t in &self.map {
            out[t] += 1;
        }
        out
    }

    pub fn is_valid(&self, h: &Graph, b: &Graph) -> bool {
        self.map.len() == h.order()
            && self.map.iter().all(|&t| t < b.order())
            && h.edges().all(|(u, v)| b.has_edge(self.map[u], self.map[v]))
    }
}

struct HomSearch<'a> {
    h: &'a Graph,
    b: &'a Graph,
    caps: &'a [Option<usize>],
    map: Vec<usize>,
    load: Vec<usize>,
}

impl HomSearch<'_> {
    /// Assigns vertices in index order, trying targets in increasing order,
    /// so the first witness found is the lexicographically least one.
    /// `domains[v]` holds the targets still compatible with the assigned
    /// neighbors of `v`.
    fn run(&mut self, v: usize, domains: &mut Vec<u64>) -> bool {
        if v == self.h.order() {
            return true;
        }
        let later = self.h.neighbors(v) & !low_mask(v + 1);
        for t in bits(domains[v]) {
            if self.caps[t].is_some_and(|c| self.load[t] >= c) {
                continue;
            }
            let saved: Vec<(usize, u64)> = bits(later).map(|w| (w, domains[w])).collect();
            let mut dead = false;
            for w in bits(later) {
                domains[w] &= self.b.neighbors(t);
                dead |= domains[w] == 0;
            }
            if !dead {
                self.map[v] = t;
                self.load[t] += 1;
                if self.run(v + 1, domains) {
                    return true;
                }
                self.load[t] -= 1;
            }
            for (w, d) in saved {
                domains[w] = d;
            }
        }
        false
    }
}

/// Lexicographically least homomorphism `h -> b`, if any.
pub fn hom_exists(h: &Graph, b: &Graph) -> Option<HomWitness> {
    hom_exists_with_fiber_caps(h, b, &vec![None; b.order()])
}

/// Lexicographically least homomorphism `h -> b` sending at most `caps[t]`
/// vertices to each target `t` (`None` means unbounded).
pub fn hom_exists_with_fiber_caps(
    h: &Graph,
    b: &Graph,
    caps: &[Option<usize>],
) -> Option<HomWitness> {
    assert_eq!(caps.len(), b.order(), "one cap per target vertex");
    if h.order() == 0 {
        return Some(HomWitness { map: Vec::new() });
    }
    if b.order() == 0 {
        return None;
    }
    let mut domains: Vec<u64> = (0..h.order())
        .map(|v| {
            // a vertex with a neighbor needs a target with a neighbor
            if h.degree(v) > 0 {
                (0..b.order())
                    .filter(|&t| b.degree(t) > 0)
                    .fold(0, |m, t| m | 1 << t)
            } else {
                b.vertex_mask()
            }
        })
        .collect();
    let mut search = HomSearch {
        h,
        b,
        caps,
        map: vec![0; h.order()],
        load: vec![0; b.order()],
    };
    let found = search.run(0, &mut domains);
    found.then_some(HomWitness { map: search.map })
}

/// Largest odd `L` such that `f` maps homomorphically onto `C_L`.
pub fn longest_odd_cycle_target(f: &Graph) -> Result<usize> {
    let chi = chromatic_number(f);
    if chi != 3 {
        return Err(Error::argument(format!(
            "expected a 3-chromatic graph, chromatic number is {chi}"
        )));
    }
    let girth = odd_girth(f).expect("3-chromatic graphs have odd cycles");
    for len in (3..=girth).rev().step_by(2) {
        if hom_exists(f, &cycle(len)?).is_some() {
            return Ok(len);
        }
    }
    unreachable!("a 3-chromatic graph maps to the triangle")
}

/// Maximal sets of vertices with identical open neighborhoods, each sorted,
/// ordered by smallest member.
pub fn twin_classes(h: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen = 0u64;
    for v in 0..h.order() {
        if seen >> v & 1 == 1 {
            continue;
        }
        let class: Vec<usize> = (v..h.order())
            .filter(|&u| h.neighbors(u) == h.neighbors(v))
            .collect();
        for &u in &class {
            seen |= 1 << u;
        }
        classes.push(class);
    }
    classes
}
