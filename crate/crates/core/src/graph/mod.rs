//! Small graphs stored as one 64-bit adjacency row per vertex.
//!
//! Everything in this module works on concrete graphs of at most
//! [`MAX_ORDER`] vertices. Large blow-up hosts are never materialized; see
//! [`crate::hom`] for counting on [`crate::BlowupSpec`]s.

mod automorphism;
mod canon;
mod chromatic;
mod count;

pub use automorphism::{automorphism_count, labeled_automorphism_count};
pub use canon::{canonical_form, canonical_labeling, CanonicalLabeling};
pub use chromatic::{
    chromatic_number, color_critical_edges, color_critical_vertices, is_colorable, odd_girth,
};
pub use count::{contains_subgraph, count_copies, count_embeddings};

use std::fmt;

use crate::error::{Error, Result};

/// Exact nonnegative integer used for every copy and embedding count.
pub type BigCount = num_bigint::BigUint;

/// Largest supported vertex count; one adjacency row is one `u64`.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..order`.
///
/// Invariants: adjacency is symmetric, there are no loops and no bits at or
/// above `order` are set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::capacity(format!(
                "graph order {n} exceeds {MAX_ORDER}"
            )));
        }
        Ok(Graph {
            order: n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows, validating the invariants.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::capacity(format!(
                "graph order {n} exceeds {MAX_ORDER}"
            )));
        }
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::argument(format!("row {i} has out-of-range bits")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::argument(format!("self-loop at {i}")));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::argument(format!("asymmetric pair ({i},{j})")));
                }
            }
        }
        Ok(Graph {
            order: n,
            adj: rows,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            let free = !self.adj[u] & low_mask(self.order) & !low_mask(u + 1);
            bits(free).map(move |v| (u, v))
        })
    }

    /// All-vertex mask.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    /// Induced subgraph on the vertices of `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        Graph {
            order: keep.len(),
            adj,
        }
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1u64 << v))
    }

    /// Relabel so that old vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut adj = vec![0u64; self.order];
        for (i, &pi) in perm.iter().enumerate() {
            adj[pi] = bits(self.adj[i]).fold(0u64, |acc, j| acc | 1 << perm[j]);
        }
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Add one vertex adjacent to exactly the vertices of `mask`.
    pub fn with_vertex(&self, mask: u64) -> Result<Graph> {
        if self.order >= MAX_ORDER {
            return Err(Error::capacity("cannot add a vertex to a 64-vertex graph"));
        }
        let n = self.order;
        let mut adj = self.adj.clone();
        for v in bits(mask & self.vertex_mask()) {
            adj[v] |= 1 << n;
        }
        adj.push(mask & self.vertex_mask());
        Ok(Graph { order: n + 1, adj })
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order;
        if n + other.order > MAX_ORDER {
            return Err(Error::capacity("disjoint union exceeds 64 vertices"));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << n));
        Ok(Graph {
            order: n + other.order,
            adj,
        })
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn is_bipartite(&self) -> bool {
        odd_girth(self).is_none()
    }

    /// Bitmasks of connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Greatest distance between two vertices of one component.
    pub fn diameter(&self) -> usize {
        (0..self.order)
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_non_edges_partition_pairs() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.non_edges().count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rows_are_validated() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(matches!(Graph::empty(65), Err(Error::Capacity(_))));
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let tail = p4.remove_vertex(0);
        assert_eq!(tail.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let rev = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(rev, p4);
    }

    #[test]
    fn components_and_diameter() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00111, 0b11000]);
        assert_eq!(g.diameter(), 2);
    }
}
