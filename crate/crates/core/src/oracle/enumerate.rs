//! Isomorphism-free generation by canonical vertex augmentation.
//!
//! A graph on `k` vertices is produced from its parent on `k - 1` vertices
//! by adding a vertex joined to some subset. The canonical parent of a graph
//! is obtained by deleting the vertex in the last canonical position; a child
//! is kept only when its new vertex could serve as that deletion, that is
//! when deleting it yields the same isomorphism class as the canonical
//! deletion. Each class then has exactly one parent class, and duplicates
//! from one parent are removed by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, Graph};

/// Largest order accepted by the enumerator.
pub const MAX_ENUM_ORDER: usize = 10;

/// Predicate closed under taking induced subgraphs (for example
/// `F`-freeness); failing graphs are cut together with their subtrees.
pub type Pruner<'a> = &'a (dyn Fn(&Graph) -> bool + Sync);

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        Err(Error::capacity(format!(
            "enumeration is limited to n <= {MAX_ENUM_ORDER}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Accepted children of `parent`, each in canonical labeling, in subset
/// order.
fn children(parent: &Graph, pruner: Option<Pruner>) -> Vec<Graph> {
    let k = parent.order();
    let parent_form = canonical_form(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in 0..1u64 << k {
        let child = parent
            .with_vertex(subset)
            .expect("order stays within bounds");
        if pruner.is_some_and(|p| !p(&child)) {
            continue;
        }
        let cl = canonical_labeling(&child);
        let last = cl.labeling[k];
        let accepted = last == k
            || cl.same_orbit(last, k)
            || canonical_form(&child.remove_vertex(last)) == parent_form;
        if accepted && seen.insert(cl.graph.rows().to_vec()) {
            out.push(cl.graph);
        }
    }
    out
}

/// Extend one level; parents are processed in parallel and the children are
/// concatenated in parent order.
fn next_level(level: &[Graph], pruner: Option<Pruner>) -> Vec<Graph> {
    level
        .par_iter()
        .map(|p| children(p, pruner))
        .collect::<Vec<_>>()
        .concat()
}

fn level_below(n: usize, pruner: Option<Pruner>) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).unwrap()];
    for _ in 1..n {
        level = next_level(&level, pruner);
    }
    level
}

/// One graph per isomorphism class on `n` vertices passing `pruner`, in
/// canonical labeling. The order is deterministic.
pub fn enumerate_graphs(n: usize, pruner: Option<Pruner>) -> Result<Vec<Graph>> {
    check_order(n)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0).unwrap()]);
    }
    Ok(next_level(&level_below(n, pruner), pruner))
}

/// Fold over the isomorphism classes on `n` vertices without storing the
/// last level. Each parent's children are folded from `init()` in order and
/// the per-parent results are combined left to right with `reduce`, so the
/// outcome does not depend on the thread count.
pub fn fold_classes<T, I, F, R>(
    n: usize,
    pruner: Option<Pruner>,
    init: I,
    fold: F,
    reduce: R,
) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &Graph) -> T + Sync,
    R: Fn(T, T) -> T + Sync,
{
    check_order(n)?;
    if n == 0 {
        return Ok(fold(init(), &Graph::empty(0).unwrap()));
    }
    let parents = level_below(n, pruner);
    let partials: Vec<T> = parents
        .par_iter()
        .map(|p| children(p, pruner).iter().fold(init(), &fold))
        .collect();
    Ok(partials.into_iter().fold(init(), reduce))
}

/// Number of isomorphism classes on `n` vertices passing `pruner`.
pub fn count_classes(n: usize, pruner: Option<Pruner>) -> Result<u64> {
    fold_classes(n, pruner, || 0u64, |acc, _| acc + 1, |a, b| a + b)
}
