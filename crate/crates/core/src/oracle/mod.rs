//! Exact generalized Turán numbers `ex(n, H, F)` by exhaustive search over
//! isomorphism classes.
//!
//! Maximal-only mode restricts the maximum to edge-maximal `F`-free graphs.
//! This loses nothing: every `F`-free graph lies inside an edge-maximal one
//! on the same vertices, and adding edges never destroys a copy of `H`.

mod enumerate;

pub use enumerate::{count_classes, enumerate_graphs, fold_classes, Pruner, MAX_ENUM_ORDER};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    automorphism_count, canonical_form, contains_subgraph, count_embeddings, BigCount, Graph,
};

/// Number of extremal witnesses kept.
pub const WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    All,
    MaximalOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    #[serde(with = "crate::serde_big")]
    pub value: BigCount,
    /// Extremal graphs in canonical labeling, ordered by canonical form.
    pub witnesses: Vec<Graph>,
    /// Isomorphism classes of `F`-free graphs on `n` vertices visited.
    pub enumerated: u64,
    pub mode: OracleMode,
}

/// Whether `g` has no copy of `f`.
pub fn is_free(g: &Graph, f: &Graph) -> bool {
    !contains_subgraph(g, f)
}

/// Whether adding any missing edge to the `f`-free graph `g` creates `f`.
pub fn is_edge_maximal_free(g: &Graph, f: &Graph) -> bool {
    g.non_edges().all(|(u, v)| {
        let mut h = g.clone();
        h.add_edge(u, v);
        contains_subgraph(&h, f)
    })
}

struct Best {
    embeddings: BigCount,
    witnesses: Vec<(Vec<u8>, Graph)>,
    enumerated: u64,
}

impl Best {
    fn empty() -> Best {
        Best {
            embeddings: BigCount::zero(),
            witnesses: Vec::new(),
            enumerated: 0,
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.enumerated += other.enumerated;
        match self.embeddings.cmp(&other.embeddings) {
            std::cmp::Ordering::Less => {
                self.embeddings = other.embeddings;
                self.witnesses = other.witnesses;
            }
            std::cmp::Ordering::Equal => {
                self.witnesses.extend(other.witnesses);
                self.witnesses.sort_by(|a, b| a.0.cmp(&b.0));
                self.witnesses.dedup_by(|a, b| a.0 == b.0);
                self.witnesses.truncate(WITNESS_CAP);
            }
            std::cmp::Ordering::Greater => {}
        }
        self
    }
}

/// Largest number of copies of `h` in an `f`-free graph on `n` vertices.
pub fn ex_oracle(n: usize, h: &Graph, f: &Graph, mode: OracleMode) -> Result<OracleResult> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::capacity(format!(
            "the oracle is limited to n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    if h.order() > n {
        return Err(Error::argument(format!(
            "pattern has {} vertices, more than n = {n}",
            h.order()
        )));
    }
    let pruner = |g: &Graph| is_free(g, f);
    let best = fold_classes(
        n,
        Some(&pruner),
        Best::empty,
        |acc, g| {
            let mut acc = acc;
            acc.enumerated += 1;
            if mode == OracleMode::MaximalOnly && !is_edge_maximal_free(g, f) {
                return acc;
            }
            let here = Best {
                embeddings: count_embeddings(h, g),
                witnesses: vec![(canonical_form(g), g.clone())],
                enumerated: 0,
            };
            acc.merge(here)
        },
        Best::merge,
    )?;
    Ok(OracleResult {
        value: best.embeddings / automorphism_count(h),
        witnesses: best.witnesses.into_iter().map(|(_, g)| g).collect(),
        enumerated: best.enumerated,
        mode,
    })
}
