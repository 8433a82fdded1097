//! Exact embedding counts of a pattern blow-up into a host blow-up.
//!
//! An embedding sends each pattern vertex to some host class; the class map
//! must be a homomorphism of the base graphs, and inside a host class of
//! size `s` receiving `k` pattern vertices there are `(s)_k` injective
//! choices. Pattern vertices of one class are interchangeable, so only the
//! number `m[c][b]` of class-`c` vertices sent to host class `b` matters,
//! weighted by a multinomial. The sum is organised as a dynamic program over
//! pattern classes whose state is the load on every host class together with
//! the supports of the processed classes that still have unprocessed
//! neighbors. The resulting load profile depends only on the pattern and the
//! host base, so it is reused across host class sizes.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::twin_classes;
use crate::arith::{factorial, falling_factorial, multinomial};
use crate::constructions::BlowupSpec;
use crate::error::{Error, Result};
use crate::graph::{bits, labeled_automorphism_count, BigCount, Graph};

/// Largest pattern base handled.
pub const MAX_PATTERN_BASE: usize = 16;
/// Largest host base handled.
pub const MAX_HOST_BASE: usize = 12;
/// Largest total number of pattern vertices.
pub const MAX_PATTERN_VERTICES: usize = 4096;

/// Embedding count of a fixed pattern into blow-ups of a fixed host base, as
/// a polynomial in the host class sizes: `sum coef * prod_b (s_b)_(load_b)`.
#[derive(Clone, Debug)]
pub struct LoadProfile {
    host_order: usize,
    entries: Vec<(Vec<u32>, BigCount)>,
}

/// Pattern base with false twins merged.
struct Classes {
    graph: Graph,
    sizes: Vec<u32>,
}

fn merge_twins(spec: &BlowupSpec) -> Result<Classes> {
    let base = spec.base();
    if base.order() > MAX_PATTERN_BASE {
        return Err(Error::capacity(format!(
            "pattern base has {} vertices, more than {MAX_PATTERN_BASE}",
            base.order()
        )));
    }
    let t = spec.small_sizes(MAX_PATTERN_VERTICES)?;
    if t.iter().sum::<usize>() > MAX_PATTERN_VERTICES {
        return Err(Error::capacity(format!(
            "pattern has more than {MAX_PATTERN_VERTICES} vertices"
        )));
    }
    let classes = twin_classes(base);
    let reps: u64 = classes.iter().fold(0, |m, c| m | 1 << c[0]);
    Ok(Classes {
        graph: base.induced(reps),
        sizes: classes
            .iter()
            .map(|c| c.iter().map(|&v| t[v] as u32).sum())
            .collect(),
    })
}

/// Processing order: classes adjacent to processed ones first, then small
/// classes, so large classes meet the tightest support constraints.
fn class_order(g: &Graph, sizes: &[u32]) -> Vec<usize> {
    let mut done = 0u64;
    let mut order = Vec::with_capacity(sizes.len());
    for _ in 0..sizes.len() {
        let c = bits(g.vertex_mask() & !done)
            .min_by_key(|&c| {
                let touched = (g.neighbors(c) & done).count_ones();
                (touched == 0, sizes[c], std::cmp::Reverse(touched), c)
            })
            .unwrap();
        done |= 1 << c;
        order.push(c);
    }
    order
}

/// All ways of writing `total` as an ordered sum of `parts` nonnegative
/// integers.
fn weak_compositions(total: u32, parts: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(left: u32, slot: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            f(cur);
            return;
        }
        for x in (0..=left).rev() {
            cur[slot] = x;
            rec(left - x, slot + 1, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    rec(total, 0, &mut vec![0; parts], f);
}

impl LoadProfile {
    pub fn new(pattern: &BlowupSpec, host_base: &Graph) -> Result<LoadProfile> {
        let q = host_base.order();
        if q > MAX_HOST_BASE {
            return Err(Error::capacity(format!(
                "host base has {q} vertices, more than {MAX_HOST_BASE}"
            )));
        }
        let Classes { graph: h, sizes: t } = merge_twins(pattern)?;
        let p = t.len();
        let order = class_order(&h, &t);
        let common = |mask: u64| -> u64 {
            bits(mask).fold(host_base.vertex_mask(), |m, b| m & host_base.neighbors(b))
        };
        let mut multinomials: HashMap<Vec<u32>, BigCount> = HashMap::new();

        // state key: loads (q entries) followed by frontier supports
        let mut frontier: Vec<usize> = Vec::new();
        let mut states: HashMap<Vec<u32>, BigCount> =
            HashMap::from([(vec![0; q], BigCount::one())]);
        for (step, &c) in order.iter().enumerate() {
            let later: u64 = order[step + 1..].iter().fold(0, |m, &d| m | 1 << d);
            let constraining: Vec<usize> = frontier
                .iter()
                .enumerate()
                .filter(|&(_, &d)| h.has_edge(c, d))
                .map(|(i, _)| i)
                .collect();
            let mut next_frontier = frontier.clone();
            next_frontier.push(c);
            let keep: Vec<bool> = next_frontier
                .iter()
                .map(|&d| h.neighbors(d) & later != 0)
                .collect();
            let mut next: HashMap<Vec<u32>, BigCount> = HashMap::new();
            for (key, ways) in &states {
                let (loads, supports) = key.split_at(q);
                let allowed = constraining.iter().fold(host_base.vertex_mask(), |m, &i| {
                    m & common(supports[i] as u64)
                });
                let targets: Vec<usize> = bits(allowed).collect();
                weak_compositions(t[c], targets.len(), &mut |m| {
                    let mut sorted = m.to_vec();
                    sorted.sort_unstable();
                    let weight = multinomials
                        .entry(sorted)
                        .or_insert_with_key(|s| {
                            multinomial(&s.iter().map(|&x| x as u64).collect::<Vec<_>>())
                        })
                        .clone();
                    let mut new_key = loads.to_vec();
                    let mut support = 0u32;
                    for (&b, &x) in targets.iter().zip(m) {
                        new_key[b] += x;
                        if x > 0 {
                            support |= 1 << b;
                        }
                    }
                    new_key.extend(
                        supports
                            .iter()
                            .chain(std::iter::once(&support))
                            .zip(&keep)
                            .filter(|(_, &k)| k)
                            .map(|(&s, _)| s),
                    );
                    *next.entry(new_key).or_insert_with(BigCount::zero) += weight * ways;
                });
            }
            states = next;
            frontier = next_frontier
                .into_iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(d, _)| d)
                .collect();
        }
        debug_assert!(p == 0 || frontier.is_empty());
        let mut entries: Vec<(Vec<u32>, BigCount)> = states.into_iter().collect();
        entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(LoadProfile {
            host_order: q,
            entries,
        })
    }

    /// Number of distinct load vectors.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Labeled embedding count into the blow-up with the given class sizes.
    pub fn evaluate(&self, host_sizes: &[BigCount]) -> BigCount {
        assert_eq!(host_sizes.len(), self.host_order);
        let max_load = self
            .entries
            .iter()
            .flat_map(|(l, _)| l.iter().copied())
            .max()
            .unwrap_or(0) as u64;
        let table: Vec<Vec<BigCount>> = host_sizes
            .iter()
            .map(|s| (0..=max_load).map(|k| falling_factorial(s, k)).collect())
            .collect();
        let mut total = BigCount::zero();
        for (loads, coef) in &self.entries {
            let mut term = coef.clone();
            for (b, &l) in loads.iter().enumerate() {
                if term.is_zero() {
                    break;
                }
                if l > 0 {
                    term *= &table[b][l as usize];
                }
            }
            total += term;
        }
        total
    }
}

/// Number of injective maps from the materialized pattern into the
/// materialized host that preserve the pattern's edges.
pub fn count_embeddings_blowup(pattern: &BlowupSpec, host: &BlowupSpec) -> Result<BigCount> {
    Ok(LoadProfile::new(pattern, host.base())?.evaluate(host.sizes()))
}

/// Automorphism group order of a materialized blow-up, computed from the
/// spec: classes with equal neighborhoods merge, each merged class of size
/// `t` contributes `t!`, and the base contributes its automorphisms that
/// preserve merged class sizes.
pub fn blowup_automorphism_count(spec: &BlowupSpec) -> Result<BigCount> {
    let Classes { graph, sizes } = merge_twins(spec)?;
    let inner = sizes
        .iter()
        .fold(BigCount::one(), |acc, &t| acc * factorial(t as u64));
    let labels: Vec<u64> = sizes.iter().map(|&t| t as u64).collect();
    Ok(inner * labeled_automorphism_count(&graph, &labels))
}

/// Number of (not necessarily induced) copies of the pattern in the host.
pub fn count_copies_blowup(pattern: &BlowupSpec, host: &BlowupSpec) -> Result<BigCount> {
    let emb = count_embeddings_blowup(pattern, host)?;
    let aut = blowup_automorphism_count(pattern)?;
    debug_assert!((&emb % &aut).is_zero());
    Ok(emb / aut)
}
