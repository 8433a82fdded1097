//! Slow reference implementations used as test oracles. Everything here
//! works straight from the definitions by brute force.
#![allow(dead_code)]

use proptest::prelude::*;
use turanlab::Graph;

pub fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// All injective maps from `0..k` into `0..n`, in lexicographic order.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(k, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    injections(n, n)
}

/// Injective edge-preserving maps `h -> g`.
pub fn naive_embeddings(h: &Graph, g: &Graph) -> u64 {
    let he = edges_of(h);
    injections(h.order(), g.order())
        .into_iter()
        .filter(|m| he.iter().all(|&(u, v)| g.has_edge(m[u], m[v])))
        .count() as u64
}

pub fn naive_automorphisms(g: &Graph) -> u64 {
    naive_embeddings(g, g)
}

pub fn naive_copies(h: &Graph, g: &Graph) -> u64 {
    naive_embeddings(h, g) / naive_automorphisms(h)
}

/// Smallest edge set, as a sorted list, over all relabelings.
pub fn naive_canon(g: &Graph) -> Vec<(usize, usize)> {
    permutations(g.order())
        .into_iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Every map `h -> b` preserving edges, in lexicographic order.
pub fn naive_homs(h: &Graph, b: &Graph) -> Vec<Vec<usize>> {
    let n = h.order();
    let t = b.order();
    let mut out = Vec::new();
    if t == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let total = (t as u64).pow(n as u32);
    for code in 0..total {
        let mut m = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            m.push((c % t as u64) as usize);
            c /= t as u64;
        }
        m.reverse();
        if h.edges().all(|(u, v)| b.has_edge(m[u], m[v])) {
            out.push(m);
        }
    }
    out
}

pub fn naive_proper_colorings(g: &Graph, r: usize) -> u64 {
    let kr = complete(r);
    naive_homs(g, &kr).len() as u64
}

pub fn naive_chromatic(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&r| naive_proper_colorings(g, r) > 0)
        .unwrap()
}

pub fn complete(r: usize) -> Graph {
    let mut g = Graph::empty(r).unwrap();
    for u in 0..r {
        for v in u + 1..r {
            g.add_edge(u, v);
        }
    }
    g
}

/// Graph on `n` vertices from the bits of `code` over the pairs `(u, v)`,
/// `u < v`, in row order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << pair_count(n)).map(move |c| graph_from_code(n, c))
}

/// `ex(n, H, F)` over all labeled graphs.
pub fn naive_ex(n: usize, h: &Graph, f: &Graph) -> u64 {
    all_labeled(n)
        .filter(|g| naive_embeddings(f, g) == 0)
        .map(|g| naive_copies(h, &g))
        .max()
        .unwrap_or(0)
}

/// Random graph with order in `lo..=hi`.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), pair_count(n) as usize).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), on) in pairs.zip(bits) {
                if on {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

/// Proptest settings with a fixed seed unless `PROPTEST_RNG_SEED` is set.
pub fn config(cases: u32) -> ProptestConfig {
    let mut c = ProptestConfig::default();
    if matches!(c.rng_seed, proptest::test_runner::RngSeed::Random) {
        c.rng_seed = proptest::test_runner::RngSeed::Fixed(0x7572_616e);
    }
    c.cases = cases;
    c
}
