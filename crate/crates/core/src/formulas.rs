//! Closed-form counts and thresholds in exact integer arithmetic.

use std::collections::HashSet;

use num_traits::{One, Pow, Zero};

pub use crate::arith::{binomial, falling_factorial, multinomial};
use crate::constructions::{graph_power, path, BlowupSpec};
use crate::error::{Error, Result};
use crate::graph::BigCount;
use crate::hom::has_unique_r_coloring;

/// Copies of the double star `S_{a,b}` whose central edge is a fixed edge of
/// `K_{x,y}`: `C(x-1,a)C(y-1,b) + C(y-1,a)C(x-1,b)`, or the single term
/// `C(x-1,a)C(y-1,b)` when `a = b`.
pub fn double_star_central_count(a: u64, b: u64, x: u64, y: u64) -> BigCount {
    let (a, b, x, y) = (a as i64, b as i64, x as i64, y as i64);
    let first = binomial(x - 1, a) * binomial(y - 1, b);
    if a == b {
        first
    } else {
        first + binomial(y - 1, a) * binomial(x - 1, b)
    }
}

/// The same quantity by direct enumeration: every choice of leaf sets on the
/// two ends of the edge `0 - x` of `K_{x,y}`, deduplicated as edge sets.
pub fn central_edge_count_check(a: usize, b: usize, x: usize, y: usize) -> Result<BigCount> {
    if x + y > 14 {
        return Err(Error::capacity("brute force limited to x + y <= 14"));
    }
    if x == 0 || y == 0 {
        return Err(Error::argument("both sides need at least one vertex"));
    }
    // vertices 0..x on one side, x..x+y on the other; edge (i, x+j) is bit i*y+j
    let edge = |i: usize, j: usize| -> u64 { 1 << (i * y + j) };
    let (u, v) = (0usize, 0usize);
    let mut copies: HashSet<u64> = HashSet::new();
    for (on_u, on_v) in [(a, b), (b, a)] {
        for leaves_u in subsets((1..y).collect(), on_u) {
            for leaves_v in subsets((1..x).collect(), on_v) {
                let mut set = edge(u, v);
                for &j in &leaves_u {
                    set |= edge(u, j);
                }
                for &i in &leaves_v {
                    set |= edge(i, v);
                }
                copies.insert(set);
            }
        }
    }
    Ok(BigCount::from(copies.len()))
}

fn subsets(items: Vec<usize>, k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for (i, &x) in items.iter().enumerate() {
            cur.push(x);
            rec(&items[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&items, k, &mut Vec::new(), &mut out);
    out
}

/// Copies of `K_{a,b}` in `K_{x,y}`.
pub fn count_kab_complete_bipartite(a: u64, b: u64, x: u64, y: u64) -> Result<BigCount> {
    if a == 0 || b == 0 {
        return Err(Error::argument("K_{a,b} needs a, b >= 1"));
    }
    let c = |n: u64, k: u64| binomial(n as i64, k as i64);
    Ok(if a == b {
        c(x, a) * c(y, a)
    } else {
        c(x, a) * c(y, b) + c(x, b) * c(y, a)
    })
}

/// Copies of `K_k` in the complete multipartite graph with the given part
/// sizes: the elementary symmetric polynomial `e_k(sizes)`.
pub fn count_clique_multipartite(k: usize, sizes: &[BigCount]) -> Result<BigCount> {
    if k == 0 {
        return Err(Error::argument("clique order must be at least 1"));
    }
    let mut e = vec![BigCount::zero(); k + 1];
    e[0] = BigCount::one();
    for s in sizes {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * s;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(k))
}

fn check_ab(a: u64, b: u64) -> Result<()> {
    if b == 0 || a < b {
        return Err(Error::argument(format!(
            "expected a >= b >= 1, got a={a}, b={b}"
        )));
    }
    Ok(())
}

/// Whether `a < b + 1/2 + sqrt(2b + 1/4)`.
///
/// With `d = a - b`: for `d = 0` the inequality holds; otherwise both sides
/// of `d - 1/2 < sqrt(2b + 1/4)` are positive and squaring gives
/// `d(d-1) < 2b`, that is `C(d,2) < b`.
pub fn ma_qiu_is_good(a: u64, b: u64) -> Result<bool> {
    check_ab(a, b)?;
    let d = a - b;
    Ok(d == 0 || binomial(d as i64, 2) < BigCount::from(b))
}

/// Whether `b >= C(a-b, 2)`.
pub fn brown_sidorenko_balanced_ok(a: u64, b: u64) -> Result<bool> {
    check_ab(a, b)?;
    Ok(BigCount::from(b) >= binomial((a - b) as i64, 2))
}

/// `n^(k-2) * floor(n^2/4)^a`.
pub fn partite_upper_bound_value(k: usize, a: u64, n: u64) -> BigCount {
    let n_big = BigCount::from(n);
    let quarter = &n_big * &n_big / 4u32;
    Pow::pow(&n_big, k.saturating_sub(2)) * Pow::pow(&quarter, a)
}

/// Upper bound on labeled copies of the end-blown path power
/// `P_k^(r-1)` with end classes of size `a` in any complete `r`-partite
/// graph on `n` vertices. The two end classes have different colors in the
/// unique `r`-coloring, so they lie in two parts of total size at most `n`.
pub fn partite_upper_bound_labeled(pattern: &BlowupSpec, n: u64, r: usize) -> Result<BigCount> {
    let base = pattern.base();
    let k = base.order();
    if r < 2 || k < 3 || *base != graph_power(&path(k)?, r - 1)? {
        return Err(Error::argument(format!(
            "pattern base is not the ({})-th power of a path",
            r.saturating_sub(1)
        )));
    }
    let sizes = pattern.sizes();
    let a = &sizes[0];
    if *a != sizes[k - 1] || sizes[1..k - 1].iter().any(|s| !s.is_one()) {
        return Err(Error::argument("sizes must be [a, 1, ..., 1, a]"));
    }
    let a: u64 = a
        .try_into()
        .map_err(|_| Error::capacity("end class size too large"))?;
    if k % r == 1 || !has_unique_r_coloring(base, r) {
        return Err(Error::precondition("ends not color-separated"));
    }
    Ok(partite_upper_bound_value(k, a, n))
}
