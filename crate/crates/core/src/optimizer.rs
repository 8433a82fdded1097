//! The complete `r`-partite host on `n` vertices with the most copies of a
//! pattern.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{clique, turan_sizes, BlowupSpec};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, BigCount, Graph};
use crate::hom::{blowup_automorphism_count, LoadProfile};
use crate::oracle::{ex_oracle, OracleMode, OracleResult};

/// Largest number of partitions scanned in exact mode.
pub const EXACT_PARTITION_LIMIT: u64 = 1_000_000;

/// Part sizes of a complete multipartite graph, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionSizes {
    parts: Vec<u64>,
}

impl PartitionSizes {
    /// Sorts the parts; errors on an empty part.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::argument("parts must be nonempty"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSizes { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Whether all parts differ by at most one.
    pub fn is_turan(&self) -> bool {
        match (self.parts.first(), self.parts.last()) {
            (Some(max), Some(min)) => max - min <= 1,
            _ => true,
        }
    }

    pub fn to_spec(&self) -> Result<BlowupSpec> {
        BlowupSpec::from_sizes(clique(self.r())?, &self.parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimum {
    pub sizes: PartitionSizes,
    #[serde(with = "crate::serde_big")]
    pub count: BigCount,
    pub mode: Mode,
}

/// Copies of a fixed pattern in complete `r`-partite hosts.
pub struct PartiteCounter {
    profile: LoadProfile,
    aut: BigCount,
}

impl PartiteCounter {
    pub fn new(pattern: &BlowupSpec, r: usize) -> Result<Self> {
        Ok(PartiteCounter {
            profile: LoadProfile::new(pattern, &clique(r)?)?,
            aut: blowup_automorphism_count(pattern)?,
        })
    }

    pub fn copies(&self, parts: &[u64]) -> BigCount {
        let sizes: Vec<BigCount> = parts.iter().map(|&p| BigCount::from(p)).collect();
        self.profile.evaluate(&sizes) / &self.aut
    }
}

/// Number of partitions of `n` into exactly `r` positive parts.
pub fn partition_count(n: u64, r: usize) -> BigCount {
    // p[k][m]: partitions of m into exactly k parts
    let n = n as usize;
    let mut p = vec![vec![BigCount::from(0u32); n + 1]; r + 1];
    p[0][0] = BigCount::from(1u32);
    for k in 1..=r {
        for m in k..=n {
            p[k][m] = &p[k - 1][m - 1] + &p[k][m - k];
        }
    }
    p[r][n].clone()
}

/// All weakly decreasing vectors of `r` positive parts summing to `n`.
fn partitions(n: u64, r: usize) -> Vec<Vec<u64>> {
    fn rec(left: u64, slots: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = left.div_ceil(slots as u64);
        let hi = max.min(left - (slots as u64 - 1));
        for x in (lo..=hi).rev() {
            cur.push(x);
            rec(left - x, slots - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, n, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Larger count wins; ties go to the lexicographically greater sizes.
fn better(a: (BigCount, Vec<u64>), b: (BigCount, Vec<u64>)) -> (BigCount, Vec<u64>) {
    if b > a {
        b
    } else {
        a
    }
}

fn check_args(n: u64, r: usize) -> Result<()> {
    if r < 2 || n < r as u64 {
        return Err(Error::argument(format!(
            "need r >= 2 and n >= r, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// Best complete `r`-partite host on `n` vertices for `pattern`.
pub fn best_multipartite(pattern: &BlowupSpec, n: u64, r: usize, mode: Mode) -> Result<Optimum> {
    check_args(n, r)?;
    let counter = PartiteCounter::new(pattern, r)?;
    match mode {
        Mode::Exact => {
            let total = partition_count(n, r);
            if total > BigCount::from(EXACT_PARTITION_LIMIT) {
                return Err(Error::capacity(format!(
                    "{total} partitions of {n} into {r} parts exceed {EXACT_PARTITION_LIMIT}"
                )));
            }
            let (count, parts) = partitions(n, r)
                .into_par_iter()
                .map(|p| (counter.copies(&p), p))
                .reduce_with(better)
                .expect("n >= r gives at least one partition");
            Ok(Optimum {
                sizes: PartitionSizes::new(parts)?,
                count,
                mode,
            })
        }
        Mode::Heuristic => {
            let best = seeds(n, r)
                .into_par_iter()
                .map(|s| climb(&counter, s))
                .reduce_with(better)
                .unwrap();
            Ok(Optimum {
                sizes: PartitionSizes::new(best.1)?,
                count: best.0,
                mode,
            })
        }
    }
}

/// The balanced partition and eight geometric ones: with ratio `1/(j+1)`,
/// each part takes the share `j/(j+1)` of the vertices left after reserving
/// one per remaining part.
fn seeds(n: u64, r: usize) -> Vec<Vec<u64>> {
    let mut out = vec![turan_sizes(n, r as u64).expect("n >= r")];
    for j in 1..=8u64 {
        let mut left = n - r as u64;
        let mut parts = Vec::with_capacity(r);
        for i in 0..r {
            let take = if i + 1 == r { left } else { left * j / (j + 1) };
            parts.push(1 + take);
            left -= take;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.push(parts);
    }
    out
}

/// Steepest-ascent moves of `step` vertices between two parts, halving the
/// step when no move improves, down to single vertices.
fn climb(counter: &PartiteCounter, start: Vec<u64>) -> (BigCount, Vec<u64>) {
    let n: u64 = start.iter().sum();
    let mut cur = (counter.copies(&start), start);
    let mut step = (n / 2).next_power_of_two().max(1);
    loop {
        let mut best = cur.clone();
        for i in 0..cur.1.len() {
            for j in 0..cur.1.len() {
                if i == j || cur.1[i] <= step {
                    continue;
                }
                let mut p = cur.1.clone();
                p[i] -= step;
                p[j] += step;
                p.sort_unstable_by(|a, b| b.cmp(a));
                let c = counter.copies(&p);
                best = better(best, (c, p));
            }
        }
        if best.0 > cur.0 {
            cur = best;
        } else if step > 1 {
            step /= 2;
        } else {
            return cur;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeakGoodStatus {
    /// The best complete multipartite host attains the oracle value.
    WeaklyGood,
    /// Some non-multipartite `F`-free graph beats every multipartite host.
    Gap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakGoodReport {
    pub n: u64,
    pub r: usize,
    pub status: WeakGoodStatus,
    pub oracle: OracleResult,
    pub partite: Optimum,
}

/// Compare `ex(n, H, F)` with the best complete `(chi(F)-1)`-partite host.
pub fn is_weakly_good_at(pattern: &BlowupSpec, f: &Graph, n: u64) -> Result<WeakGoodReport> {
    let chi = chromatic_number(f);
    if chi < 3 {
        return Err(Error::argument("F must have chromatic number at least 3"));
    }
    let r = chi - 1;
    let h = pattern.materialize()?;
    let n_small = n
        .to_usize()
        .ok_or_else(|| Error::capacity("n too large for the oracle"))?;
    let oracle = ex_oracle(n_small, &h, f, OracleMode::MaximalOnly)?;
    let partite = best_multipartite(pattern, n, r, Mode::Exact)?;
    let status = if oracle.value == partite.count {
        WeakGoodStatus::WeaklyGood
    } else {
        WeakGoodStatus::Gap
    };
    Ok(WeakGoodReport {
        n,
        r,
        status,
        oracle,
        partite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, double_star, star};

    fn spec(g: Graph) -> BlowupSpec {
        BlowupSpec::from_graph(&g)
    }

    #[test]
    fn examples() {
        let o = best_multipartite(&spec(star(3).unwrap()), 8, 2, Mode::Exact).unwrap();
        assert_eq!(
            (o.sizes.parts(), o.count.clone()),
            (&[6u64, 2][..], BigCount::from(40u32))
        );
        let o = best_multipartite(&spec(clique(2).unwrap()), 9, 2, Mode::Exact).unwrap();
        assert_eq!(
            (o.sizes.parts(), o.count.clone()),
            (&[5u64, 4][..], BigCount::from(20u32))
        );
        let o = best_multipartite(&spec(clique(3).unwrap()), 6, 3, Mode::Exact).unwrap();
        assert_eq!(
            (o.sizes.parts(), o.count.clone()),
            (&[2u64, 2, 2][..], BigCount::from(8u32))
        );
        assert!(o.sizes.is_turan());
    }

    #[test]
    fn heuristic_agrees_on_small_cases() {
        for n in 4..=14 {
            let h = spec(star(3).unwrap());
            let e = best_multipartite(&h, n, 2, Mode::Exact).unwrap();
            let g = best_multipartite(&h, n, 2, Mode::Heuristic).unwrap();
            assert_eq!(e.count, g.count);
            assert_eq!(g.mode, Mode::Heuristic);
        }
    }

    #[test]
    fn partition_counting() {
        assert_eq!(partition_count(8, 3), BigCount::from(5u32));
        assert_eq!(partitions(8, 3).len(), 5);
        assert!(matches!(
            best_multipartite(&spec(clique(2).unwrap()), 2000, 4, Mode::Exact),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn weakly_good_examples() {
        let k3 = clique(3).unwrap();
        let r = is_weakly_good_at(&spec(cycle(4).unwrap()), &k3, 8).unwrap();
        assert_eq!(r.status, WeakGoodStatus::WeaklyGood);
        assert_eq!(r.oracle.value, BigCount::from(36u32));
        let r = is_weakly_good_at(&spec(clique(2).unwrap()), &k3, 7).unwrap();
        assert_eq!(r.oracle.value, BigCount::from(12u32));
        assert_eq!(r.status, WeakGoodStatus::WeaklyGood);
        let r = is_weakly_good_at(&spec(double_star(1, 2).unwrap()), &k3, 7).unwrap();
        assert!(r.oracle.value >= r.partite.count);
    }
}
