//! Candidate hosts for comparing a bipartite pattern against the balanced
//! complete bipartite graph.
//!
//! The library is closed: every complete bipartite graph `K_(x, n-x)`, and
//! blow-ups of `C_L^j` for odd `3 <= L <= 11` and `1 <= j < (L-1)/2` (just
//! `C_L` when that range is empty) whose base admits no homomorphism from
//! `F`. Each base is tried with the balanced sizes and with three lopsided
//! size vectors.

use serde::{Deserialize, Serialize};

use crate::constructions::{clique, cycle, graph_power, turan_sizes, BlowupSpec};
use crate::error::Result;
use crate::graph::{BigCount, Graph};
use crate::hom::{blowup_automorphism_count, hom_exists, LoadProfile};
use crate::optimizer::PartiteCounter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostCount {
    pub host: BlowupSpec,
    #[serde(with = "crate::serde_big")]
    pub copies: BigCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostComparison {
    pub n: u64,
    #[serde(with = "crate::serde_big")]
    pub turan_copies: BigCount,
    /// Best `K_(x, n-x)`, smallest `x` among ties.
    pub best_bipartite: HostCount,
    /// Best host from the odd-cycle library, if any base is `F`-free.
    pub best_library: Option<HostCount>,
    pub hosts_checked: u64,
    pub turan_attains_max: bool,
}

fn library_bases(f: &Graph) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for len in (3..=11usize).step_by(2) {
        let top = ((len - 1) / 2).saturating_sub(1).max(1);
        for j in 1..=top {
            let base = graph_power(&cycle(len)?, j)?;
            if hom_exists(f, &base).is_none() {
                out.push(base);
            }
        }
    }
    Ok(out)
}

fn library_sizes(len: usize, n: u64) -> Vec<Vec<u64>> {
    let l = len as u64;
    if n < l {
        return Vec::new();
    }
    let mut out = vec![turan_sizes(n, l).expect("n >= L")];
    for t in [2u64, 4, 8] {
        let small = (n / (t * l)).max(1);
        let mut sizes = vec![small; len];
        sizes[len - 1] = n - small * (l - 1);
        if !out.contains(&sizes) {
            out.push(sizes);
        }
    }
    out
}

fn keep_better(best: &mut Option<HostCount>, cand: HostCount) {
    if best.as_ref().is_none_or(|b| cand.copies > b.copies) {
        *best = Some(cand);
    }
}

/// Copies of `pattern` in `T(n, 2)`, every `K_(x, n-x)` and the `F`-free
/// library hosts on `n` vertices.
pub fn comparison_hosts(pattern: &BlowupSpec, f: &Graph, n: u64) -> Result<HostComparison> {
    let bipartite = PartiteCounter::new(pattern, 2)?;
    let turan = turan_sizes(n, 2)?;
    let turan_copies = bipartite.copies(&turan);
    let mut best_bipartite = None;
    let mut checked = 0u64;
    for x in 1..=n / 2 {
        checked += 1;
        let sizes = [n - x, x];
        keep_better(
            &mut best_bipartite,
            HostCount {
                host: BlowupSpec::from_sizes(clique(2)?, &sizes)?,
                copies: bipartite.copies(&sizes),
            },
        );
    }
    let best_bipartite = best_bipartite.expect("n >= 2 gives a bipartite host");

    let aut = blowup_automorphism_count(pattern)?;
    let mut best_library = None;
    for base in library_bases(f)? {
        let all_sizes = library_sizes(base.order(), n);
        if all_sizes.is_empty() {
            continue;
        }
        let profile = LoadProfile::new(pattern, &base)?;
        for sizes in all_sizes {
            checked += 1;
            let big: Vec<BigCount> = sizes.iter().map(|&s| BigCount::from(s)).collect();
            let copies = profile.evaluate(&big) / &aut;
            keep_better(
                &mut best_library,
                HostCount {
                    host: BlowupSpec::from_sizes(base.clone(), &sizes)?,
                    copies,
                },
            );
        }
    }
    let turan_attains_max = turan_copies >= best_bipartite.copies
        && best_library
            .as_ref()
            .is_none_or(|b| turan_copies >= b.copies);
    Ok(HostComparison {
        n,
        turan_copies,
        best_bipartite,
        best_library,
        hosts_checked: checked,
        turan_attains_max,
    })
}
