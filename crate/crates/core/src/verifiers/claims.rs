use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::gap::Ratio;
use super::hosts::comparison_hosts;
use super::{timed, ClaimReport, Status};
use crate::constructions::{
    blown_path, clique, cycle, turan, turan_sizes, unbalanced_cycle_power_host, BlowupSpec,
};
use crate::error::{Error, Result};
use crate::formulas::{brown_sidorenko_balanced_ok, count_clique_multipartite, ma_qiu_is_good};
use crate::graph::{
    chromatic_number, color_critical_edges, color_critical_vertices, BigCount, Graph,
};
use crate::graph6::graph6_encode;
use crate::hom::{
    count_copies_blowup, hom_exists, hom_exists_with_fiber_caps, longest_odd_cycle_target,
    LoadProfile,
};
use crate::optimizer::{best_multipartite, Mode};
use crate::oracle::{ex_oracle, OracleMode, OracleResult, MAX_ENUM_ORDER};

/// Largest `n` swept by the Zykov check.
const ZYKOV_MAX_N: usize = 9;

fn big(v: &BigCount) -> Value {
    Value::String(v.to_string())
}

fn oracle_json(r: &OracleResult) -> Value {
    json!({
        "value": big(&r.value),
        "witnesses": r.witnesses.iter().map(graph6_encode).collect::<Vec<_>>(),
        "enumerated": r.enumerated,
        "mode": r.mode,
    })
}

fn small_n(n: u64) -> Result<usize> {
    if n > MAX_ENUM_ORDER as u64 {
        return Err(Error::capacity(format!(
            "the oracle is limited to n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    Ok(n as usize)
}

fn require_three_chromatic(f: &Graph) -> Result<()> {
    let chi = chromatic_number(f);
    if chi != 3 {
        return Err(Error::precondition(format!(
            "F must be 3-chromatic, chromatic number is {chi}"
        )));
    }
    Ok(())
}

fn require_critical_vertex(f: &Graph) -> Result<()> {
    if color_critical_vertices(f).is_empty() {
        return Err(Error::precondition("F has no color-critical vertex"));
    }
    Ok(())
}

/// `ex(n, K_k, K_(r+1))` against the clique count of `T(n, r)` for every
/// `r <= max_r`, `k <= min(r, n)` and `n <= max_n`.
pub fn verify_zykov(max_n: usize, max_r: usize) -> Result<ClaimReport> {
    if max_n > ZYKOV_MAX_N {
        return Err(Error::capacity(format!(
            "the Zykov sweep is limited to n <= {ZYKOV_MAX_N}, got {max_n}"
        )));
    }
    if max_r == 0 || max_n == 0 {
        return Err(Error::argument("max_n and max_r must be positive"));
    }
    timed("zykov", json!({ "max_n": max_n, "max_r": max_r }), || {
        let mut rows = Vec::new();
        let mut all_equal = true;
        for r in 1..=max_r {
            let forbidden = clique(r + 1)?;
            for k in 1..=r {
                let h = clique(k)?;
                for n in k..=max_n {
                    let mode = if n <= 8 {
                        OracleMode::All
                    } else {
                        OracleMode::MaximalOnly
                    };
                    let oracle = ex_oracle(n, &h, &forbidden, mode)?.value;
                    let parts = turan_sizes(n as u64, r.min(n) as u64)?;
                    let sizes: Vec<BigCount> = parts.iter().map(|&p| BigCount::from(p)).collect();
                    let formula = count_clique_multipartite(k, &sizes)?;
                    all_equal &= oracle == formula;
                    rows.push(json!({
                        "r": r, "k": k, "n": n,
                        "oracle": big(&oracle), "turan": big(&formula),
                    }));
                }
            }
        }
        let status = if all_equal {
            Status::Verified
        } else {
            Status::Counterexample
        };
        Ok((status, Some(json!({ "rows": rows }))))
    })
}

/// Vertex sets `a` and `b` spanning a complete bipartite subgraph such
/// that every vertex lies in `a | b` or has a neighbor there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Core {
    a: u64,
    b: u64,
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn common_neighbors(h: &Graph, a: u64) -> u64 {
    bits(a)
        .into_iter()
        .fold(h.vertex_mask(), |m, v| m & h.neighbors(v))
}

fn dominates(h: &Graph, set: u64) -> bool {
    let closed = bits(set).into_iter().fold(set, |m, v| m | h.neighbors(v));
    closed == h.vertex_mask()
}

/// Subsets of `pool` with exactly `size` elements, in increasing order.
fn subsets_of_size(pool: u64, size: u32) -> impl Iterator<Item = u64> {
    let members = bits(pool);
    let n = members.len();
    (0u64..1 << n)
        .filter(move |s| s.count_ones() == size)
        .map(move |s| bits(s).into_iter().fold(0u64, |m, i| m | 1 << members[i]))
}

fn find_core(h: &Graph, shape: Option<(u32, u32)>) -> Option<Core> {
    let all = h.vertex_mask();
    match shape {
        None => (1..=all).filter(|a| a & !all == 0).find_map(|a| {
            let b = common_neighbors(h, a);
            (b != 0 && dominates(h, a | b)).then_some(Core { a, b })
        }),
        Some((s, t)) => {
            let shapes = if s == t {
                vec![(s, t)]
            } else {
                vec![(s, t), (t, s)]
            };
            shapes.into_iter().find_map(|(s, t)| {
                subsets_of_size(all, s).find_map(|a| {
                    subsets_of_size(common_neighbors(h, a), t)
                        .find(|&b| dominates(h, a | b))
                        .map(|b| Core { a, b })
                })
            })
        }
    }
}

/// Exact comparison of `ex(n, H, F)` with the best complete bipartite host
/// for a bipartite `H` with a dominating complete bipartite core.
pub fn verify_theorem_main_instance(
    h: &BlowupSpec,
    f: &Graph,
    n: u64,
    core: Option<(u32, u32)>,
) -> Result<ClaimReport> {
    let hg = h.materialize()?;
    if !hg.is_bipartite() {
        return Err(Error::precondition("H must be bipartite"));
    }
    require_three_chromatic(f)?;
    if color_critical_edges(f).is_empty() {
        return Err(Error::precondition("F has no color-critical edge"));
    }
    let n_small = small_n(n)?;
    if hg.order() > n_small {
        return Err(Error::argument(format!(
            "H has {} vertices, more than n = {n}",
            hg.order()
        )));
    }
    if core.is_some_and(|(s, t)| s == 0 || t == 0) {
        return Err(Error::argument("core sides must be positive"));
    }
    let found = find_core(&hg, core)
        .ok_or_else(|| Error::precondition("H has no dominating complete bipartite core"))?;
    let params = json!({
        "h": h.to_expr(),
        "f": format!("g6:{}", graph6_encode(f)),
        "n": n,
        "core": core.map(|(s, t)| [s, t]),
    });
    timed("theorem-main", params, || {
        let oracle = ex_oracle(n_small, &hg, f, OracleMode::MaximalOnly)?;
        let partite = best_multipartite(h, n, 2, Mode::Exact)?;
        let status = if oracle.value == partite.count {
            Status::Verified
        } else {
            Status::Inconclusive
        };
        Ok((
            status,
            Some(json!({
                "core": { "a": bits(found.a), "b": bits(found.b) },
                "oracle": oracle_json(&oracle),
                "bipartite": partite,
            })),
        ))
    })
}

/// Search for a homomorphism from `F` to its longest odd-cycle target with
/// some fiber of order at most one.
pub fn verify_lemma_lemi(f: &Graph) -> Result<ClaimReport> {
    require_three_chromatic(f)?;
    require_critical_vertex(f)?;
    let params = json!({ "f": format!("g6:{}", graph6_encode(f)) });
    timed("lemma-lemi", params, || {
        let len = longest_odd_cycle_target(f)?;
        let target = cycle(len)?;
        for class in 0..len {
            let mut caps = vec![None; len];
            caps[class] = Some(1);
            if let Some(w) = hom_exists_with_fiber_caps(f, &target, &caps) {
                let fibers = w.fiber_sizes(len);
                return Ok((
                    Status::Verified,
                    Some(json!({
                        "target_cycle": len,
                        "capped_class": class,
                        "map": w.map,
                        "fibers": fibers,
                    })),
                ));
            }
        }
        Ok((Status::Counterexample, Some(json!({ "target_cycle": len }))))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompareMode {
    /// Exact `ex(n, H, F)` against the Turan count; needs `n <= 10`.
    Oracle,
    /// Turan count against the closed host library.
    Hosts,
}

fn compare(pattern: &BlowupSpec, f: &Graph, n: u64, mode: CompareMode) -> Result<(Status, Value)> {
    match mode {
        CompareMode::Oracle => {
            let n_small = small_n(n)?;
            let oracle = ex_oracle(n_small, &pattern.materialize()?, f, OracleMode::MaximalOnly)?;
            let turan_copies = count_copies_blowup(pattern, &turan(n, 2)?)?;
            let status = if oracle.value == turan_copies {
                Status::Verified
            } else {
                Status::Inconclusive
            };
            Ok((
                status,
                json!({ "oracle": oracle_json(&oracle), "turan_copies": big(&turan_copies) }),
            ))
        }
        CompareMode::Hosts => {
            let cmp = comparison_hosts(pattern, f, n)?;
            let status = if cmp.turan_attains_max {
                Status::Verified
            } else {
                Status::Inconclusive
            };
            Ok((status, serde_json::to_value(&cmp).expect("serializable")))
        }
    }
}

fn default_mode(n: u64) -> CompareMode {
    if n <= MAX_ENUM_ORDER as u64 {
        CompareMode::Oracle
    } else {
        CompareMode::Hosts
    }
}

/// Whether `T(n, 2)` is best for the balanced path blow-up `P_(2 ell)(m)`.
pub fn verify_turg1_instance(
    ell: usize,
    m: u64,
    f: &Graph,
    n: u64,
    mode: Option<CompareMode>,
) -> Result<ClaimReport> {
    if ell == 0 {
        return Err(Error::argument("ell must be positive"));
    }
    require_three_chromatic(f)?;
    require_critical_vertex(f)?;
    if m < f.order() as u64 {
        return Err(Error::precondition(format!(
            "m = {m} is smaller than |V(F)| = {}",
            f.order()
        )));
    }
    let pattern = blown_path(2 * ell, m, m, m)?;
    let mode = mode.unwrap_or(default_mode(n));
    let params = json!({
        "ell": ell, "m": m, "f": format!("g6:{}", graph6_encode(f)), "n": n, "mode": mode,
    });
    timed("turg1", params, || {
        let (status, evidence) = compare(&pattern, f, n, mode)?;
        Ok((
            status,
            Some(json!({ "h": pattern.to_expr(), "comparison": evidence })),
        ))
    })
}

/// Whether `T(n, 2)` is best for the path blow-up `P_(2k+2)(m, a, b)`.
pub fn verify_turg2_instance(
    k: usize,
    (m, a, b): (u64, u64, u64),
    f: &Graph,
    n: u64,
    mode: Option<CompareMode>,
) -> Result<ClaimReport> {
    if k == 0 {
        return Err(Error::argument("k must be positive"));
    }
    if !(a >= b && b >= m && m >= f.order() as u64) {
        return Err(Error::precondition(format!(
            "need a >= b >= m >= |V(F)|, got a={a}, b={b}, m={m}, |V(F)|={}",
            f.order()
        )));
    }
    if !brown_sidorenko_balanced_ok(a, b)? {
        return Err(Error::precondition(format!(
            "b >= C(a-b, 2) fails for a={a}, b={b}"
        )));
    }
    let odd = cycle(2 * k + 1)?;
    if hom_exists(f, &odd).is_none() {
        return Err(Error::precondition(format!(
            "F is not contained in any blow-up of C_{}",
            2 * k + 1
        )));
    }
    let pattern = blown_path(2 * k + 2, m, a, b)?;
    let mode = mode.unwrap_or(default_mode(n));
    let moreover = json!({
        "color_critical_vertex": !color_critical_vertices(f).is_empty(),
        "ma_qiu": ma_qiu_is_good(a, b)?,
    });
    let params = json!({
        "k": k, "m": m, "a": a, "b": b,
        "f": format!("g6:{}", graph6_encode(f)), "n": n, "mode": mode,
    });
    timed("turg2", params, || {
        let (status, evidence) = compare(&pattern, f, n, mode)?;
        Ok((
            status,
            Some(json!({ "h": pattern.to_expr(), "moreover": moreover, "comparison": evidence })),
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Main3Params {
    /// Inner class order; defaults to `|V(F)|`.
    #[serde(default)]
    pub m: Option<u64>,
    #[serde(default = "Main3Params::default_a_max")]
    pub a_max: u64,
    #[serde(default = "Main3Params::default_gammas")]
    pub gammas: Vec<Ratio>,
    #[serde(default = "Main3Params::default_n_grid")]
    pub n_grid: Vec<u64>,
}

impl Main3Params {
    fn default_a_max() -> u64 {
        60
    }

    fn default_gammas() -> Vec<Ratio> {
        [16, 20, 24]
            .iter()
            .map(|&d| Ratio { num: 1, den: d })
            .collect()
    }

    fn default_n_grid() -> Vec<u64> {
        vec![1_000, 10_000, 100_000]
    }
}

impl Default for Main3Params {
    fn default() -> Self {
        Main3Params {
            m: None,
            a_max: Self::default_a_max(),
            gammas: Self::default_gammas(),
            n_grid: Self::default_n_grid(),
        }
    }
}

/// Separation of `F`-goodness from weak `C_(2 ell + 1)`-goodness: the path
/// blow-up `P_(2k+2)(m, a, a)` wraps around a blow-up of `C_(2k+1)`, which
/// has no shorter odd cycle, and there can beat every complete bipartite
/// host.
pub fn verify_main3_separation(f: &Graph, p: &Main3Params) -> Result<ClaimReport> {
    require_three_chromatic(f)?;
    let m = p.m.unwrap_or(f.order() as u64);
    if m < f.order() as u64 {
        return Err(Error::precondition(format!(
            "m = {m} is smaller than |V(F)| = {}",
            f.order()
        )));
    }
    let params = json!({ "f": format!("g6:{}", graph6_encode(f)), "params": p });
    timed("main3", params, || {
        let len = longest_odd_cycle_target(f)?;
        let k = (len - 1) / 2;
        if k == 1 {
            return Ok((
                Status::Verified,
                Some(json!({ "k": 1, "shorter_cycles": [] })),
            ));
        }
        let host_base = cycle(len)?;
        for ell in 1..k {
            if let Some(w) = hom_exists(&cycle(2 * ell + 1)?, &host_base) {
                return Ok((
                    Status::Counterexample,
                    Some(json!({ "k": k, "ell": ell, "homomorphism": w })),
                ));
            }
        }
        let shorter: Vec<usize> = (1..k).map(|ell| 2 * ell + 1).collect();
        let mut trace = Vec::new();
        for a in m..=p.a_max.max(m) {
            let pattern = blown_path(2 * k + 2, m, a, a)?;
            let profile = LoadProfile::new(&pattern, &host_base)?;
            let aut = crate::hom::blowup_automorphism_count(&pattern)?;
            for &gamma in &p.gammas {
                for &n in &p.n_grid {
                    let host = unbalanced_cycle_power_host(len, 2, gamma.num, gamma.den, n)?;
                    let host_copies = profile.evaluate(host.sizes()) / &aut;
                    let balanced = count_copies_blowup(&pattern, &turan(n, 2)?)?;
                    if host_copies <= balanced {
                        continue;
                    }
                    let best = best_multipartite(&pattern, n, 2, Mode::Exact)?;
                    let entry = json!({
                        "a": a, "gamma": gamma, "n": n,
                        "host_copies": big(&host_copies), "best_bipartite": best,
                    });
                    if host_copies > best.count {
                        return Ok((
                            Status::GapFound,
                            Some(json!({
                                "k": k,
                                "shorter_cycles": shorter,
                                "h": pattern.to_expr(),
                                "host": host,
                                "certificate": entry,
                            })),
                        ));
                    }
                    trace.push(entry);
                }
            }
        }
        Ok((
            Status::Inconclusive,
            Some(json!({ "k": k, "shorter_cycles": shorter, "trace": trace })),
        ))
    })
}

/// Oracle value against the best complete multipartite host, recorded
/// without a verdict.
pub fn conjecture_probe(h: &BlowupSpec, f: &Graph, n: u64) -> Result<ClaimReport> {
    if color_critical_edges(f).is_empty() {
        return Err(Error::precondition("F has no color-critical edge"));
    }
    let n_small = small_n(n)?;
    let chi = chromatic_number(f);
    if chi < 3 {
        return Err(Error::precondition(
            "F must have chromatic number at least 3",
        ));
    }
    let r = chi - 1;
    let hg = h.materialize()?;
    let params = json!({ "h": h.to_expr(), "f": format!("g6:{}", graph6_encode(f)), "n": n });
    timed("conjecture-probe", params, || {
        let oracle = ex_oracle(n_small, &hg, f, OracleMode::MaximalOnly)?;
        let partite = best_multipartite(h, n, r, Mode::Exact)?;
        let clique_free = ex_oracle(n_small, &hg, &clique(r + 1)?, OracleMode::MaximalOnly)?;
        Ok((
            Status::Inconclusive,
            Some(json!({
                "oracle": oracle_json(&oracle),
                "best_multipartite": partite,
                "clique_free_oracle": oracle_json(&clique_free),
            })),
        ))
    })
}
