//! Finite certificates that an end-blown path power is not weakly
//! `F`-Turán-good.
//!
//! The pattern is `P_(k+1)^(r-1)` with both end vertices blown up to `a`
//! vertices. Its unique `r`-coloring separates the two ends, so in any
//! complete `r`-partite graph the two end classes sit in different parts.
//! In a blow-up of `C_k^(r-1)` the path wraps once around the cycle and
//! puts both ends into the same huge class. A path on only `k` vertices
//! cannot close up this way: skipping a class breaks the edges between
//! vertices `r - 1` steps apart. When `k > |V(F)|` no blow-up of
//! `C_k^(r-1)` contains `F`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{timed, ClaimReport, Status};
use crate::constructions::{
    cycle, end_blown_path_power, graph_power, unbalanced_cycle_power_host, BlowupSpec,
};
use crate::error::{Error, Result};
use crate::formulas::partite_upper_bound_labeled;
use crate::graph::{chromatic_number, BigCount, Graph};
use crate::hom::{count_embeddings_blowup, hom_exists, HomWitness, LoadProfile};

/// A positive fraction, written `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Ratio> {
        if num == 0 || den == 0 {
            return Err(Error::argument("fractions must be positive"));
        }
        Ok(Ratio { num, den })
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ratio> {
        let bad = || Error::argument(format!("expected a fraction like 1/20, got '{s}'"));
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        Ratio::new(
            num.trim().parse().map_err(|_| bad())?,
            den.trim().parse().map_err(|_| bad())?,
        )
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Parameter grid of the certificate search, scanned by ascending `a`, then
/// `gamma`, then `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSweep {
    pub a_max: u64,
    pub gammas: Vec<Ratio>,
    pub n_grid: Vec<u64>,
}

impl Default for GapSweep {
    fn default() -> Self {
        GapSweep {
            a_max: 60,
            gammas: vec![
                Ratio { num: 1, den: 16 },
                Ratio { num: 1, den: 20 },
                Ratio { num: 1, den: 24 },
            ],
            n_grid: vec![1_000, 10_000, 100_000],
        }
    }
}

/// Record that `F` has no homomorphism into the host base, so no blow-up of
/// the base contains `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessCheck {
    pub host_base: Graph,
    pub homomorphism: Option<HomWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCertificate {
    pub f: Graph,
    pub r: usize,
    pub k: usize,
    pub a: u64,
    pub gamma: Ratio,
    pub pattern: BlowupSpec,
    pub host: BlowupSpec,
    pub n: u64,
    #[serde(with = "crate::serde_big")]
    pub host_labeled: BigCount,
    #[serde(with = "crate::serde_big")]
    pub partite_bound_labeled: BigCount,
    pub freeness: FreenessCheck,
}

impl GapCertificate {
    /// Recompute everything from the stored data: both counts, the strict
    /// inequality, the host order and the freeness check.
    pub fn revalidate(&self) -> Result<bool> {
        let host_labeled = count_embeddings_blowup(&self.pattern, &self.host)?;
        let bound = partite_upper_bound_labeled(&self.pattern, self.n, self.r)?;
        Ok(host_labeled == self.host_labeled
            && bound == self.partite_bound_labeled
            && host_labeled > bound
            && self.host.total() == BigCount::from(self.n)
            && *self.host.base() == self.freeness.host_base
            && self.freeness.homomorphism.is_none()
            && hom_exists(&self.f, self.host.base()).is_none()
            && chromatic_number(&self.f) == self.r + 1)
    }
}

/// Closest approach of a sweep without a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestRatio {
    pub a: u64,
    pub gamma: Ratio,
    pub n: u64,
    #[serde(with = "crate::serde_big")]
    pub host_labeled: BigCount,
    #[serde(with = "crate::serde_big")]
    pub partite_bound_labeled: BigCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapOutcome {
    Certificate(Box<GapCertificate>),
    /// The host base admits a homomorphism from `F`.
    NotFree(FreenessCheck),
    Inconclusive(Option<BestRatio>),
}

/// Check the preconditions, the freeness of all blow-ups of `C_k^(r-1)`,
/// and sweep for the first certificate.
pub fn search_gap_certificate(f: &Graph, k: usize, sweep: &GapSweep) -> Result<GapOutcome> {
    let chi = chromatic_number(f);
    if chi < 3 {
        return Err(Error::precondition(format!(
            "F must be non-bipartite with r = chi(F) - 1 >= 2, chi(F) = {chi}"
        )));
    }
    let r = chi - 1;
    if k <= f.order() {
        return Err(Error::precondition(format!(
            "k = {k} must exceed |V(F)| = {}",
            f.order()
        )));
    }
    if (k + 1) % r == 1 {
        return Err(Error::precondition(format!(
            "ends not color-separated: k + 1 = {} is 1 mod r = {r}",
            k + 1
        )));
    }
    let host_base = graph_power(&cycle(k)?, r - 1)?;
    if let Some(w) = hom_exists(f, &host_base) {
        return Ok(GapOutcome::NotFree(FreenessCheck {
            host_base,
            homomorphism: Some(w),
        }));
    }
    let mut best: Option<BestRatio> = None;
    for a in 1..=sweep.a_max {
        let pattern = end_blown_path_power(k + 1, r, a)?;
        let profile = LoadProfile::new(&pattern, &host_base)?;
        for &gamma in &sweep.gammas {
            for &n in &sweep.n_grid {
                let host = unbalanced_cycle_power_host(k, r, gamma.num, gamma.den, n)?;
                let host_labeled = profile.evaluate(host.sizes());
                let bound = partite_upper_bound_labeled(&pattern, n, r)?;
                if host_labeled > bound {
                    return Ok(GapOutcome::Certificate(Box::new(GapCertificate {
                        f: f.clone(),
                        r,
                        k,
                        a,
                        gamma,
                        pattern,
                        host,
                        n,
                        host_labeled,
                        partite_bound_labeled: bound,
                        freeness: FreenessCheck {
                            host_base,
                            homomorphism: None,
                        },
                    })));
                }
                let closer = best.as_ref().is_none_or(|b| {
                    &host_labeled * &b.partite_bound_labeled > &b.host_labeled * &bound
                });
                if closer {
                    best = Some(BestRatio {
                        a,
                        gamma,
                        n,
                        host_labeled,
                        partite_bound_labeled: bound,
                    });
                }
            }
        }
    }
    Ok(GapOutcome::Inconclusive(best))
}

pub fn verify_prop_main2_gap(f: &Graph, k: usize, sweep: &GapSweep) -> Result<ClaimReport> {
    let params = json!({ "f": f, "k": k, "sweep": sweep });
    timed("prop-main2", params, || {
        let outcome = search_gap_certificate(f, k, sweep)?;
        let status = match &outcome {
            GapOutcome::Certificate(_) => Status::GapFound,
            GapOutcome::NotFree(_) => Status::Counterexample,
            GapOutcome::Inconclusive(_) => Status::Inconclusive,
        };
        Ok((
            status,
            Some(serde_json::to_value(&outcome).expect("serializable")),
        ))
    })
}
