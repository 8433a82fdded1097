//! JSON parameter objects for running a claim by name.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use super::claims::{
    conjecture_probe, verify_lemma_lemi, verify_main3_separation, verify_theorem_main_instance,
    verify_turg1_instance, verify_turg2_instance, verify_zykov, CompareMode, Main3Params,
};
use super::gap::{verify_prop_main2_gap, GapSweep, Ratio};
use super::ClaimReport;
use crate::constructions::{parse_graph_expr, BlowupSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Claim names accepted by [`run_claim`].
pub const CLAIMS: [&str; 8] = [
    "zykov",
    "theorem-main",
    "prop-main2",
    "lemma-lemi",
    "turg1",
    "turg2",
    "main3",
    "conjecture-probe",
];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Zykov {
    max_n: usize,
    max_r: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TheoremMain {
    h: String,
    f: String,
    n: u64,
    #[serde(default)]
    core: Option<(u32, u32)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PropMain2 {
    f: String,
    k: usize,
    #[serde(default)]
    a_max: Option<u64>,
    #[serde(default)]
    gammas: Option<Vec<Ratio>>,
    #[serde(default)]
    n_grid: Option<Vec<u64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LemmaLemi {
    f: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Turg1 {
    ell: usize,
    m: u64,
    f: String,
    n: u64,
    #[serde(default)]
    mode: Option<CompareMode>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Turg2 {
    k: usize,
    m: u64,
    a: u64,
    b: u64,
    f: String,
    n: u64,
    #[serde(default)]
    mode: Option<CompareMode>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Main3 {
    f: String,
    #[serde(default)]
    m: Option<u64>,
    #[serde(default)]
    a_max: Option<u64>,
    #[serde(default)]
    gammas: Option<Vec<Ratio>>,
    #[serde(default)]
    n_grid: Option<Vec<u64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Probe {
    h: String,
    f: String,
    n: u64,
}

fn parse<T: DeserializeOwned>(params: &Value) -> Result<T> {
    T::deserialize(params).map_err(|e| Error::argument(format!("malformed params: {e}")))
}

fn graph(text: &str) -> Result<Graph> {
    parse_graph_expr(text)?.into_graph()
}

fn spec(text: &str) -> Result<BlowupSpec> {
    Ok(parse_graph_expr(text)?.into_spec())
}

/// Run the named claim; graphs in `params` are graph expressions. The
/// report echoes `params` unchanged.
pub fn run_claim(name: &str, params: &Value) -> Result<ClaimReport> {
    let report = match name {
        "zykov" => {
            let p: Zykov = parse(params)?;
            verify_zykov(p.max_n, p.max_r)
        }
        "theorem-main" => {
            let p: TheoremMain = parse(params)?;
            verify_theorem_main_instance(&spec(&p.h)?, &graph(&p.f)?, p.n, p.core)
        }
        "prop-main2" => {
            let p: PropMain2 = parse(params)?;
            let d = GapSweep::default();
            let sweep = GapSweep {
                a_max: p.a_max.unwrap_or(d.a_max),
                gammas: p.gammas.unwrap_or(d.gammas),
                n_grid: p.n_grid.unwrap_or(d.n_grid),
            };
            verify_prop_main2_gap(&graph(&p.f)?, p.k, &sweep)
        }
        "lemma-lemi" => {
            let p: LemmaLemi = parse(params)?;
            verify_lemma_lemi(&graph(&p.f)?)
        }
        "turg1" => {
            let p: Turg1 = parse(params)?;
            verify_turg1_instance(p.ell, p.m, &graph(&p.f)?, p.n, p.mode)
        }
        "turg2" => {
            let p: Turg2 = parse(params)?;
            verify_turg2_instance(p.k, (p.m, p.a, p.b), &graph(&p.f)?, p.n, p.mode)
        }
        "main3" => {
            let p: Main3 = parse(params)?;
            let d = Main3Params::default();
            let run = Main3Params {
                m: p.m,
                a_max: p.a_max.unwrap_or(d.a_max),
                gammas: p.gammas.unwrap_or(d.gammas),
                n_grid: p.n_grid.unwrap_or(d.n_grid),
            };
            verify_main3_separation(&graph(&p.f)?, &run)
        }
        "conjecture-probe" => {
            let p: Probe = parse(params)?;
            conjecture_probe(&spec(&p.h)?, &graph(&p.f)?, p.n)
        }
        _ => Err(Error::argument(format!(
            "unknown claim '{name}', expected one of {}",
            CLAIMS.join(", ")
        ))),
    }?;
    Ok(ClaimReport {
        params: params.clone(),
        ..report
    })
}
