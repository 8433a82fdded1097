//! `turanlab`: exact counts, small-n extremal values and claim reports.
//!
//! Exit codes: 0 on success, 1 when a claim run finds a counterexample,
//! 2 on parse, argument or precondition errors, 3 on capacity errors.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use turanlab::constructions::parse_graph_expr;
use turanlab::graph::{count_copies, count_embeddings};
use turanlab::hom::{count_copies_blowup, count_embeddings_blowup};
use turanlab::oracle::{ex_oracle, OracleMode};
use turanlab::verifiers::{run_claim, Status};
use turanlab::{graph6_encode, BigCount, Error, GraphExpr};

#[derive(Parser)]
#[command(
    name = "turanlab",
    version,
    about = "Exact tools for generalized Turan problems"
)]
struct Cli {
    /// Worker threads; 0 lets rayon decide. Output does not depend on it.
    #[arg(long, global = true, env = "TURANLAB_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count copies of H in G (embeddings with --labeled).
    Count {
        #[arg(long)]
        h: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        labeled: bool,
    },
    /// Largest number of copies of H in an F-free graph on n <= 10 vertices.
    Oracle {
        #[arg(long)]
        h: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: usize,
        /// Only scan edge-maximal F-free graphs.
        #[arg(long)]
        maximal_only: bool,
        /// Write the extremal graphs here, one graph6 string per line.
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Run a claim verifier and emit its report as one JSON line.
    Verify {
        #[arg(long)]
        claim: String,
        /// Parameters as a JSON object; graphs are graph expressions.
        #[arg(long)]
        params: String,
        /// Append the report to this file instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("cannot write {}: {e}", path.display()))
}

/// Both sides concrete: direct search. Otherwise count on the blow-up
/// specifications, which never materializes the classes.
fn count(h: &str, g: &str, labeled: bool) -> Result<BigCount, Error> {
    let (h, g) = (parse_graph_expr(h)?, parse_graph_expr(g)?);
    match (h, g) {
        (GraphExpr::Graph(h), GraphExpr::Graph(g)) if labeled => Ok(count_embeddings(&h, &g)),
        (GraphExpr::Graph(h), GraphExpr::Graph(g)) => Ok(count_copies(&h, &g)),
        (h, g) if labeled => count_embeddings_blowup(&h.into_spec(), &g.into_spec()),
        (h, g) => count_copies_blowup(&h.into_spec(), &g.into_spec()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Count { h, g, labeled } => {
            println!("{}", count(&h, &g, labeled)?);
        }
        Command::Oracle {
            h,
            f,
            n,
            maximal_only,
            witnesses,
        } => {
            let h = parse_graph_expr(&h)?.into_graph()?;
            let f = parse_graph_expr(&f)?.into_graph()?;
            let mode = if maximal_only {
                OracleMode::MaximalOnly
            } else {
                OracleMode::All
            };
            let result = ex_oracle(n, &h, &f, mode)?;
            if let Some(path) = witnesses {
                let text: String = result
                    .witnesses
                    .iter()
                    .map(|w| graph6_encode(w) + "\n")
                    .collect();
                std::fs::write(&path, text).map_err(|e| io_error(&path, e))?;
            }
            println!("{}", result.value);
        }
        Command::Verify { claim, params, out } => {
            let params: serde_json::Value = serde_json::from_str(&params)
                .map_err(|e| Failure::Usage(format!("--params is not valid JSON: {e}")))?;
            let report = run_claim(&claim, &params)?;
            let line = report.to_json_line();
            match out {
                Some(path) => {
                    let mut file = OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(&path)
                        .map_err(|e| io_error(&path, e))?;
                    writeln!(file, "{line}").map_err(|e| io_error(&path, e))?;
                }
                None => println!("{line}"),
            }
            if report.status == Status::Counterexample {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("turanlab: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("turanlab: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("turanlab: {e}");
            match e {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
