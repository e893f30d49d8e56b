//! `cayley-drg`: construct, analyze and decide Cayley graphs, and replay the
//! verification catalog.

mod source;

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use cayley_drg::analysis::{line_graph_abelian_obstruction, Obstruction};
use cayley_drg::catalog::{run_cases, select_cases, RunOptions};
use cayley_drg::graphs::{graph6, Graph, GraphMetrics};
use cayley_drg::spectral::{ia_eigenvalues, intersection_array, report_value, spectrum, srg_parameters};
use cayley_drg::structure::{connection_structure, krausz};
use cayley_drg::symmetry::{automorphism_search_until, regular_subgroup_search, RegularSearchOutcome};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use source::Source;

/// Largest graph `is-cayley` accepts.
const MAX_IS_CAYLEY: usize = 700;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "cayley-drg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and print it.
    Construct {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "graph6")]
        out: OutFormat,
    },
    /// Metrics, strong/distance regularity, spectrum and line-graph structure.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Compute the clique number even above 100 vertices.
        #[arg(long)]
        clique: bool,
    },
    /// Decide whether a graph is a Cayley graph.
    IsCayley {
        #[command(flatten)]
        source: Source,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
    /// Krausz decomposition, and the connection-set structure for a Cayley
    /// construction.
    Decompose {
        #[command(flatten)]
        source: Source,
        /// `d` for the connection-set conditions; defaults to the diameter.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run the verification catalog.
    VerifyPaper {
        /// Glob over case names, e.g. `chang_*`.
        #[arg(long = "case")]
        case: Option<String>,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
        parallel: u32,
        /// Also run optional, time-boxed expectations.
        #[arg(long)]
        extended: bool,
        /// Report `runtime_ms` as 0 so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn print(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("serializable"));
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let mut out = json!({"n": g.n(), "edges": edges});
    if let Some(labels) = g.labels() {
        out["labels"] = json!(labels);
    }
    out
}

fn analyze(source: &Source, clique: bool) -> Result<u8> {
    let g = source.load()?.graph;
    let metrics = GraphMetrics::compute(&g, clique);
    let spec = spectrum(&g);
    let ia = if metrics.connected { intersection_array(&g)? } else { None };
    let line_graph = match krausz(&g) {
        Ok(Some(d)) => json!(d.summary()),
        Ok(None) => json!(false),
        Err(e) => json!({"error": e.to_string()}),
    };
    print(&json!({
        "metrics": metrics,
        "srg": srg_parameters(&g),
        "intersection_array": ia.as_ref().map(|a| json!({"b": a.b, "c": a.c})),
        "ia_eigenvalues": ia.as_ref().map(|a| ia_eigenvalues(a).into_iter().map(report_value).collect::<Vec<_>>()),
        "spectrum": spec,
        "least_eigenvalue": (g.n() > 0).then(|| report_value(spec.min())),
        "line_graph": line_graph,
    }));
    Ok(0)
}

fn obstruction(g: &Graph) -> Option<Obstruction> {
    let d = krausz(g).ok()??;
    line_graph_abelian_obstruction(&d.root).ok()
}

fn is_cayley(source: &Source, budget: f64) -> Result<u8> {
    if !(budget.is_finite() && budget >= 0.0) {
        bail!("--budget must be a nonnegative number of seconds");
    }
    let g = source.load()?.graph;
    if g.n() > MAX_IS_CAYLEY {
        bail!(
            "{} vertices: is-cayley accepts at most {MAX_IS_CAYLEY}; the automorphism and \
             regular-subgroup searches are not practical beyond that",
            g.n()
        );
    }
    let deadline = Instant::now() + Duration::from_secs_f64(budget);
    let obs = obstruction(&g);
    let obs_json = obs.as_ref().map(|o| json!(o));
    let proved_by_obstruction = matches!(obs, Some(Obstruction::NotCayley { .. }));
    let mut out = json!({"n": g.n(), "obstruction": obs_json});
    let status = match automorphism_search_until(&g, Some(deadline)) {
        None => Err("automorphism search exceeded the budget".to_string()),
        Some(aut) => {
            out["aut_order"] = json!(aut.group.order().to_string());
            let left = deadline.saturating_duration_since(Instant::now());
            let search = regular_subgroup_search(&g, &aut.group, left);
            out["search_nodes"] = json!(search.nodes);
            match search.outcome {
                RegularSearchOutcome::Found(cert) => {
                    out["certificate"] = cert.to_json();
                    Ok("cayley")
                }
                RegularSearchOutcome::None => {
                    out["method"] = json!("exhaustive regular-subgroup search");
                    out["proof"] = json!(search.reason);
                    Ok("not_cayley")
                }
                RegularSearchOutcome::Timeout(reason) => Err(reason),
            }
        }
    };
    let code = match status {
        Ok(s) => {
            out["status"] = json!(s);
            0
        }
        Err(_) if proved_by_obstruction => {
            out["status"] = json!("not_cayley");
            out["method"] = json!("abelian obstruction on the Krausz root");
            0
        }
        Err(reason) => {
            out["status"] = json!("timeout");
            out["reason"] = json!(reason);
            EXIT_TIMEOUT
        }
    };
    print(&out);
    Ok(code)
}

fn decompose(source: &Source, d: Option<usize>) -> Result<u8> {
    let loaded = source.load()?;
    let g = &loaded.graph;
    let mut out = json!({"n": g.n()});
    match krausz(g)? {
        Some(dec) => {
            out["line_graph"] = json!(true);
            out["summary"] = json!(dec.summary());
            out["root_graph6"] = json!(graph6::encode(&dec.root));
            out["cliques"] = json!(dec.cliques);
            out["embedding"] = json!(dec.embedding);
        }
        None => out["line_graph"] = json!(false),
    }
    if let Some((group, set)) = &loaded.construction {
        let d = match d {
            Some(d) => d,
            None => GraphMetrics::compute(g, false).diameter.finite().unwrap_or(0),
        };
        out["connection_structure"] = json!(connection_structure(group, set, d)?);
    }
    print(&out);
    Ok(0)
}

fn verify_paper(case: Option<&str>, parallel: u32, extended: bool, no_timing: bool) -> Result<u8> {
    let cases = select_cases(case.unwrap_or("*"))?;
    let opts = RunOptions { extended, record_runtime: !no_timing };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(parallel as usize).build()?;
    let summary = pool.install(|| run_cases(&cases, parallel > 1, &opts));
    print(&json!(summary));
    let hard_failures = summary.reports.iter().filter(|r| !r.pass && !r.timed_out()).count();
    Ok(if hard_failures > 0 {
        EXIT_FAIL
    } else if summary.timed_out > 0 {
        EXIT_TIMEOUT
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<u8> {
    let single = || rayon::ThreadPoolBuilder::new().num_threads(1).build();
    match cli.command {
        Command::Construct { source, out } => {
            let g = source.load()?.graph;
            match out {
                OutFormat::Graph6 => emit(&graph6::encode(&g)),
                OutFormat::Json => print(&graph_json(&g)),
            }
            Ok(0)
        }
        Command::Analyze { source, clique } => single()?.install(|| analyze(&source, clique)),
        Command::IsCayley { source, budget } => single()?.install(|| is_cayley(&source, budget)),
        Command::Decompose { source, d } => single()?.install(|| decompose(&source, d)),
        Command::VerifyPaper { case, parallel, extended, no_timing } => {
            verify_paper(case.as_deref(), parallel, extended, no_timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
