//! Command-line interface: family generation, invariant and bondage
//! reports, the statement suite runner, and the 3-SAT instance builder.
//!
//! Exit codes: 0 on success (and all-pass for `check`), 1 when the suite
//! reports a failing statement, 2 on usage or input errors.

use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use troman::bondage::{self, BondageVariant};
use troman::families::{self, FamilySpec};
use troman::graph::Graph;
use troman::harness::{run_suite, CorpusSpec, SuiteConfig};
use troman::invariants;
use troman::reduction::{self, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "troman",
    about = "Exact total Roman domination and bondage toolkit for small graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// total Roman bondage
    Tr,
    /// total bondage
    T,
    /// Roman bondage
    R,
    /// quasi-total Roman bondage
    Qtr,
    /// domination bondage
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family member (e.g. `spider:2,4`, `corona:B_`).
    Gen {
        /// Family spec: complete:N, path:N, cycle:N, wheel:LEN, kpq:P,Q,
        /// star:T, bistar:R,S, spider:K,T, broom:T,D, doublebroom:T,D,D2,
        /// corona:GRAPH6, familyG:K1,K2, familyH:R,A,B
        spec: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
        /// Also print the vertex role map as JSON on stderr.
        #[arg(long)]
        roles: bool,
    },
    /// Compute all six domination-type invariants with witnesses.
    Invariants {
        /// Graph input: a file path, `-` for stdin, or a graph6 literal.
        /// Inputs may hold several graphs, one per line.
        graph: String,
    },
    /// Compute a bondage number with witness or infinity certificate.
    Bondage {
        /// Graph input: a file path, `-` for stdin, or a graph6 literal.
        graph: String,
        #[arg(long, value_enum, default_value = "tr")]
        which: Which,
    },
    /// Run the statement suite over a corpus and emit a JSON report.
    Check {
        /// Corpus: `all:N`, `random:COUNT,N,PROB,SEED`, `families`,
        /// or `file:PATH` (graph6 lines).
        #[arg(long, default_value = "all:6")]
        corpus: String,
        /// Comma-separated theorem ids (e.g. `T1,T5`); default: all.
        #[arg(long)]
        theorems: Option<String>,
        /// Permit exhaustive corpora beyond 6 vertices.
        #[arg(long)]
        slow: bool,
        /// Worker threads (default: TROMAN_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Build the bondage instance of a 3-CNF formula.
    Reduce {
        /// DIMACS CNF file, or `-` for stdin.
        cnf: String,
        /// Verify the construction claims with the exact solver.
        #[arg(long)]
        verify: bool,
        /// Print the built graph as graph6.
        #[arg(long)]
        emit_graph6: bool,
        /// Order cap for claim verification.
        #[arg(long, default_value_t = 34)]
        max_order: usize,
    },
}

fn read_input(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    } else {
        // not a file: treat as a graph6 literal
        Ok(arg.to_string())
    }
}

/// Parses each nonempty line as a graph: edge-list text when the first
/// line looks like an `n m` header, graph6 otherwise.
fn parse_graphs(text: &str) -> Result<Vec<Graph>, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err("no graph in input".into());
    }
    let looks_like_edge_list = {
        let mut it = lines[0].split_whitespace();
        matches!(
            (
                it.next().map(|t| t.parse::<usize>().is_ok()),
                it.next().map(|t| t.parse::<usize>().is_ok()),
                it.next()
            ),
            (Some(true), Some(true), None)
        )
    };
    if looks_like_edge_list {
        let g = Graph::parse_edge_list_text(text).map_err(|e| e.to_string())?;
        return Ok(vec![g]);
    }
    lines
        .iter()
        .map(|l| Graph::from_graph6(l).map_err(|e| format!("{l}: {e}")))
        .collect()
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            spec,
            format,
            roles,
        } => {
            let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
            let generated = families::generate(&spec).map_err(|e| format!("{e}"))?;
            match format {
                OutputFormat::Graph6 => println!("{}", generated.graph.to_graph6()),
                OutputFormat::EdgeList => print!("{}", generated.graph.to_edge_list_text()),
            }
            if roles {
                let map: Vec<serde_json::Value> = generated
                    .roles
                    .iter()
                    .map(|(v, r)| serde_json::json!({ "vertex": v, "role": r }))
                    .collect();
                eprintln!("{}", serde_json::to_string(&map).unwrap());
            }
            Ok(0)
        }
        Command::Invariants { graph } => {
            let text = read_input(&graph)?;
            for g in parse_graphs(&text)? {
                let report = invariants::invariant_report(&g).map_err(|e| format!("{e}"))?;
                println!("{}", serde_json::to_string(&report).unwrap());
            }
            Ok(0)
        }
        Command::Bondage { graph, which } => {
            let text = read_input(&graph)?;
            let variant = match which {
                Which::Tr => BondageVariant::TotalRoman,
                Which::T => BondageVariant::TotalDomination,
                Which::R => BondageVariant::Roman,
                Which::Qtr => BondageVariant::QuasiTotalRoman,
                Which::Plain => BondageVariant::Domination,
            };
            for g in parse_graphs(&text)? {
                let result = if variant == BondageVariant::TotalRoman {
                    bondage::total_roman_bondage(&g)
                } else {
                    bondage::bondage_number(&g, variant)
                }
                .map_err(|e| format!("{e}"))?;
                println!("{}", serde_json::to_string(&result).unwrap());
            }
            Ok(0)
        }
        Command::Check {
            corpus,
            theorems,
            slow,
            threads,
        } => {
            let corpus: CorpusSpec = corpus.parse().map_err(|e| format!("{e}"))?;
            if let CorpusSpec::AllConnected { max_n } = corpus {
                if max_n > 6 && !slow {
                    return Err(format!(
                        "exhaustive corpora beyond 6 vertices take a while; \
                         pass --slow to run all:{max_n}"
                    ));
                }
            }
            let cfg = SuiteConfig {
                corpus,
                theorems: theorems.map(|t| t.split(',').map(|s| s.trim().to_string()).collect()),
                threads,
            };
            let report = run_suite(&cfg).map_err(|e| format!("{e}"))?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(if report.all_pass { 0 } else { 1 })
        }
        Command::Reduce {
            cnf,
            verify,
            emit_graph6,
            max_order,
        } => {
            let text = read_input(&cnf)?;
            let formula = reduction::parse_dimacs(&text).map_err(|e| format!("{e}"))?;
            let artifact = reduction::build(&formula).map_err(|e| format!("{e}"))?;
            if emit_graph6 {
                println!("{}", artifact.graph.to_graph6());
            }
            if verify {
                let opts = VerifyOptions {
                    order_cap: max_order,
                    claim2_order_cap: max_order,
                };
                let report =
                    reduction::verify_claims(&formula, &opts).map_err(|e| format!("{e}"))?;
                println!("{}", serde_json::to_string(&report).unwrap());
                return Ok(if report.all_hold() { 0 } else { 1 });
            }
            if !emit_graph6 {
                println!(
                    "{}",
                    serde_json::json!({
                        "n_vars": formula.num_vars(),
                        "m_clauses": formula.num_clauses(),
                        "order": artifact.graph.n(),
                        "size": artifact.graph.m(),
                    })
                );
            }
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
