//! Corpus runner: evaluates the statement registry over a corpus, in
//! parallel, with deterministic reports.

pub mod corpus;
pub mod ctx;
pub mod theorems;

use rayon::prelude::*;
use serde::Serialize;

pub use corpus::{build_corpus, standard_family_battery, CorpusItem, CorpusSpec, SplitMix64};
pub use theorems::{registry, theorem_ids, Outcome, TheoremDef};

type PerGraphCheck = fn(&GraphCtx) -> Outcome;

use crate::error::{Error, Result};
use ctx::GraphCtx;
use theorems::CheckKind;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "TROMAN_THREADS";

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub corpus: CorpusSpec,
    /// `None` runs every registered statement.
    pub theorems: Option<Vec<String>>,
    /// `None` falls back to `TROMAN_THREADS`, then to the rayon default.
    pub threads: Option<usize>,
}

impl SuiteConfig {
    pub fn new(corpus: CorpusSpec) -> Self {
        SuiteConfig {
            corpus,
            theorems: None,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    pub exhaustive_bondage_m: usize,
    pub optimal_functions_n: usize,
    pub oracle_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremResult {
    pub id: String,
    pub name: String,
    pub status: Status,
    pub checked: u64,
    pub vacuous: u64,
    pub skipped: u64,
    pub failed: u64,
    /// graph6 of the first failing graph plus the failure detail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub corpus: String,
    pub corpus_size: usize,
    pub threads: usize,
    pub caps: Caps,
    pub results: Vec<TheoremResult>,
    pub all_pass: bool,
}

impl SuiteReport {
    pub fn result(&self, id: &str) -> Option<&TheoremResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

fn thread_count(cfg: &SuiteConfig) -> usize {
    cfg.threads
        .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|s| s.parse().ok()))
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        })
        .max(1)
}

/// Runs the selected statements over the corpus. Corpus items are processed
/// concurrently; results are merged in corpus order, so identical inputs
/// produce byte-identical reports.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let selected: Vec<&TheoremDef> = match &cfg.theorems {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                let def = registry()
                    .iter()
                    .find(|t| t.id == id)
                    .ok_or_else(|| Error::InvalidFamily(format!("unknown theorem id `{id}`")))?;
                out.push(def);
            }
            out
        }
    };
    let items = build_corpus(&cfg.corpus)?;
    let threads = thread_count(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidFamily(format!("thread pool: {e}")))?;

    let per_graph: Vec<(usize, PerGraphCheck)> = selected
        .iter()
        .enumerate()
        .filter_map(|(i, def)| match def.kind {
            CheckKind::PerGraph(f) => Some((i, f)),
            CheckKind::Global(_) => None,
        })
        .collect();

    // outcome matrix in corpus order
    let rows: Vec<Vec<(usize, Outcome)>> = pool.install(|| {
        items
            .par_iter()
            .map(|item| {
                let ctx = GraphCtx::new(item);
                per_graph
                    .iter()
                    .map(|&(i, f)| (i, f(&ctx)))
                    .collect::<Vec<_>>()
            })
            .collect()
    });

    let mut results: Vec<TheoremResult> = selected
        .iter()
        .map(|def| TheoremResult {
            id: def.id.to_string(),
            name: def.name.to_string(),
            status: Status::Vacuous,
            checked: 0,
            vacuous: 0,
            skipped: 0,
            failed: 0,
            counterexample: None,
        })
        .collect();

    for (item, row) in items.iter().zip(&rows) {
        for (i, outcome) in row {
            let r = &mut results[*i];
            match outcome {
                Outcome::Pass => r.checked += 1,
                Outcome::Vacuous => r.vacuous += 1,
                Outcome::Skipped => r.skipped += 1,
                Outcome::Fail(detail) => {
                    r.checked += 1;
                    r.failed += 1;
                    if r.counterexample.is_none() {
                        r.counterexample = Some(format!(
                            "{} [{}]: {detail}",
                            item.graph.to_graph6(),
                            item.label
                        ));
                    }
                }
            }
        }
    }

    for (i, def) in selected.iter().enumerate() {
        if let CheckKind::Global(f) = def.kind {
            let (checked, failed, counterexample) = f();
            let r = &mut results[i];
            r.checked = checked;
            r.failed = failed;
            r.counterexample = counterexample;
        }
    }

    for r in &mut results {
        r.status = if r.failed > 0 {
            Status::Fail
        } else if r.checked > 0 {
            Status::Pass
        } else {
            Status::Vacuous
        };
    }

    let all_pass = results.iter().all(|r| r.status != Status::Fail);
    Ok(SuiteReport {
        corpus: cfg.corpus.to_string(),
        corpus_size: items.len(),
        threads,
        caps: Caps {
            exhaustive_bondage_m: theorems::EXHAUSTIVE_BONDAGE_M_CAP,
            optimal_functions_n: theorems::OPTIMAL_FUNCTIONS_N_CAP,
            oracle_n: theorems::ORACLE_N_CAP,
        },
        results,
        all_pass,
    })
}
