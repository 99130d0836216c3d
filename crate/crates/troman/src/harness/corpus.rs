//! Corpus generation: exhaustive labeled enumeration, seeded random graphs
//! and family batteries.

use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;

/// Where the corpus graphs come from.
///
/// `AllConnected` enumerates every labeled graph on `2..=max_n` vertices
/// (deduplicated by exact labeled equality, which the enumeration gives for
/// free) and keeps the connected ones. `Random` draws seed-deterministic
/// graphs and keeps the isolate-free ones; disconnected draws are kept on
/// purpose so component-summing paths get exercised.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    AllConnected {
        max_n: usize,
    },
    Random {
        count: usize,
        n: usize,
        edge_prob: f64,
        seed: u64,
    },
    Families(Vec<FamilySpec>),
    FromFile(PathBuf),
}

impl std::fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CorpusSpec::AllConnected { max_n } => write!(f, "all:{max_n}"),
            CorpusSpec::Random {
                count,
                n,
                edge_prob,
                seed,
            } => {
                write!(f, "random:{count},{n},{edge_prob},{seed}")
            }
            CorpusSpec::Families(specs) => {
                if *specs == standard_family_battery() {
                    write!(f, "families")
                } else {
                    write!(f, "families[{}]", specs.len())
                }
            }
            CorpusSpec::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "families" {
            return Ok(CorpusSpec::Families(standard_family_battery()));
        }
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("bad corpus spec `{s}`")))?;
        match name {
            "all" => {
                let max_n = args
                    .parse()
                    .map_err(|_| Error::InvalidFamily(format!("bad corpus size `{args}`")))?;
                Ok(CorpusSpec::AllConnected { max_n })
            }
            "random" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::InvalidFamily(
                        "random corpus takes count,n,edge_prob,seed".into(),
                    ));
                }
                Ok(CorpusSpec::Random {
                    count: parts[0]
                        .parse()
                        .map_err(|_| Error::InvalidFamily(format!("bad count `{}`", parts[0])))?,
                    n: parts[1]
                        .parse()
                        .map_err(|_| Error::InvalidFamily(format!("bad n `{}`", parts[1])))?,
                    edge_prob: parts[2].parse().map_err(|_| {
                        Error::InvalidFamily(format!("bad probability `{}`", parts[2]))
                    })?,
                    seed: parts[3]
                        .parse()
                        .map_err(|_| Error::InvalidFamily(format!("bad seed `{}`", parts[3])))?,
                })
            }
            "file" => Ok(CorpusSpec::FromFile(PathBuf::from(args))),
            other => Err(Error::InvalidFamily(format!(
                "unknown corpus kind `{other}`"
            ))),
        }
    }
}

/// One graph of the corpus, tagged with its family spec when it came from a
/// generator.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
    pub label: String,
}

/// SplitMix64: the fixed, documented corpus PRNG. Any implementation in any
/// language seeded identically reproduces the same stream, hence the same
/// graphs.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Seed-deterministic random graph: one draw per vertex pair `(i, j)`,
/// `i < j`, in lexicographic order; the edge is present when the draw is
/// below `edge_prob`.
pub fn random_graph(rng: &mut SplitMix64, n: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < edge_prob {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("random pairs are always in range")
}

/// Materializes a corpus. Every item is isolate-free; `AllConnected` items
/// are additionally connected.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusItem>> {
    match spec {
        CorpusSpec::AllConnected { max_n } => {
            if *max_n > 8 {
                return Err(Error::CapExceeded {
                    what: "exhaustive labeled enumeration",
                    n: *max_n,
                    cap: 8,
                });
            }
            let mut out = Vec::new();
            for n in 2..=*max_n {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect();
                for mask in 0u64..1 << pairs.len() {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let g = Graph::from_edge_list(n, &edges)?;
                    if g.is_connected() {
                        out.push(CorpusItem {
                            label: format!("all{n}#{mask}"),
                            graph: g,
                            family: None,
                        });
                    }
                }
            }
            Ok(out)
        }
        CorpusSpec::Random {
            count,
            n,
            edge_prob,
            seed,
        } => {
            let mut rng = SplitMix64(*seed);
            let mut out = Vec::new();
            let mut attempt = 0usize;
            while out.len() < *count {
                let g = random_graph(&mut rng, *n, *edge_prob);
                attempt += 1;
                if attempt > 1000 * (*count).max(1) {
                    return Err(Error::InvalidFamily(
                        "random corpus rejection loop is not terminating; raise edge_prob".into(),
                    ));
                }
                if !g.has_isolated_vertex() {
                    out.push(CorpusItem {
                        label: format!("random{n}#{}", out.len()),
                        graph: g,
                        family: None,
                    });
                }
            }
            Ok(out)
        }
        CorpusSpec::Families(specs) => specs
            .iter()
            .map(|s| {
                Ok(CorpusItem {
                    graph: generate(s)?.graph,
                    family: Some(s.clone()),
                    label: s.to_string(),
                })
            })
            .collect(),
        CorpusSpec::FromFile(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Graph6(format!("cannot read {}: {e}", path.display())))?;
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let g = Graph::from_graph6(line)?;
                if g.has_isolated_vertex() {
                    return Err(Error::IsolatedVertex);
                }
                out.push(CorpusItem {
                    graph: g,
                    family: None,
                    label: format!("{}#{}", path.display(), i + 1),
                });
            }
            Ok(out)
        }
    }
}

/// The standard family battery: every closed-form case the suite asserts.
pub fn standard_family_battery() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 3..=8 {
        specs.push(FamilySpec::Complete(n));
    }
    for (p, q) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        specs.push(FamilySpec::CompleteBipartite(p, q));
    }
    for len in 3..=7 {
        specs.push(FamilySpec::Wheel(len));
    }
    for n in 3..=9 {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Cycle(n));
    }
    for t in 2..=5 {
        specs.push(FamilySpec::Star(t));
    }
    for (k, t) in [
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
        (2, 5),
    ] {
        specs.push(FamilySpec::Spider(k, t));
    }
    for (t, d) in [(3, 2), (4, 3), (3, 3)] {
        specs.push(FamilySpec::Broom(t, d));
    }
    for (t, d, d2) in [(3, 2, 2), (4, 2, 3)] {
        specs.push(FamilySpec::DoubleBroom(t, d, d2));
    }
    for (r, s) in [(1, 1), (2, 2), (2, 3), (1, 4)] {
        specs.push(FamilySpec::Bistar(r, s));
    }
    for base in [
        FamilySpec::Complete(2),
        FamilySpec::Complete(3),
        FamilySpec::Path(3),
        FamilySpec::Cycle(4),
    ] {
        specs.push(FamilySpec::Corona(generate(&base).unwrap().graph));
    }
    specs.push(FamilySpec::FamilyG(1, 0));
    specs.push(FamilySpec::FamilyG(1, 1));
    specs.push(FamilySpec::FamilyH(0, 1, 2));
    specs.push(FamilySpec::FamilyH(1, 1, 2));
    specs
}
