//! Transformation from 3-SAT to total-Roman-bondage instances, plus the
//! verification harness for the three construction claims on desk-scale
//! formulas.
//!
//! For a formula with `n` variables and `m` clauses the built graph has
//! order `7n + m + 4` and size `10n + 4m + 5`: one 7-vertex gadget per
//! variable, one vertex per clause joined to its three literal vertices,
//! and a 5-edge anchor subgraph on `{o, p, q, r}` whose vertex `r` is
//! joined to every clause vertex.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::invariants::{roman_weight_leq, total_roman_domination_value, RomanKind};

/// Largest variable count accepted by [`sat_brute_force`].
pub const SAT_CAP: usize = 24;

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

/// A literal: variable index (0-based) plus polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

/// A 3-CNF formula. Every clause has exactly three literals over three
/// distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::Dimacs(format!(
                        "clause {} references variable {} but only {} are declared",
                        j + 1,
                        lit.var + 1,
                        num_vars
                    )));
                }
            }
            let [a, b, c] = clause;
            if a.var == b.var || a.var == c.var || b.var == c.var {
                return Err(Error::Dimacs(format!(
                    "clause {} repeats a variable; three distinct variables are required",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    fn satisfied_by(&self, assignment: u32) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|lit| (assignment >> lit.var & 1 == 1) == lit.positive)
        })
    }
}

/// Parses DIMACS CNF text. Comment lines start with `c`; the header is
/// `p cnf <vars> <clauses>`; clauses are zero-terminated integer lists and
/// may span lines. Every clause must have width exactly 3.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut ints: Vec<i64> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::Dimacs("duplicate header".into()));
            }
            let mut it = rest.split_whitespace();
            if it.next() != Some("cnf") {
                return Err(Error::Dimacs(
                    "header must be `p cnf <vars> <clauses>`".into(),
                ));
            }
            let nv = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Dimacs("bad variable count in header".into()))?;
            let nc = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Dimacs("bad clause count in header".into()))?;
            header = Some((nv, nc));
            continue;
        }
        for tok in line.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Dimacs(format!("bad token `{tok}`")))?;
            ints.push(v);
        }
    }
    let (num_vars, num_clauses) =
        header.ok_or_else(|| Error::Dimacs("missing `p cnf` header".into()))?;

    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for v in ints {
        if v == 0 {
            if current.len() != 3 {
                return Err(Error::Dimacs(format!(
                    "clause {} has width {}, expected exactly 3",
                    clauses.len() + 1,
                    current.len()
                )));
            }
            clauses.push([current[0], current[1], current[2]]);
            current.clear();
        } else {
            let var = v.unsigned_abs() as usize;
            if var > num_vars {
                return Err(Error::Dimacs(format!(
                    "literal {v} exceeds the declared {num_vars} variables"
                )));
            }
            current.push(Literal {
                var: var - 1,
                positive: v > 0,
            });
        }
    }
    if !current.is_empty() {
        return Err(Error::Dimacs("unterminated clause".into()));
    }
    if clauses.len() != num_clauses {
        return Err(Error::Dimacs(format!(
            "header declares {num_clauses} clauses but {} were given",
            clauses.len()
        )));
    }
    CnfFormula::new(num_vars, clauses)
}

/// Exhaustive satisfiability check over all `2^n` assignments.
pub fn sat_brute_force(f: &CnfFormula) -> Result<bool> {
    if f.num_vars > SAT_CAP {
        return Err(Error::CapExceeded {
            what: "satisfiability enumeration",
            n: f.num_vars,
            cap: SAT_CAP,
        });
    }
    Ok((0u32..1 << f.num_vars).any(|a| f.satisfied_by(a)))
}

// ---------------------------------------------------------------------------
// The construction
// ---------------------------------------------------------------------------

/// Structural role of a vertex in the built graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", content = "index", rename_all = "snake_case")]
pub enum Role {
    /// Vertex selected when the variable is assigned true.
    PositiveLiteral(usize),
    /// Degree-2 vertex between the two literal vertices.
    LiteralLink(usize),
    /// Vertex selected when the variable is assigned false.
    NegativeLiteral(usize),
    /// First of the two vertices adjacent to both literals.
    GuardA(usize),
    /// Degree-2 vertex between the two guards.
    GuardMid(usize),
    /// Second vertex adjacent to both literals.
    GuardB(usize),
    /// Apex adjacent to both guards.
    GuardTop(usize),
    /// One vertex per clause, joined to its three literal vertices.
    Clause(usize),
    /// Triangle vertex of the anchor subgraph.
    TriangleO,
    /// Triangle vertex adjacent to the clause anchor.
    TriangleP,
    /// Triangle vertex adjacent to the clause anchor.
    TriangleQ,
    /// Apex joined to every clause vertex.
    ClauseAnchor,
}

/// The built graph together with its vertex-role map.
#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub graph: Graph,
    /// `roles[v]` is the role of vertex `v`.
    pub roles: Vec<Role>,
    pub n_vars: usize,
    pub m_clauses: usize,
}

impl ReductionArtifact {
    pub fn positive_literal(&self, i: usize) -> usize {
        7 * i
    }
    pub fn literal_link(&self, i: usize) -> usize {
        7 * i + 1
    }
    pub fn negative_literal(&self, i: usize) -> usize {
        7 * i + 2
    }
    pub fn guard_a(&self, i: usize) -> usize {
        7 * i + 3
    }
    pub fn guard_mid(&self, i: usize) -> usize {
        7 * i + 4
    }
    pub fn guard_b(&self, i: usize) -> usize {
        7 * i + 5
    }
    pub fn guard_top(&self, i: usize) -> usize {
        7 * i + 6
    }
    pub fn clause_vertex(&self, j: usize) -> usize {
        7 * self.n_vars + j
    }
    pub fn triangle_o(&self) -> usize {
        7 * self.n_vars + self.m_clauses
    }
    pub fn triangle_p(&self) -> usize {
        self.triangle_o() + 1
    }
    pub fn triangle_q(&self) -> usize {
        self.triangle_o() + 2
    }
    pub fn clause_anchor(&self) -> usize {
        self.triangle_o() + 3
    }
}

/// Builds the bondage instance for a formula. Vertex numbering: gadget `i`
/// occupies `7i..7i+7` in role order, then the clause vertices, then
/// `o, p, q, r`.
pub fn build(f: &CnfFormula) -> Result<ReductionArtifact> {
    let n = f.num_vars;
    let m = f.num_clauses();
    let order = 7 * n + m + 4;
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices(order));
    }
    let mut edges = Vec::with_capacity(10 * n + 4 * m + 5);
    let mut roles = Vec::with_capacity(order);

    for i in 0..n {
        let base = 7 * i;
        let (u, t, ub, a, s, b, d) = (
            base,
            base + 1,
            base + 2,
            base + 3,
            base + 4,
            base + 5,
            base + 6,
        );
        roles.extend([
            Role::PositiveLiteral(i),
            Role::LiteralLink(i),
            Role::NegativeLiteral(i),
            Role::GuardA(i),
            Role::GuardMid(i),
            Role::GuardB(i),
            Role::GuardTop(i),
        ]);
        edges.extend([
            (u, t),
            (t, ub),
            (u, a),
            (u, b),
            (ub, a),
            (ub, b),
            (a, s),
            (s, b),
            (a, d),
            (b, d),
        ]);
    }

    let clause_base = 7 * n;
    let o = clause_base + m;
    let p = o + 1;
    let q = o + 2;
    let r = o + 3;
    for (j, clause) in f.clauses.iter().enumerate() {
        let cj = clause_base + j;
        roles.push(Role::Clause(j));
        for lit in clause {
            let target = if lit.positive {
                7 * lit.var
            } else {
                7 * lit.var + 2
            };
            edges.push((cj, target));
        }
        edges.push((r, cj));
    }
    roles.extend([
        Role::TriangleO,
        Role::TriangleP,
        Role::TriangleQ,
        Role::ClauseAnchor,
    ]);
    edges.extend([(p, q), (p, o), (o, q), (q, r), (r, p)]);

    let graph = Graph::from_edge_list(order, &edges)?;
    assert_eq!(graph.n(), 7 * n + m + 4, "order identity violated");
    assert_eq!(graph.m(), 10 * n + 4 * m + 5, "size identity violated");
    Ok(ReductionArtifact {
        graph,
        roles,
        n_vars: n,
        m_clauses: m,
    })
}

// ---------------------------------------------------------------------------
// Claim verification
// ---------------------------------------------------------------------------

/// Caps for [`verify_claims`]. Instances above `order_cap` are left
/// unchecked; the per-edge upper-bound sweep (the most expensive part) has
/// its own, lower cap.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub order_cap: usize,
    pub claim2_order_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order_cap: 34,
            claim2_order_cap: 26,
        }
    }
}

/// Verification outcome. `claim1`/`claim2`/`claim3` are `None` when the
/// instance exceeded the corresponding cap (unchecked), otherwise the truth
/// of the statement:
///
/// - claim 1: the weight hits the lower band `4n + 3` iff the formula is
///   satisfiable;
/// - claim 2: every single-edge removal keeps the weight at most `4n + 4`;
/// - claim 3: the weight hits `4n + 3` iff one edge removal raises it.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub n_vars: usize,
    pub m_clauses: usize,
    pub order: usize,
    pub size: usize,
    #[serde(rename = "gamma_tR")]
    pub gamma_tr: Option<u32>,
    pub sat: bool,
    /// The computed weight always lands in `{4n+3, 4n+4}`.
    pub weight_band: Option<bool>,
    pub claim1: Option<bool>,
    pub claim2: Option<bool>,
    pub claim3: Option<bool>,
    /// `Some(1)` when a single removal raises the weight; `None` otherwise
    /// (the exact bondage value beyond 1 is not computed here).
    #[serde(rename = "b_tR")]
    pub b_tr: Option<u32>,
    /// graph6 dump of the instance whenever some claim is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl ClaimReport {
    pub fn all_hold(&self) -> bool {
        self.claim1 != Some(false)
            && self.claim2 != Some(false)
            && self.claim3 != Some(false)
            && self.weight_band != Some(false)
    }
}

/// Builds the instance and checks the construction claims with the exact
/// solver. Per-edge work runs in parallel.
pub fn verify_claims(f: &CnfFormula, opts: &VerifyOptions) -> Result<ClaimReport> {
    let artifact = build(f)?;
    let g = &artifact.graph;
    let n = f.num_vars as u32;
    let sat = sat_brute_force(f)?;
    let lower = 4 * n + 3;

    let mut report = ClaimReport {
        n_vars: f.num_vars,
        m_clauses: f.num_clauses(),
        order: g.n(),
        size: g.m(),
        gamma_tr: None,
        sat,
        weight_band: None,
        claim1: None,
        claim2: None,
        claim3: None,
        b_tr: None,
        counterexample: None,
    };
    if g.n() > opts.order_cap {
        return Ok(report);
    }

    let gamma = total_roman_domination_value(g)?;
    report.gamma_tr = Some(gamma);
    report.weight_band = Some(gamma == lower || gamma == lower + 1);
    report.claim1 = Some((gamma == lower) == sat);

    // single-edge removals never isolate anything here: min degree is 2
    debug_assert!(g.min_degree() >= 2);

    // put the anchor-triangle edge first: it is the canonical raise
    let pq = (artifact.triangle_p(), artifact.triangle_q());
    let mut edges = g.edges();
    edges.sort_by_key(|&e| (e != pq, e));

    if g.n() <= opts.claim2_order_cap {
        let ok = edges.par_iter().all(|&(u, v)| {
            let h = g.remove_edge(u, v).unwrap();
            roman_weight_leq(h.n(), h.adj_slice(), RomanKind::Total, lower + 1)
        });
        report.claim2 = Some(ok);
    }

    let single_edge_raises = edges.par_iter().any(|&(u, v)| {
        let h = g.remove_edge(u, v).unwrap();
        !roman_weight_leq(h.n(), h.adj_slice(), RomanKind::Total, gamma)
    });
    if single_edge_raises {
        report.b_tr = Some(1);
    }
    report.claim3 = Some(single_edge_raises == (gamma == lower));

    if !report.all_hold() {
        report.counterexample = Some(g.to_graph6());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(v: i64) -> Literal {
        Literal {
            var: v.unsigned_abs() as usize - 1,
            positive: v > 0,
        }
    }

    fn formula(num_vars: usize, clauses: &[[i64; 3]]) -> CnfFormula {
        CnfFormula::new(
            num_vars,
            clauses
                .iter()
                .map(|&[a, b, c]| [lit(a), lit(b), lit(c)])
                .collect(),
        )
        .unwrap()
    }

    /// All eight sign patterns over three variables: unsatisfiable, and the
    /// smallest possible unsatisfiable width-3 formula.
    fn all_patterns() -> CnfFormula {
        let mut clauses = Vec::new();
        for bits in 0..8i64 {
            clauses.push([
                if bits & 1 == 0 { 1 } else { -1 },
                if bits & 2 == 0 { 2 } else { -2 },
                if bits & 4 == 0 { 3 } else { -3 },
            ]);
        }
        formula(3, &clauses)
    }

    #[test]
    fn dimacs_parsing() {
        let f = parse_dimacs("p cnf 3 1\n1 2 -3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.num_clauses(), 1);
        assert_eq!(f.clauses()[0][2], lit(-3));

        let f = parse_dimacs("c a comment\np cnf 4 2\n1 2 -3 0\n2 -3 -4 0\n").unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (4, 2));

        // clauses may span lines
        let f = parse_dimacs("p cnf 3 1\n1 2\n-3 0\n").unwrap();
        assert_eq!(f.num_clauses(), 1);

        assert!(parse_dimacs("p cnf 2 1\n1 2 0\n").is_err()); // width 2
        assert!(parse_dimacs("p cnf 3 1\n1 2 4 0\n").is_err()); // var out of range
        assert!(parse_dimacs("1 2 3 0\n").is_err()); // missing header
        assert!(parse_dimacs("p cnf 3 2\n1 2 3 0\n").is_err()); // count mismatch
        assert!(parse_dimacs("p cnf 3 1\n1 2 3\n").is_err()); // unterminated
        assert!(parse_dimacs("p cnf 3 1\n1 -1 2 0\n").is_err()); // repeated var
    }

    #[test]
    fn brute_force_sat() {
        assert!(sat_brute_force(&formula(3, &[[1, 2, -3]])).unwrap());
        assert!(!sat_brute_force(&all_patterns()).unwrap());
        assert!(sat_brute_force(&formula(3, &[])).unwrap()); // vacuous
    }

    #[test]
    fn build_identities() {
        for (nv, clauses) in [
            (3usize, vec![[1i64, 2, -3]]),
            (4, vec![[1, 2, -3], [2, -3, -4]]),
            (1, vec![]),
        ] {
            let f = formula(nv, &clauses);
            let art = build(&f).unwrap();
            assert_eq!(art.graph.n(), 7 * nv + clauses.len() + 4);
            assert_eq!(art.graph.m(), 10 * nv + 4 * clauses.len() + 5);
            assert_eq!(art.roles.len(), art.graph.n());
        }
    }

    #[test]
    fn clause_wiring_respects_polarity() {
        let f = formula(4, &[[1, 2, -3], [2, -3, -4]]);
        let art = build(&f).unwrap();
        let c0 = art.clause_vertex(0);
        assert!(art.graph.has_edge(c0, art.positive_literal(0)));
        assert!(art.graph.has_edge(c0, art.positive_literal(1)));
        assert!(art.graph.has_edge(c0, art.negative_literal(2)));
        assert!(art.graph.has_edge(c0, art.clause_anchor()));
        assert_eq!(art.graph.degree(c0), 4);

        let c1 = art.clause_vertex(1);
        assert!(art.graph.has_edge(c1, art.negative_literal(3)));
        assert!(!art.graph.has_edge(c1, art.positive_literal(0)));
    }

    #[test]
    fn gadget_swap_is_an_automorphism() {
        // swapping the two literals and the two guards preserves adjacency
        let f = formula(2, &[]);
        let art = build(&f).unwrap();
        let g = &art.graph;
        for i in 0..2 {
            let swap = |v: usize| -> usize {
                if v == art.positive_literal(i) {
                    art.negative_literal(i)
                } else if v == art.negative_literal(i) {
                    art.positive_literal(i)
                } else if v == art.guard_a(i) {
                    art.guard_b(i)
                } else if v == art.guard_b(i) {
                    art.guard_a(i)
                } else {
                    v
                }
            };
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    assert_eq!(
                        g.has_edge(u, v),
                        g.has_edge(swap(u), swap(v)),
                        "swap breaks edge ({u},{v}) in gadget {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn anchor_edge_removal_leaves_a_4_cycle() {
        let f = formula(3, &[[1, 2, -3]]);
        let art = build(&f).unwrap();
        let (o, p, q, r) = (
            art.triangle_o(),
            art.triangle_p(),
            art.triangle_q(),
            art.clause_anchor(),
        );
        let h = art.graph.remove_edge(p, q).unwrap();
        assert!(h.has_edge(o, p));
        assert!(h.has_edge(p, r));
        assert!(h.has_edge(r, q));
        assert!(h.has_edge(q, o));
        assert!(!h.has_edge(p, q));
        assert!(!h.has_edge(o, r));
    }

    #[test]
    fn verify_trivial_instance() {
        // no clauses: vacuously satisfiable, weight 4n + 3, bondage 1
        let f = formula(1, &[]);
        let report = verify_claims(&f, &VerifyOptions::default()).unwrap();
        assert_eq!(report.order, 11);
        assert_eq!(report.size, 15);
        assert_eq!(report.gamma_tr, Some(7));
        assert!(report.sat);
        assert_eq!(report.claim1, Some(true));
        assert_eq!(report.claim2, Some(true));
        assert_eq!(report.claim3, Some(true));
        assert_eq!(report.b_tr, Some(1));
        assert!(report.all_hold());
    }

    #[test]
    fn oversized_instances_are_left_unchecked() {
        let f = formula(3, &[[1, 2, -3]]);
        let opts = VerifyOptions {
            order_cap: 10,
            claim2_order_cap: 10,
        };
        let report = verify_claims(&f, &opts).unwrap();
        assert_eq!(report.gamma_tr, None);
        assert_eq!(report.claim1, None);
        assert_eq!(report.claim2, None);
        assert_eq!(report.claim3, None);
        // the identities still hold for the built graph
        assert_eq!(report.order, 26);
        assert_eq!(report.size, 39);
    }
}
