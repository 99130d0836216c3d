//! The statement registry: every verifiable property the suite asserts,
//! with its hypothesis gating and per-graph check.
//!
//! Statements about bondage drawn from the finite-bondage part of the
//! theory carry the standing hypothesis that the graph admits a finite
//! total Roman bondage number (equivalently, no component is one of the
//! recognized infinite classes); checks marked "finite bondage assumed"
//! treat infinite-bondage graphs as vacuous.

use crate::bondage::{BondageResult, BondageVariant};
use crate::error::Error;
use crate::families::{expected, BondageExpectation, FamilySpec, GammaExpectation};
use crate::graph::{Graph, VertexSet};
use crate::harness::ctx::GraphCtx;
use crate::invariants::{
    quasi_total_roman_domination_oracle, roman_domination_oracle, roman_weight_leq,
    total_roman_domination_oracle, total_roman_domination_value, RomanKind,
};
use crate::reduction::{self, CnfFormula, Literal, VerifyOptions};

/// Edge-count cap for checks that may need to exhaust all edge subsets
/// (the non-structural bondage variants and the infinity cross-check).
pub const EXHAUSTIVE_BONDAGE_M_CAP: usize = 12;

/// Order cap for checks built on the enumeration of all optimal functions.
pub const OPTIMAL_FUNCTIONS_N_CAP: usize = 14;

/// Order cap for the `3^n` oracle cross-checks.
pub const ORACLE_N_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Vacuous,
    Skipped,
    Fail(String),
}

pub enum CheckKind {
    PerGraph(fn(&GraphCtx) -> Outcome),
    /// Corpus-independent check; returns (checked, failed, counterexample).
    Global(fn() -> (u64, u64, Option<String>)),
}

pub struct TheoremDef {
    pub id: &'static str,
    pub name: &'static str,
    pub statement: &'static str,
    pub kind: CheckKind,
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

fn fail(msg: impl Into<String>) -> Outcome {
    Outcome::Fail(msg.into())
}

fn check(cond: bool, msg: impl Fn() -> String) -> Outcome {
    if cond {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

/// Unwraps a cached bondage result, converting solver-level inconsistency
/// errors into loud failures.
fn bondage_of<'c>(
    ctx: &'c GraphCtx<'_>,
    variant: BondageVariant,
) -> std::result::Result<&'c BondageResult, Outcome> {
    match ctx.bondage(variant) {
        Ok(r) => Ok(r),
        Err(e) => Err(fail(format!("bondage solver error: {e}"))),
    }
}

fn btr<'c>(ctx: &'c GraphCtx<'_>) -> std::result::Result<&'c BondageResult, Outcome> {
    bondage_of(ctx, BondageVariant::TotalRoman)
}

fn universal_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == g.n() - 1).count()
}

/// Two adjacent vertices whose closed neighborhoods cover everything.
fn has_adjacent_covering_pair(g: &Graph) -> bool {
    let full = VertexSet::full(g.n());
    g.edges()
        .iter()
        .any(|&(u, v)| g.closed_neighborhood(u).union(g.closed_neighborhood(v)) == full)
}

fn is_two_k2(g: &Graph) -> bool {
    g.n() == 4 && g.m() == 2 && g.components().iter().all(|c| c.len() == 2)
}

fn all_components_k2(g: &Graph) -> bool {
    g.components().iter().all(|c| c.len() == 2) && g.m() * 2 == g.n()
}

/// All simple cycles of exactly the given length, as vertex sets.
fn cycles_of_length(g: &Graph, len: usize) -> Vec<VertexSet> {
    fn extend(
        g: &Graph,
        start: usize,
        current: usize,
        visited: VertexSet,
        depth: usize,
        len: usize,
        out: &mut Vec<VertexSet>,
    ) {
        for w in g.neighbors(current).iter() {
            if w == start && depth == len {
                out.push(visited);
            } else if w > start && !visited.contains(w) && depth < len {
                let mut vis = visited;
                vis.insert(w);
                extend(g, start, w, vis, depth + 1, len, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(g, s, s, VertexSet::singleton(s), 1, len, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn gamma_tr_of(g: &Graph) -> u32 {
    total_roman_domination_value(g).expect("isolate-free by construction")
}

// ---------------------------------------------------------------------------
// per-graph checks
// ---------------------------------------------------------------------------

fn t01_chains(ctx: &GraphCtx) -> Outcome {
    let (g, gt, gr, gq, gtr, b) = (
        ctx.gamma(),
        ctx.gamma_t(),
        ctx.gamma_r(),
        ctx.gamma_qtr(),
        ctx.gamma_tr(),
        ctx.beta(),
    );
    let ok = g <= b
        && g <= gt
        && gr <= gq
        && gq <= gtr
        && gt <= gtr
        && gtr <= 2 * gt
        && 2 * g <= gtr
        && gtr <= 3 * g
        && g <= gr
        && gr <= 2 * g;
    check(ok, || {
        format!("chain violated: γ={g} γ_t={gt} γ_R={gr} γ_qtR={gq} γ_tR={gtr} β={b}")
    })
}

fn t02_plus_one_iff_universal(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() < 3 || !g.is_connected() {
        return Outcome::Vacuous;
    }
    let lhs = ctx.gamma_tr() == ctx.gamma_t() + 1;
    let rhs = g.max_degree() == g.n() - 1;
    check(lhs == rhs, || {
        format!(
            "γ_tR=γ_t+1 is {lhs} but Δ=n-1 is {rhs} (γ_tR={}, γ_t={})",
            ctx.gamma_tr(),
            ctx.gamma_t()
        )
    })
}

fn t03_equality_iff_k2_components(ctx: &GraphCtx) -> Outcome {
    let lhs = ctx.gamma_tr() == ctx.gamma_t();
    let rhs = all_components_k2(ctx.g());
    check(lhs == rhs, || {
        format!("γ_tR=γ_t is {lhs} but K_2-components is {rhs}")
    })
}

fn t04_conditional_bondage(ctx: &GraphCtx) -> Outcome {
    if ctx.g().m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return Outcome::Skipped;
    }
    let (g, gt, gr, gq, gtr) = (
        ctx.gamma(),
        ctx.gamma_t(),
        ctx.gamma_r(),
        ctx.gamma_qtr(),
        ctx.gamma_tr(),
    );
    let b = match bondage_of(ctx, BondageVariant::Domination) {
        Ok(r) => r.clone(),
        Err(o) => return o,
    };
    let b_t = match bondage_of(ctx, BondageVariant::TotalDomination) {
        Ok(r) => r.clone(),
        Err(o) => return o,
    };
    let b_r = match bondage_of(ctx, BondageVariant::Roman) {
        Ok(r) => r.clone(),
        Err(o) => return o,
    };
    let b_q = match bondage_of(ctx, BondageVariant::QuasiTotalRoman) {
        Ok(r) => r.clone(),
        Err(o) => return o,
    };
    let b_tr = match btr(ctx) {
        Ok(r) => r.clone(),
        Err(o) => return o,
    };
    // Where a removal-restricted variant is bounded by an unrestricted one,
    // the comparison uses the isolate-free-restricted form of the latter:
    // an unrestricted witness may isolate a vertex and then proves nothing
    // about the restricted variant (see the decisions notes).
    let b_res = match bondage_of(ctx, BondageVariant::Domination)
        .map(|_| ctx.restricted_bondage(BondageVariant::Domination))
    {
        Ok(Ok(r)) => r.clone(),
        Ok(Err(e)) => return fail(format!("bondage solver error: {e}")),
        Err(o) => return o,
    };
    let b_r_res = match ctx.restricted_bondage(BondageVariant::Roman) {
        Ok(r) => r.clone(),
        Err(e) => return fail(format!("bondage solver error: {e}")),
    };
    let mut fired = false;
    let parts: [(&str, bool, bool); 10] = [
        ("1", g == gt, b_t.le(&b_res)),
        ("2", gr == gq, b_q.le(&b_r_res)),
        ("3", gq == gtr, b_tr.le(&b_q)),
        ("4", gr == gtr, b_tr.le(&b_q) && b_q.le(&b_r_res)),
        ("5", gt == gtr, b_tr.le(&b_t)),
        ("6", gtr == 2 * gt, b_t.le(&b_tr)),
        ("7", 2 * g == gtr, b_tr.le(&b_res)),
        ("8", gtr == 3 * g, b.le(&b_tr)),
        ("9", g == gr, b_r.le(&b)),
        ("10", gr == 2 * g, b.le(&b_r)),
    ];
    for (part, hyp, holds) in parts {
        if hyp {
            fired = true;
            if !holds {
                return fail(format!(
                    "conditional part {part} violated (b={:?} b_t={:?} b_R={:?} b_qtR={:?} b_tR={:?}, restricted b={:?} b_R={:?})",
                    b.value(),
                    b_t.value(),
                    b_r.value(),
                    b_q.value(),
                    b_tr.value(),
                    b_res.value(),
                    b_r_res.value(),
                ));
            }
        }
    }
    if fired {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

fn t05_full_weight_recognizer(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if !g.is_connected() {
        return Outcome::Vacuous;
    }
    let recognized = ctx.full_weight().is_some();
    let full = ctx.gamma_tr() as usize == g.n();
    check(recognized == full, || {
        format!("recognizer says {recognized} but γ_tR = n is {full}")
    })
}

fn t06_infinite_recognizer(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if !g.is_connected() || g.m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return if g.is_connected() {
            Outcome::Skipped
        } else {
            Outcome::Vacuous
        };
    }
    let structural = match crate::bondage::infinite_certificate(g) {
        Ok(c) => c.is_some(),
        Err(e) => return fail(format!("recognizer error: {e}")),
    };
    let exhausted = match crate::bondage::no_witness_by_exhaustion(g) {
        Ok(b) => b,
        Err(e) => return fail(format!("exhaustion oracle error: {e}")),
    };
    check(structural == exhausted, || {
        format!("structural infinity {structural} but exhaustive search says {exhausted}")
    })
}

fn t07_edge_addition(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    let before = ctx.gamma_tr();
    let mut fired = false;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            fired = true;
            let after = gamma_tr_of(&g.add_edge(u, v).unwrap());
            if after > before || after + 2 < before {
                return fail(format!(
                    "adding ({u},{v}) moved γ_tR from {before} to {after}"
                ));
            }
        }
    }
    if fired {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

fn t08_supports_positive(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() > OPTIMAL_FUNCTIONS_N_CAP {
        return Outcome::Skipped;
    }
    let supports = g.support_vertices();
    if supports.is_empty() {
        return Outcome::Vacuous;
    }
    let functions = match ctx.all_trdfs() {
        Ok(f) => f,
        Err(e) => return fail(format!("function enumeration error: {e}")),
    };
    for f in functions {
        for s in supports.iter() {
            if f.value(s) == 0 {
                return fail(format!("support vertex {s} gets 0 in {f:?}"));
            }
        }
    }
    Outcome::Pass
}

fn t09_weight_three(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() < 3 {
        return Outcome::Vacuous;
    }
    let lhs = ctx.gamma_tr() == 3;
    let rhs = g.max_degree() == g.n() - 1;
    check(lhs == rhs, || format!("γ_tR=3 is {lhs} but Δ=n-1 is {rhs}"))
}

fn t10_universal_bondage(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    let t = universal_count(g);
    if g.n() < 3 || t == 0 {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let Some(value) = b_tr.value() else {
        return Outcome::Vacuous; // finite bondage assumed
    };
    check(value == t.div_ceil(2) as u32, || {
        format!("{t} universal vertices but b_tR = {value}")
    })
}

fn t11_complete_wheel_values(ctx: &GraphCtx) -> Outcome {
    match ctx.item.family {
        Some(FamilySpec::Complete(_)) | Some(FamilySpec::Wheel(_)) => family_value_check(ctx),
        _ => Outcome::Vacuous,
    }
}

fn t12_total_domination_two(ctx: &GraphCtx) -> Outcome {
    let lhs = ctx.gamma_t() == 2;
    let rhs = has_adjacent_covering_pair(ctx.g());
    check(lhs == rhs, || {
        format!("γ_t=2 is {lhs} but an adjacent covering pair exists: {rhs}")
    })
}

fn t13_broom_values(ctx: &GraphCtx) -> Outcome {
    match ctx.item.family {
        Some(FamilySpec::Broom(..)) | Some(FamilySpec::DoubleBroom(..)) => family_value_check(ctx),
        _ => Outcome::Vacuous,
    }
}

fn t14_weight_four(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() < 3 {
        return Outcome::Vacuous;
    }
    let lhs = ctx.gamma_tr() == 4;
    let rhs = is_two_k2(g) || (g.max_degree() <= g.n() - 2 && has_adjacent_covering_pair(g));
    check(lhs == rhs, || {
        format!("γ_tR=4 is {lhs} but the structural condition is {rhs}")
    })
}

fn t15_removal_sandwich(ctx: &GraphCtx) -> Outcome {
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let BondageResult::Finite { witness, .. } = b_tr else {
        return Outcome::Vacuous;
    };
    let removed = ctx.g().remove_edges(witness).unwrap();
    let after = gamma_tr_of(&removed);
    let before = ctx.gamma_tr();
    check(after == before + 1 || after == before + 2, || {
        format!("removing the minimum witness moved γ_tR from {before} to {after}")
    })
}

fn t16_total_bondage_dominates(ctx: &GraphCtx) -> Outcome {
    if ctx.gamma_tr() != ctx.gamma_t() + 2 {
        return Outcome::Vacuous;
    }
    if ctx.g().m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return Outcome::Skipped;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    if !b_tr.is_finite() {
        return Outcome::Vacuous; // finite bondage assumed
    }
    let b_t = match bondage_of(ctx, BondageVariant::TotalDomination) {
        Ok(r) => r,
        Err(o) => return o,
    };
    check(b_tr.le(b_t), || {
        format!("b_tR = {:?} exceeds b_t = {:?}", b_tr.value(), b_t.value())
    })
}

fn t17_weight_four_bondage_equality(ctx: &GraphCtx) -> Outcome {
    if ctx.gamma_tr() != 4 {
        return Outcome::Vacuous;
    }
    if ctx.g().m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return Outcome::Skipped;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    if !b_tr.is_finite() {
        return Outcome::Vacuous; // finite bondage assumed
    }
    let b_t = match bondage_of(ctx, BondageVariant::TotalDomination) {
        Ok(r) => r,
        Err(o) => return o,
    };
    check(b_tr.value() == b_t.value(), || {
        format!("b_tR = {:?} but b_t = {:?}", b_tr.value(), b_t.value())
    })
}

fn t18_complete_bipartite_values(ctx: &GraphCtx) -> Outcome {
    match ctx.item.family {
        Some(FamilySpec::CompleteBipartite(..)) => family_value_check(ctx),
        _ => Outcome::Vacuous,
    }
}

fn t19_cover_triple_bound(ctx: &GraphCtx) -> Outcome {
    if ctx.gamma_tr() != 3 * ctx.beta() {
        return Outcome::Vacuous;
    }
    if ctx.g().m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return Outcome::Skipped;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let b = match bondage_of(ctx, BondageVariant::Domination) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let delta = ctx.g().min_degree() as u32;
    let lower_ok = match (b_tr.value(), b.value()) {
        (Some(v), Some(bv)) => v >= delta.max(bv),
        (Some(v), None) => v >= delta, // domination bondage exhausted: no finite b
        (None, _) => true,             // infinity dominates every lower bound
    };
    check(lower_ok, || {
        format!(
            "b_tR = {:?} below max(δ={delta}, b={:?})",
            b_tr.value(),
            b.value()
        )
    })
}

fn t20_adjacent_supports(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    let supports = g.support_vertices();
    let mut fired = false;
    for v in supports.iter() {
        let r = g.leaf_neighbors(v).len();
        if r < 2 {
            continue;
        }
        for u in g.neighbors(v).intersection(supports).iter() {
            if u == v {
                continue;
            }
            fired = true;
            let b_tr = match btr(ctx) {
                Ok(x) => x,
                Err(o) => return o,
            };
            let bound = (g.degree(v) - r) as u32;
            let ok = matches!(b_tr.value(), Some(x) if x <= bound);
            if !ok {
                return fail(format!(
                    "adjacent supports ({u},{v}) with {r} leaves: b_tR = {:?} > deg(v)-r = {bound}",
                    b_tr.value()
                ));
            }
        }
    }
    if fired {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

fn t21_spider_values(ctx: &GraphCtx) -> Outcome {
    match ctx.item.family {
        Some(FamilySpec::Spider(..)) => family_value_check(ctx),
        _ => Outcome::Vacuous,
    }
}

fn t22_weight_four_order_bound(ctx: &GraphCtx) -> Outcome {
    if ctx.gamma_tr() != 4 {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let Some(value) = b_tr.value() else {
        return Outcome::Vacuous; // finite bondage assumed
    };
    check(value < ctx.g().n() as u32, || {
        format!("b_tR = {value} exceeds n-1 = {}", ctx.g().n() - 1)
    })
}

fn t23_spanning_subgraph(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.m() > EXHAUSTIVE_BONDAGE_M_CAP {
        return Outcome::Skipped;
    }
    let b_g = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let gamma = ctx.gamma_tr();
    let edges = g.edges();
    let mut fired = false;
    let mut subsets: Vec<Vec<(usize, usize)>> = edges.iter().map(|&e| vec![e]).collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            subsets.push(vec![edges[i], edges[j]]);
        }
    }
    for subset in subsets {
        let k = subset.len() as u32;
        let h = g
            .remove_edges(&crate::graph::EdgeSet::new(subset.clone()))
            .unwrap();
        if h.has_isolated_vertex() {
            continue;
        }
        if !roman_weight_leq(h.n(), h.adj_slice(), RomanKind::Total, gamma) {
            continue; // removing edges raised the weight: hypothesis fails
        }
        fired = true;
        let b_h = match crate::bondage::total_roman_bondage(&h) {
            Ok(r) => r,
            Err(e) => return fail(format!("bondage solver error on subgraph: {e}")),
        };
        if !b_g.le_plus(&b_h, k) {
            return fail(format!(
                "removing {subset:?}: upper bound fails, b_tR(H) = {:?}, b_tR(G) = {:?}, k = {k}",
                b_h.value(),
                b_g.value()
            ));
        }
        // The lower bound needs the minimum witness of G to stay admissible
        // after the extra removals: H minus that witness must be isolate-free.
        // Without this the bound is false (removing one triangle edge of the
        // paw graph leaves a star of equal weight and infinite bondage, and
        // finite counterexamples on six vertices exist as well).
        let transfer_ok = match b_g {
            BondageResult::Infinite { .. } => true,
            BondageResult::Finite { witness, .. } => {
                let mut all = witness.edges().to_vec();
                all.extend(subset.iter().copied());
                !g.remove_edges(&crate::graph::EdgeSet::new(all))
                    .unwrap()
                    .has_isolated_vertex()
            }
        };
        if transfer_ok && !b_h.le(b_g) {
            return fail(format!(
                "removing {subset:?}: lower bound fails, b_tR(H) = {:?}, b_tR(G) = {:?}, k = {k}",
                b_h.value(),
                b_g.value()
            ));
        }
    }
    if fired {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

fn t24_single_edge_characterization(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() > OPTIMAL_FUNCTIONS_N_CAP {
        return Outcome::Skipped;
    }
    let (characterized, _) = match crate::bondage::single_edge_characterization(g) {
        Ok(x) => x,
        Err(e) => return fail(format!("characterization error: {e}")),
    };
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let is_one = b_tr.value() == Some(1);
    check(characterized == is_one, || {
        format!(
            "characterization says {characterized} but b_tR = {:?}",
            b_tr.value()
        )
    })
}

fn t25_unique_function(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() > OPTIMAL_FUNCTIONS_N_CAP {
        return Outcome::Skipped;
    }
    if g.min_degree() < 2 {
        return Outcome::Vacuous;
    }
    let functions = match ctx.all_trdfs() {
        Ok(f) => f,
        Err(e) => return fail(format!("function enumeration error: {e}")),
    };
    if functions.len() != 1 {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    check(b_tr.value() == Some(1), || {
        format!("unique optimal function but b_tR = {:?}", b_tr.value())
    })
}

fn t26_clique_bound(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    let n = g.n();
    if n < 4 {
        return Outcome::Vacuous;
    }
    let mut fired = false;
    let verts: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let clique = [verts[a], verts[b], verts[c], verts[d]];
                    let is_clique = clique
                        .iter()
                        .enumerate()
                        .all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                    if !is_clique {
                        continue;
                    }
                    let set: VertexSet = clique.iter().copied().collect();
                    let outside = VertexSet::full(n).difference(set);
                    let isolate_free = outside
                        .iter()
                        .all(|v| !g.neighbors(v).difference(set).is_empty());
                    if !isolate_free {
                        continue;
                    }
                    fired = true;
                    let degsum: u32 = clique.iter().map(|&v| g.degree(v) as u32).sum();
                    let bound = degsum - 10;
                    let b_tr = match btr(ctx) {
                        Ok(r) => r,
                        Err(o) => return o,
                    };
                    let ok = matches!(b_tr.value(), Some(x) if x <= bound);
                    if !ok {
                        return fail(format!(
                            "clique {clique:?}: b_tR = {:?} > Σdeg - 10 = {bound}",
                            b_tr.value()
                        ));
                    }
                }
            }
        }
    }
    if fired {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

/// The literal hypothesis: a strong support vertex with a non-leaf neighbor
/// lying in no triangle.
fn prop20_literal_hypothesis(g: &Graph) -> bool {
    for v in g.strong_support_vertices().iter() {
        let leaves = g.leaves();
        for a in g.neighbors(v).difference(leaves).iter() {
            let na = g.neighbors(a);
            let mut ok = na.intersection(g.neighbors(v)).is_empty();
            if ok {
                for b in na.iter() {
                    if !na.intersection(g.neighbors(b)).is_empty() {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return true;
            }
        }
    }
    false
}

fn t27_isolated_neighborhood_bound(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() < 5 || !prop20_literal_hypothesis(g) {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let bound = g.n() as u32 - 4;
    let ok = matches!(b_tr.value(), Some(x) if x <= bound);
    check(ok, || {
        format!("b_tR = {:?} exceeds n-4 = {bound}", b_tr.value())
    })
}

fn t28_strong_support_bound(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() < 5 || g.strong_support_vertices().is_empty() {
        return Outcome::Vacuous;
    }
    let girth_ok = g.girth().is_none_or(|x| x >= 4);
    if !girth_ok && !g.is_tree() {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let Some(value) = b_tr.value() else {
        return Outcome::Vacuous; // finite bondage assumed
    };
    check(value <= g.n() as u32 - 4, || {
        format!("b_tR = {value} exceeds n-4 = {}", g.n() - 4)
    })
}

fn t29_girth_bound(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if !g.is_connected() || g.n() > 10 {
        return if g.n() > 10 {
            Outcome::Skipped
        } else {
            Outcome::Vacuous
        };
    }
    let Some(girth) = g.girth() else {
        return Outcome::Vacuous;
    };
    if girth < 5 {
        return Outcome::Vacuous;
    }
    let full = VertexSet::full(g.n());
    let has_good_cycle = cycles_of_length(g, girth).into_iter().any(|c| {
        full.difference(c)
            .iter()
            .all(|v| !g.neighbors(v).difference(c).is_empty())
    });
    if !has_good_cycle {
        return Outcome::Vacuous;
    }
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let Some(value) = b_tr.value() else {
        return Outcome::Vacuous; // finite bondage assumed
    };
    check((value as usize) < g.n() - girth, || {
        format!("b_tR = {value} exceeds n-girth-1 = {}", g.n() - girth - 1)
    })
}

fn t30_edge_cut_bound(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Vacuous;
    }
    if g.n() > 10 {
        return Outcome::Skipped;
    }
    let n = g.n();
    let full = VertexSet::full(n);
    let mut best_cut: Option<usize> = None;
    for mask in 1..(1u128 << n) - 1 {
        let s1 = VertexSet::from_bits(mask);
        let s2 = full.difference(s1);
        let (g1, _) = g.induced_subgraph(s1);
        let (g2, _) = g.induced_subgraph(s2);
        if !g1.is_connected() || !g2.is_connected() {
            continue;
        }
        if g1.min_degree() < 2 || g2.min_degree() < 1 {
            continue;
        }
        let cut = g.m() - g1.m() - g2.m();
        if best_cut.is_none_or(|b| cut < b) {
            best_cut = Some(cut);
        }
    }
    let Some(k) = best_cut else {
        return Outcome::Vacuous;
    };
    let b_tr = match btr(ctx) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let Some(value) = b_tr.value() else {
        return Outcome::Vacuous; // finite bondage assumed
    };
    let bound = 3 * g.max_degree() as u32 + k as u32 - 4;
    check(value <= bound, || {
        format!("b_tR = {value} exceeds 3Δ+k-4 = {bound} (k = {k})")
    })
}

fn t31_oracle_equivalence(ctx: &GraphCtx) -> Outcome {
    let g = ctx.g();
    if g.n() > ORACLE_N_CAP {
        return Outcome::Skipped;
    }
    let oracle = match total_roman_domination_oracle(g) {
        Ok(v) => v,
        Err(e) => return fail(format!("oracle error: {e}")),
    };
    if ctx.gamma_tr() != oracle {
        return fail(format!(
            "decomposition γ_tR = {} but the 3^n oracle says {oracle}",
            ctx.gamma_tr()
        ));
    }
    if g.n() <= 8 {
        let r = roman_domination_oracle(g).expect("cap checked");
        if ctx.gamma_r() != r {
            return fail(format!("γ_R = {} but oracle says {r}", ctx.gamma_r()));
        }
        let q = quasi_total_roman_domination_oracle(g).expect("cap checked");
        if ctx.gamma_qtr() != q {
            return fail(format!("γ_qtR = {} but oracle says {q}", ctx.gamma_qtr()));
        }
    }
    Outcome::Pass
}

/// Shared family-value comparison: the generated graph must match every
/// closed-form value its spec promises.
fn family_value_check(ctx: &GraphCtx) -> Outcome {
    let Some(spec) = &ctx.item.family else {
        return Outcome::Vacuous;
    };
    let exp = match expected(spec) {
        Ok(e) => e,
        Err(e) => return fail(format!("expected-value error: {e}")),
    };
    if let GammaExpectation::Value(want) = exp.gamma_tr {
        if ctx.gamma_tr() != want {
            return fail(format!(
                "γ_tR = {} but the table says {want}",
                ctx.gamma_tr()
            ));
        }
    }
    match exp.b_tr {
        BondageExpectation::Value(want) => {
            let b_tr = match btr(ctx) {
                Ok(r) => r,
                Err(o) => return o,
            };
            if b_tr.value() != Some(want) {
                return fail(format!(
                    "b_tR = {:?} but the table says {want}",
                    b_tr.value()
                ));
            }
        }
        BondageExpectation::Infinite => {
            let b_tr = match btr(ctx) {
                Ok(r) => r,
                Err(o) => return o,
            };
            match b_tr {
                BondageResult::Infinite { certificate } => {
                    if certificate.is_none() {
                        return fail("infinite but no structural certificate");
                    }
                }
                BondageResult::Finite { value, .. } => {
                    return fail(format!("expected infinite b_tR, got {value}"));
                }
            }
        }
        BondageExpectation::Computed => {}
    }
    Outcome::Pass
}

fn t32_family_expected_values(ctx: &GraphCtx) -> Outcome {
    if ctx.item.family.is_none() {
        return Outcome::Vacuous;
    }
    family_value_check(ctx)
}

fn t33_family_order_size(ctx: &GraphCtx) -> Outcome {
    let Some(spec) = &ctx.item.family else {
        return Outcome::Vacuous;
    };
    let (n, m) = match *spec {
        FamilySpec::Complete(n) => (n, n * (n - 1) / 2),
        FamilySpec::Path(n) => (n, n - 1),
        FamilySpec::Cycle(n) => (n, n),
        FamilySpec::Wheel(l) => (l + 1, 2 * l),
        FamilySpec::CompleteBipartite(p, q) => (p + q, p * q),
        FamilySpec::Star(t) => (t + 1, t),
        FamilySpec::Bistar(r, s) => (2 + r + s, 1 + r + s),
        FamilySpec::Spider(k, t) => (1 + k + 2 * (t - k), k + 2 * (t - k)),
        FamilySpec::Broom(t, d) => (t + d, t + d - 1),
        FamilySpec::DoubleBroom(t, d, d2) => (t + d + d2, t + d + d2 - 1),
        FamilySpec::Corona(ref base) => (2 * base.n(), base.m() + base.n()),
        FamilySpec::FamilyG(k1, k2) => (4 + 2 * (k1 + k2), 4 + 2 * (k1 + k2)),
        FamilySpec::FamilyH(r, a, b) => (2 + r + 2 * (a + b), 1 + r + 2 * (a + b)),
    };
    let g = ctx.g();
    check(g.n() == n && g.m() == m, || {
        format!("generated ({}, {}), formulas give ({n}, {m})", g.n(), g.m())
    })
}

// ---------------------------------------------------------------------------
// reduction battery (corpus-independent)
// ---------------------------------------------------------------------------

fn reduction_battery() -> Vec<CnfFormula> {
    let lit = |v: i64| Literal {
        var: v.unsigned_abs() as usize - 1,
        positive: v > 0,
    };
    let mut formulas = Vec::new();
    // the eight sign patterns of a single clause over three variables
    for bits in 0..8i64 {
        let s = |i: i64, v: i64| if bits >> i & 1 == 0 { v } else { -v };
        formulas
            .push(CnfFormula::new(3, vec![[lit(s(0, 1)), lit(s(1, 2)), lit(s(2, 3))]]).unwrap());
    }
    // all eight patterns together: the smallest unsatisfiable width-3 formula
    let mut clauses = Vec::new();
    for bits in 0..8i64 {
        let s = |i: i64, v: i64| if bits >> i & 1 == 0 { v } else { -v };
        clauses.push([lit(s(0, 1)), lit(s(1, 2)), lit(s(2, 3))]);
    }
    formulas.push(CnfFormula::new(3, clauses).unwrap());
    formulas
}

fn t34_reduction_claims() -> (u64, u64, Option<String>) {
    let opts = VerifyOptions {
        order_cap: 34,
        claim2_order_cap: 34,
    };
    let mut checked = 0;
    let mut failed = 0;
    let mut counterexample = None;
    for f in reduction_battery() {
        checked += 1;
        let expected_order = 7 * f.num_vars() + f.num_clauses() + 4;
        let expected_size = 10 * f.num_vars() + 4 * f.num_clauses() + 5;
        match reduction::verify_claims(&f, &opts) {
            Ok(rep) => {
                let ok = rep.order == expected_order
                    && rep.size == expected_size
                    && rep.claim1 == Some(true)
                    && rep.claim2 == Some(true)
                    && rep.claim3 == Some(true)
                    && rep.weight_band == Some(true);
                if !ok {
                    failed += 1;
                    if counterexample.is_none() {
                        counterexample = Some(format!(
                            "formula with {} vars, {} clauses: {:?}",
                            f.num_vars(),
                            f.num_clauses(),
                            rep
                        ));
                    }
                }
            }
            Err(Error::Inconsistency { detail, graph6 }) => {
                failed += 1;
                counterexample.get_or_insert(format!("{detail}; graph6 {graph6}"));
            }
            Err(e) => {
                failed += 1;
                counterexample.get_or_insert(format!("verification error: {e}"));
            }
        }
    }
    (checked, failed, counterexample)
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

pub fn registry() -> &'static [TheoremDef] {
    use CheckKind::{Global, PerGraph};
    static REGISTRY: &[TheoremDef] = &[
        TheoremDef {
            id: "T1",
            name: "invariant chains",
            statement: "γ ≤ β, γ ≤ γ_t, γ_R ≤ γ_qtR ≤ γ_tR, γ_t ≤ γ_tR ≤ 2γ_t, 2γ ≤ γ_tR ≤ 3γ, γ ≤ γ_R ≤ 2γ",
            kind: PerGraph(t01_chains),
        },
        TheoremDef {
            id: "T2",
            name: "plus-one iff universal vertex",
            statement: "for connected graphs of order at least 3: γ_tR = γ_t + 1 iff Δ = n − 1",
            kind: PerGraph(t02_plus_one_iff_universal),
        },
        TheoremDef {
            id: "T3",
            name: "equality iff K_2 components",
            statement: "γ_tR = γ_t iff every component is a K_2",
            kind: PerGraph(t03_equality_iff_k2_components),
        },
        TheoremDef {
            id: "T4",
            name: "conditional bondage inequalities",
            statement: "ten conditionals, e.g. γ_qtR = γ_tR implies b_tR ≤ b_qtR, and γ_tR = 3γ implies b ≤ b_tR; where a removal-restricted variant is bounded by b or b_R, the bound uses their isolate-free-restricted form (infinity compares above every finite value)",
            kind: PerGraph(t04_conditional_bondage),
        },
        TheoremDef {
            id: "T5",
            name: "full-weight recognizer",
            statement: "a connected graph has γ_tR = n iff it is a path, cycle, corona, subdivided star, or a member of the two pendant-path families",
            kind: PerGraph(t05_full_weight_recognizer),
        },
        TheoremDef {
            id: "T6",
            name: "infinite-bondage recognizer",
            statement: "the structural recognizer accepts exactly the graphs on which exhaustive search finds no admissible weight-raising removal",
            kind: PerGraph(t06_infinite_recognizer),
        },
        TheoremDef {
            id: "T7",
            name: "edge addition sandwich",
            statement: "for every non-edge uv: γ_tR(G) − 2 ≤ γ_tR(G + uv) ≤ γ_tR(G)",
            kind: PerGraph(t07_edge_addition),
        },
        TheoremDef {
            id: "T8",
            name: "supports are positive",
            statement: "every support vertex takes a positive value in every minimum TRDF",
            kind: PerGraph(t08_supports_positive),
        },
        TheoremDef {
            id: "T9",
            name: "weight three iff universal vertex",
            statement: "for n ≥ 3: γ_tR = 3 iff Δ = n − 1",
            kind: PerGraph(t09_weight_three),
        },
        TheoremDef {
            id: "T10",
            name: "universal-vertex bondage",
            statement: "for n ≥ 3 with t ≥ 1 universal vertices and finite bondage: b_tR = ⌈t/2⌉",
            kind: PerGraph(t10_universal_bondage),
        },
        TheoremDef {
            id: "T11",
            name: "complete graph and wheel values",
            statement: "b_tR(K_n) = ⌈n/2⌉ for n ≥ 4 and b_tR of a wheel is 1 (rim ≥ 4); K_3 and K_{2,2} are cycles with infinite bondage",
            kind: PerGraph(t11_complete_wheel_values),
        },
        TheoremDef {
            id: "T12",
            name: "total domination two",
            statement: "γ_t = 2 iff two adjacent vertices cover every vertex with their closed neighborhoods",
            kind: PerGraph(t12_total_domination_two),
        },
        TheoremDef {
            id: "T13",
            name: "broom values",
            statement: "every broom and double broom has b_tR = 1",
            kind: PerGraph(t13_broom_values),
        },
        TheoremDef {
            id: "T14",
            name: "weight four characterization",
            statement: "for n ≥ 3 isolate-free: γ_tR = 4 iff G = 2K_2, or Δ ≤ n − 2 and two adjacent vertices cover everything",
            kind: PerGraph(t14_weight_four),
        },
        TheoremDef {
            id: "T15",
            name: "removal sandwich",
            statement: "removing a minimum bondage witness raises γ_tR by exactly 1 or 2",
            kind: PerGraph(t15_removal_sandwich),
        },
        TheoremDef {
            id: "T16",
            name: "total bondage dominates",
            statement: "if γ_tR = γ_t + 2 (finite bondage assumed) then b_tR ≤ b_t",
            kind: PerGraph(t16_total_bondage_dominates),
        },
        TheoremDef {
            id: "T17",
            name: "weight-four bondage equality",
            statement: "if γ_tR = 4 (finite bondage assumed) then b_tR = b_t",
            kind: PerGraph(t17_weight_four_bondage_equality),
        },
        TheoremDef {
            id: "T18",
            name: "complete bipartite values",
            statement: "b_tR(K_{p,q}) = p for 2 ≤ p ≤ q except the 4-cycle K_{2,2}",
            kind: PerGraph(t18_complete_bipartite_values),
        },
        TheoremDef {
            id: "T19",
            name: "cover-triple lower bound",
            statement: "if γ_tR = 3β then b_tR ≥ max(δ, b)",
            kind: PerGraph(t19_cover_triple_bound),
        },
        TheoremDef {
            id: "T20",
            name: "adjacent supports bound",
            statement: "adjacent supports u, v with v carrying r ≥ 2 leaves give b_tR ≤ deg(v) − r",
            kind: PerGraph(t20_adjacent_supports),
        },
        TheoremDef {
            id: "T21",
            name: "spider values",
            statement: "b_tR(S(k,t)) = t − k for t ≥ 3, 2 ≤ k ≤ t − 1; healthy spiders have weight 2t + 1 and infinite bondage",
            kind: PerGraph(t21_spider_values),
        },
        TheoremDef {
            id: "T22",
            name: "weight-four order bound",
            statement: "if γ_tR = 4 (finite bondage assumed) then b_tR ≤ n − 1",
            kind: PerGraph(t22_weight_four_order_bound),
        },
        TheoremDef {
            id: "T23",
            name: "spanning subgraph sandwich",
            statement: "for H = G − k edges, isolate-free, with γ_tR(H) = γ_tR(G): b_tR(G) ≤ b_tR(H) + k always, and b_tR(H) ≤ b_tR(G) whenever the minimum witness of G keeps H isolate-free (checked for k = 1, 2)",
            kind: PerGraph(t23_spanning_subgraph),
        },
        TheoremDef {
            id: "T24",
            name: "single-edge characterization",
            statement: "b_tR = 1 iff some edge uv with G − uv isolate-free breaks every minimum TRDF",
            kind: PerGraph(t24_single_edge_characterization),
        },
        TheoremDef {
            id: "T25",
            name: "unique optimal function",
            statement: "if δ ≥ 2 and the minimum TRDF is unique then b_tR = 1",
            kind: PerGraph(t25_unique_function),
        },
        TheoremDef {
            id: "T26",
            name: "clique degree bound",
            statement: "a 4-clique whose removal leaves no isolated vertex gives b_tR ≤ Σ deg(u_i) − 10",
            kind: PerGraph(t26_clique_bound),
        },
        TheoremDef {
            id: "T27",
            name: "triangle-free neighbor bound",
            statement: "a strong support vertex with a non-leaf neighbor in no triangle gives b_tR ≤ n − 4 (n ≥ 5)",
            kind: PerGraph(t27_isolated_neighborhood_bound),
        },
        TheoremDef {
            id: "T28",
            name: "strong support bound",
            statement: "a strong support vertex plus girth ≥ 4 or treeness gives b_tR ≤ n − 4 (n ≥ 5, finite bondage assumed)",
            kind: PerGraph(t28_strong_support_bound),
        },
        TheoremDef {
            id: "T29",
            name: "girth bound",
            statement: "connected with girth ≥ 5 and a girth cycle whose removal leaves no isolate (finite bondage assumed): b_tR ≤ n − girth − 1",
            kind: PerGraph(t29_girth_bound),
        },
        TheoremDef {
            id: "T30",
            name: "edge cut bound",
            statement: "a minimum k-edge cut into parts with δ ≥ 2 and δ ≥ 1 (finite bondage assumed) gives b_tR ≤ 3Δ + k − 4",
            kind: PerGraph(t30_edge_cut_bound),
        },
        TheoremDef {
            id: "T31",
            name: "oracle equivalence",
            statement: "the decomposition solver agrees with the 3^n enumeration oracle on γ_tR (and on γ_R, γ_qtR for n ≤ 8)",
            kind: PerGraph(t31_oracle_equivalence),
        },
        TheoremDef {
            id: "T32",
            name: "family expected values",
            statement: "every generated family member matches its closed-form γ_tR and b_tR where stated",
            kind: PerGraph(t32_family_expected_values),
        },
        TheoremDef {
            id: "T33",
            name: "family order and size",
            statement: "every generated family member has exactly the vertex and edge counts its definition implies",
            kind: PerGraph(t33_family_order_size),
        },
        TheoremDef {
            id: "T34",
            name: "reduction claims",
            statement: "built instances have order 7n+m+4 and size 10n+4m+5, weight in {4n+3, 4n+4}, weight 4n+3 iff satisfiable iff one removal raises it, and every single removal stays ≤ 4n+4",
            kind: Global(t34_reduction_claims),
        },
    ];
    REGISTRY
}

pub fn theorem_ids() -> Vec<&'static str> {
    registry().iter().map(|t| t.id).collect()
}
