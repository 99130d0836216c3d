//! Exact solvers for the domination-type invariants: the domination,
//! total domination and vertex cover numbers, and the Roman, quasi-total
//! Roman and total Roman domination numbers.
//!
//! The Roman-type solvers share one decomposition: enumerate the candidate
//! set `V_2` of 2-labeled vertices in increasing cardinality (capped at
//! `(best - 1) / 2`), force a 1 on every vertex left undominated, and repair
//! the remaining totality defects with an exact minimum cover. Each solver
//! is backed by an independent `3^n` enumeration oracle for cross-checking.
//!
//! Disconnected graphs are solved per component and summed; witnesses are
//! tie-broken to the lexicographically smallest optimum.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{components_of, Graph, VertexSet};

/// Largest order accepted by the `3^n` enumeration oracles.
pub const ORACLE_CAP: usize = 12;

/// Largest order accepted by [`all_minimum_trdfs`].
pub const ALL_FUNCTIONS_CAP: usize = 14;

// ---------------------------------------------------------------------------
// Labelings
// ---------------------------------------------------------------------------

/// A function `V -> {0, 1, 2}` together with its weight `|V_1| + 2 |V_2|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    values: Vec<u8>,
}

impl VertexLabeling {
    pub fn new(values: Vec<u8>) -> Self {
        assert!(values.iter().all(|&x| x <= 2), "labels must be 0, 1 or 2");
        VertexLabeling { values }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// Vertices labeled exactly `label`.
    pub fn level_set(&self, label: u8) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == label)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices with a positive label.
    pub fn positives(&self) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x > 0)
            .map(|(v, _)| v)
            .collect()
    }
}

impl std::fmt::Debug for VertexLabeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for VertexLabeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

fn check_len(g: &Graph, f: &VertexLabeling) {
    assert_eq!(
        f.len(),
        g.n(),
        "labeling length {} does not match graph order {}",
        f.len(),
        g.n()
    );
}

/// Roman domination condition: every 0-vertex has a neighbor labeled 2.
pub fn is_rdf(g: &Graph, f: &VertexLabeling) -> bool {
    check_len(g, f);
    rdf_ok(g.n(), g.adj_slice(), f.values())
}

/// Quasi-total condition: an RDF where every 2-vertex has a positive
/// neighbor (1-vertices may be isolated among the positives).
pub fn is_qtrdf(g: &Graph, f: &VertexLabeling) -> bool {
    check_len(g, f);
    let (n, adj, vals) = (g.n(), g.adj_slice(), f.values());
    rdf_ok(n, adj, vals) && totality_ok(n, adj, vals, true)
}

/// Total condition: an RDF where the positive-labeled vertices induce a
/// subgraph without isolated vertices.
pub fn is_trdf(g: &Graph, f: &VertexLabeling) -> bool {
    check_len(g, f);
    let (n, adj, vals) = (g.n(), g.adj_slice(), f.values());
    rdf_ok(n, adj, vals) && totality_ok(n, adj, vals, false)
}

fn rdf_ok(n: usize, adj: &[u128], vals: &[u8]) -> bool {
    let twos = mask_of(vals, |x| x == 2);
    (0..n).all(|v| vals[v] != 0 || adj[v] & twos != 0)
}

fn totality_ok(n: usize, adj: &[u128], vals: &[u8], only_twos: bool) -> bool {
    let positives = mask_of(vals, |x| x > 0);
    (0..n).all(|v| {
        let needs = if only_twos { vals[v] == 2 } else { vals[v] > 0 };
        !needs || adj[v] & positives != 0
    })
}

fn mask_of(vals: &[u8], pred: impl Fn(u8) -> bool) -> u128 {
    let mut m = 0u128;
    for (v, &x) in vals.iter().enumerate() {
        if pred(x) {
            m |= 1u128 << v;
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Roman-type solver engine
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum RomanKind {
    /// Roman domination: no totality requirement.
    Plain,
    /// Quasi-total: every 2-vertex needs a positive neighbor.
    QuasiTotal,
    /// Total: every positive vertex needs a positive neighbor.
    Total,
}

/// Exact minimum weight over a raw adjacency slice.
///
/// With `stop_leq = Some(s)` the search may return early with any achievable
/// weight `<= s`; a returned value `> s` is a valid lower-bound certificate
/// (the true minimum is at least as large). With `None` the exact minimum is
/// returned. Callers must reject isolated vertices beforehand for the
/// quasi-total and total kinds.
pub(crate) fn roman_min_weight(
    n: usize,
    adj: &[u128],
    kind: RomanKind,
    stop_leq: Option<u32>,
) -> u32 {
    if n == 0 {
        return 0;
    }
    let comps = components_of(n, adj);
    if comps.len() == 1 {
        return solve_component(comps[0], adj, kind, stop_leq);
    }
    let mut total = 0u32;
    for (idx, comp) in comps.iter().enumerate() {
        if let Some(s) = stop_leq {
            let rest: u32 = comps[idx..]
                .iter()
                .map(|c| if c.len() == 1 { 1 } else { 2 })
                .sum();
            if total + rest > s {
                return total + rest;
            }
        }
        total += solve_component(*comp, adj, kind, None);
    }
    total
}

fn solve_component(comp: VertexSet, adj: &[u128], kind: RomanKind, stop_leq: Option<u32>) -> u32 {
    let verts: Vec<usize> = comp.iter().collect();
    let cn = verts.len();
    let mask = comp.bits();
    if cn == 1 {
        debug_assert!(kind == RomanKind::Plain, "isolated vertex reached solver");
        return 1;
    }
    // Components of order >= 2 are isolate-free, so the all-ones labeling is
    // feasible for every kind and seeds the upper bound.
    let best = cn as u32;
    if stop_leq.is_some_and(|s| best <= s) {
        return best;
    }

    // suffix_reach[i] = union of closed neighborhoods of verts[i..]
    let mut suffix_reach = vec![0u128; cn + 1];
    for i in (0..cn).rev() {
        suffix_reach[i] = suffix_reach[i + 1] | adj[verts[i]] | (1u128 << verts[i]);
    }
    let cover_cap = verts
        .iter()
        .map(|&v| (adj[v] & mask).count_ones() + 1)
        .max()
        .unwrap();

    let mut ctx = SolveCtx {
        verts: &verts,
        adj,
        mask,
        suffix_reach: &suffix_reach,
        cover_cap,
        kind,
        best,
        stop_leq,
        stopped: false,
    };
    let mut k = 1u32;
    while 2 * k < ctx.best && !ctx.stopped {
        descend(&mut ctx, k, 0, 0, 0, 0);
        k += 1;
    }
    ctx.best
}

struct SolveCtx<'a> {
    verts: &'a [usize],
    adj: &'a [u128],
    mask: u128,
    suffix_reach: &'a [u128],
    cover_cap: u32,
    kind: RomanKind,
    best: u32,
    stop_leq: Option<u32>,
    stopped: bool,
}

fn descend(
    ctx: &mut SolveCtx<'_>,
    k: u32,
    picked: u32,
    next: usize,
    chosen: u128,
    dominated: u128,
) {
    if picked == k {
        evaluate(ctx, k, chosen, dominated);
        return;
    }
    let remaining = k - picked;
    if (ctx.verts.len() - next) < remaining as usize {
        return;
    }
    let undominated = ctx.mask & !dominated;
    let unreachable = (undominated & !ctx.suffix_reach[next]).count_ones();
    if 2 * k + unreachable >= ctx.best {
        return;
    }
    let reachable = (undominated & ctx.suffix_reach[next]).count_ones();
    let forced = reachable.saturating_sub(remaining * ctx.cover_cap);
    if 2 * k + unreachable + forced >= ctx.best {
        return;
    }
    for i in next..ctx.verts.len() {
        let v = ctx.verts[i];
        descend(
            ctx,
            k,
            picked + 1,
            i + 1,
            chosen | (1u128 << v),
            dominated | ctx.adj[v] | (1u128 << v),
        );
        if ctx.stopped {
            return;
        }
    }
}

fn evaluate(ctx: &mut SolveCtx<'_>, k: u32, chosen: u128, dominated: u128) {
    let forced_ones = ctx.mask & !dominated;
    let base = 2 * k + forced_ones.count_ones();
    if base >= ctx.best {
        return;
    }
    let positives = chosen | forced_ones;
    let need_mask = match ctx.kind {
        RomanKind::Plain => 0,
        RomanKind::QuasiTotal => isolated_within(chosen, positives, ctx.adj),
        RomanKind::Total => isolated_within(positives, positives, ctx.adj),
    };
    let weight = if need_mask == 0 {
        base
    } else {
        let limit = ctx.best - base;
        match min_cover(need_mask, positives, ctx.mask, ctx.adj, limit) {
            Some(c) => base + c,
            None => return,
        }
    };
    if weight < ctx.best {
        ctx.best = weight;
        if ctx.stop_leq.is_some_and(|s| weight <= s) {
            ctx.stopped = true;
        }
    }
}

/// Members of `check` with no neighbor inside `positives`.
fn isolated_within(check: u128, positives: u128, adj: &[u128]) -> u128 {
    let mut out = 0u128;
    let mut bits = check;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & positives == 0 {
            out |= 1u128 << v;
        }
    }
    out
}

/// Exact minimum number of vertices outside `forbidden` that give every
/// target a neighbor, provided the answer is `< limit`.
fn min_cover(targets: u128, forbidden: u128, mask: u128, adj: &[u128], limit: u32) -> Option<u32> {
    if targets == 0 {
        return Some(0);
    }
    if limit == 0 {
        return None;
    }
    // branch on the target with the fewest candidates
    let mut pick_opts = 0u128;
    let mut pick_count = u32::MAX;
    let mut bits = targets;
    while bits != 0 {
        let t = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let opts = adj[t] & mask & !forbidden;
        let c = opts.count_ones();
        if c == 0 {
            return None;
        }
        if c < pick_count {
            pick_opts = opts;
            pick_count = c;
        }
    }
    let mut best: Option<u32> = None;
    let mut lim = limit;
    let mut opts = pick_opts;
    while opts != 0 {
        let u = opts.trailing_zeros() as usize;
        opts &= opts - 1;
        if lim <= 1 {
            break;
        }
        if let Some(c) = min_cover(targets & !adj[u], forbidden, mask, adj, lim - 1) {
            best = Some(c + 1);
            lim = c + 1;
        }
    }
    best
}

/// `true` iff a labeling of the requested kind with weight `<= w` exists.
pub(crate) fn roman_weight_leq(n: usize, adj: &[u128], kind: RomanKind, w: u32) -> bool {
    roman_min_weight(n, adj, kind, Some(w)) <= w
}

// ---------------------------------------------------------------------------
// Set-invariant engine (domination, total domination, vertex cover)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum SetKind {
    Dominating,
    TotalDominating,
    VertexCover,
}

pub(crate) fn min_set_size(n: usize, adj: &[u128], kind: SetKind, stop_leq: Option<u32>) -> u32 {
    if n == 0 {
        return 0;
    }
    let comps = components_of(n, adj);
    let mut total = 0u32;
    for (idx, comp) in comps.iter().enumerate() {
        if let Some(s) = stop_leq {
            let per_comp = match kind {
                SetKind::Dominating => 1,
                SetKind::TotalDominating => 2,
                SetKind::VertexCover => 0,
            };
            let rest = (comps.len() - idx) as u32 * per_comp;
            if total + rest > s {
                return total + rest;
            }
        }
        total += set_component(*comp, adj, kind, &mut None);
    }
    total
}

pub(crate) fn set_size_leq(n: usize, adj: &[u128], kind: SetKind, w: u32) -> bool {
    min_set_size(n, adj, kind, Some(w)) <= w
}

/// Exact minimum for one component; when `witness` is provided the first
/// (lexicographically least) optimal set is stored into it.
fn set_component(comp: VertexSet, adj: &[u128], kind: SetKind, witness: &mut Option<u128>) -> u32 {
    let verts: Vec<usize> = comp.iter().collect();
    let cn = verts.len();
    let mask = comp.bits();
    if cn == 1 {
        let k = match kind {
            SetKind::Dominating => 1,
            SetKind::VertexCover => 0,
            SetKind::TotalDominating => {
                debug_assert!(false, "isolated vertex reached total domination");
                0
            }
        };
        *witness = Some(if k == 1 { mask } else { 0 });
        return k;
    }

    // suffix reach: closed for domination, open for total domination
    let mut suffix = vec![0u128; cn + 1];
    for i in (0..cn).rev() {
        let v = verts[i];
        let r = match kind {
            SetKind::Dominating => adj[v] | (1u128 << v),
            SetKind::TotalDominating => adj[v],
            SetKind::VertexCover => 0,
        };
        suffix[i] = suffix[i + 1] | r;
    }

    for k in 0..=cn as u32 {
        let mut found: Option<u128> = None;
        set_descend(&verts, adj, mask, &suffix, kind, k, 0, 0, 0, &mut found);
        if let Some(set) = found {
            *witness = Some(set);
            return k;
        }
    }
    unreachable!("the full vertex set satisfies every set invariant");
}

#[allow(clippy::too_many_arguments)]
fn set_descend(
    verts: &[usize],
    adj: &[u128],
    mask: u128,
    suffix: &[u128],
    kind: SetKind,
    k: u32,
    next: usize,
    chosen: u128,
    covered: u128,
    found: &mut Option<u128>,
) {
    if chosen.count_ones() == k {
        let ok = match kind {
            SetKind::Dominating | SetKind::TotalDominating => covered & mask == mask,
            SetKind::VertexCover => {
                let outside = mask & !chosen;
                let mut bits = outside;
                let mut independent = true;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if adj[v] & outside != 0 {
                        independent = false;
                        break;
                    }
                }
                independent
            }
        };
        if ok {
            *found = Some(chosen);
        }
        return;
    }
    let remaining = k - chosen.count_ones();
    if (verts.len() - next) < remaining as usize {
        return;
    }
    if matches!(kind, SetKind::Dominating | SetKind::TotalDominating)
        && mask & !covered & !suffix[next] != 0
    {
        return; // some vertex can no longer be covered
    }
    for i in next..verts.len() {
        let v = verts[i];
        let cov = match kind {
            SetKind::Dominating => adj[v] | (1u128 << v),
            SetKind::TotalDominating => adj[v],
            SetKind::VertexCover => 0,
        };
        set_descend(
            verts,
            adj,
            mask,
            suffix,
            kind,
            k,
            i + 1,
            chosen | (1u128 << v),
            covered | cov,
            found,
        );
        if found.is_some() {
            return;
        }
    }
}

fn min_set_witness(g: &Graph, kind: SetKind) -> (u32, VertexSet) {
    let n = g.n();
    let adj = g.adj_slice();
    let mut total = 0u32;
    let mut set = VertexSet::EMPTY;
    for comp in components_of(n, adj) {
        let mut w: Option<u128> = None;
        total += set_component(comp, adj, kind, &mut w);
        set = set.union(VertexSet::from_bits(w.unwrap_or(0)));
    }
    (total, set)
}

// ---------------------------------------------------------------------------
// Lexicographically smallest witnesses for the Roman-type invariants
// ---------------------------------------------------------------------------

/// Smallest labeling (in lexicographic order of the value vector) among all
/// optima of the given kind.
fn lex_min_labeling(g: &Graph, kind: RomanKind) -> VertexLabeling {
    let n = g.n();
    let adj = g.adj_slice();
    let mut values = vec![0u8; n];
    for comp in components_of(n, adj) {
        let verts: Vec<usize> = comp.iter().collect();
        let target = solve_component(comp, adj, kind, None);
        let mut assigned = vec![0u8; verts.len()];
        let pos_of: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // check_at[i]: positions fully decided once position i is assigned
        let mut check_at: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let last = VertexSet::from_bits(adj[v] & comp.bits())
                .iter()
                .map(|u| pos_of[&u])
                .max()
                .unwrap_or(i)
                .max(i);
            check_at[last].push(i);
        }
        let ok = lex_descend(&verts, adj, kind, target, 0, 0, &mut assigned, &check_at);
        debug_assert!(ok, "no labeling at the optimal weight");
        for (i, &v) in verts.iter().enumerate() {
            values[v] = assigned[i];
        }
    }
    VertexLabeling::new(values)
}

#[allow(clippy::too_many_arguments)]
fn lex_descend(
    verts: &[usize],
    adj: &[u128],
    kind: RomanKind,
    target: u32,
    idx: usize,
    weight: u32,
    assigned: &mut [u8],
    check_at: &[Vec<usize>],
) -> bool {
    if idx == verts.len() {
        return weight == target;
    }
    for val in 0u8..=2 {
        let w = weight + val as u32;
        if w > target {
            break;
        }
        assigned[idx] = val;
        if checks_pass(verts, adj, kind, idx, assigned, check_at)
            && lex_descend(verts, adj, kind, target, idx + 1, w, assigned, check_at)
        {
            return true;
        }
    }
    assigned[idx] = 0;
    false
}

fn checks_pass(
    verts: &[usize],
    adj: &[u128],
    kind: RomanKind,
    idx: usize,
    assigned: &[u8],
    check_at: &[Vec<usize>],
) -> bool {
    // Positions whose whole neighborhood is assigned must already satisfy
    // their Roman and totality conditions; later assignments cannot fix them.
    for &p in &check_at[idx] {
        let v = verts[p];
        let val = assigned[p];
        if val == 0 {
            let mut has_two = false;
            for (q, &u) in verts.iter().enumerate() {
                if adj[v] >> u & 1 == 1 && assigned[q] == 2 {
                    has_two = true;
                    break;
                }
            }
            if !has_two {
                return false;
            }
        } else {
            let needs = match kind {
                RomanKind::Plain => false,
                RomanKind::QuasiTotal => val == 2,
                RomanKind::Total => true,
            };
            if needs {
                let mut has_pos = false;
                for (q, &u) in verts.iter().enumerate() {
                    if adj[v] >> u & 1 == 1 && assigned[q] > 0 {
                        has_pos = true;
                        break;
                    }
                }
                if !has_pos {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Public solvers
// ---------------------------------------------------------------------------

fn require_isolate_free(g: &Graph) -> Result<()> {
    if g.has_isolated_vertex() {
        Err(Error::IsolatedVertex)
    } else {
        Ok(())
    }
}

/// Domination number γ with a lexicographically smallest minimum
/// dominating set.
pub fn domination_number(g: &Graph) -> (u32, VertexSet) {
    min_set_witness(g, SetKind::Dominating)
}

pub fn domination_value(g: &Graph) -> u32 {
    min_set_size(g.n(), g.adj_slice(), SetKind::Dominating, None)
}

/// Total domination number γ_t; undefined on graphs with isolated vertices.
pub fn total_domination_number(g: &Graph) -> Result<(u32, VertexSet)> {
    require_isolate_free(g)?;
    Ok(min_set_witness(g, SetKind::TotalDominating))
}

pub fn total_domination_value(g: &Graph) -> Result<u32> {
    require_isolate_free(g)?;
    Ok(min_set_size(
        g.n(),
        g.adj_slice(),
        SetKind::TotalDominating,
        None,
    ))
}

/// Vertex cover number β.
pub fn vertex_cover_number(g: &Graph) -> (u32, VertexSet) {
    min_set_witness(g, SetKind::VertexCover)
}

pub fn vertex_cover_value(g: &Graph) -> u32 {
    min_set_size(g.n(), g.adj_slice(), SetKind::VertexCover, None)
}

/// Roman domination number γ_R with a lexicographically smallest witness.
pub fn roman_domination_number(g: &Graph) -> (u32, VertexLabeling) {
    let v = roman_domination_value(g);
    let w = lex_min_labeling(g, RomanKind::Plain);
    debug_assert_eq!(w.weight(), v);
    debug_assert!(is_rdf(g, &w));
    (v, w)
}

pub fn roman_domination_value(g: &Graph) -> u32 {
    roman_min_weight(g.n(), g.adj_slice(), RomanKind::Plain, None)
}

/// Quasi-total Roman domination number γ_qtR.
pub fn quasi_total_roman_domination_number(g: &Graph) -> Result<(u32, VertexLabeling)> {
    let v = quasi_total_roman_domination_value(g)?;
    let w = lex_min_labeling(g, RomanKind::QuasiTotal);
    debug_assert_eq!(w.weight(), v);
    debug_assert!(is_qtrdf(g, &w));
    Ok((v, w))
}

pub fn quasi_total_roman_domination_value(g: &Graph) -> Result<u32> {
    require_isolate_free(g)?;
    Ok(roman_min_weight(
        g.n(),
        g.adj_slice(),
        RomanKind::QuasiTotal,
        None,
    ))
}

/// Total Roman domination number γ_tR with a lexicographically smallest
/// witness labeling.
pub fn total_roman_domination_number(g: &Graph) -> Result<(u32, VertexLabeling)> {
    let v = total_roman_domination_value(g)?;
    let w = lex_min_labeling(g, RomanKind::Total);
    debug_assert_eq!(w.weight(), v);
    debug_assert!(is_trdf(g, &w));
    Ok((v, w))
}

pub fn total_roman_domination_value(g: &Graph) -> Result<u32> {
    require_isolate_free(g)?;
    Ok(roman_min_weight(
        g.n(),
        g.adj_slice(),
        RomanKind::Total,
        None,
    ))
}

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

fn oracle_min(g: &Graph, kind: RomanKind) -> Result<u32> {
    if g.n() > ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "enumeration oracle",
            n: g.n(),
            cap: ORACLE_CAP,
        });
    }
    if kind != RomanKind::Plain {
        require_isolate_free(g)?;
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = g.adj_slice();
    let mut vals = vec![0u8; n];
    let mut best = u32::MAX;
    loop {
        let ok = rdf_ok(n, adj, &vals)
            && match kind {
                RomanKind::Plain => true,
                RomanKind::QuasiTotal => totality_ok(n, adj, &vals, true),
                RomanKind::Total => totality_ok(n, adj, &vals, false),
            };
        if ok {
            let w = vals.iter().map(|&x| x as u32).sum();
            best = best.min(w);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            if vals[i] < 2 {
                vals[i] += 1;
                break;
            }
            vals[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive `3^n` oracle for γ_tR, independent of the decomposition path.
pub fn total_roman_domination_oracle(g: &Graph) -> Result<u32> {
    oracle_min(g, RomanKind::Total)
}

/// Exhaustive `3^n` oracle for γ_R.
pub fn roman_domination_oracle(g: &Graph) -> Result<u32> {
    oracle_min(g, RomanKind::Plain)
}

/// Exhaustive `3^n` oracle for γ_qtR.
pub fn quasi_total_roman_domination_oracle(g: &Graph) -> Result<u32> {
    oracle_min(g, RomanKind::QuasiTotal)
}

// ---------------------------------------------------------------------------
// All optimal TRDFs
// ---------------------------------------------------------------------------

/// Every minimum-weight TRDF, in lexicographic order of the value vectors.
pub fn all_minimum_trdfs(g: &Graph) -> Result<Vec<VertexLabeling>> {
    if g.n() > ALL_FUNCTIONS_CAP {
        return Err(Error::CapExceeded {
            what: "optimal-function enumeration",
            n: g.n(),
            cap: ALL_FUNCTIONS_CAP,
        });
    }
    let target = total_roman_domination_value(g)?;
    let n = g.n();
    let adj = g.adj_slice();
    let mut out = Vec::new();
    let mut vals = vec![0u8; n];
    collect_trdfs(n, adj, target, 0, 0, &mut vals, &mut out);
    Ok(out)
}

fn collect_trdfs(
    n: usize,
    adj: &[u128],
    target: u32,
    idx: usize,
    weight: u32,
    vals: &mut Vec<u8>,
    out: &mut Vec<VertexLabeling>,
) {
    if idx == n {
        if weight == target && rdf_ok(n, adj, vals) && totality_ok(n, adj, vals, false) {
            out.push(VertexLabeling::new(vals.clone()));
        }
        return;
    }
    for val in 0u8..=2 {
        let w = weight + val as u32;
        if w > target {
            break;
        }
        vals[idx] = val;
        if prefix_feasible(adj, vals, idx) {
            collect_trdfs(n, adj, target, idx + 1, w, vals, out);
        }
    }
    vals[idx] = 0;
}

/// Forward check for the enumeration: every vertex whose neighborhood lies
/// entirely within the assigned prefix must already be satisfied.
fn prefix_feasible(adj: &[u128], vals: &[u8], idx: usize) -> bool {
    let assigned = if idx + 1 >= 128 {
        u128::MAX
    } else {
        (1u128 << (idx + 1)) - 1
    };
    for v in 0..=idx {
        if adj[v] & !assigned != 0 {
            continue;
        }
        let mut has_two = false;
        let mut has_pos = false;
        let mut bits = adj[v];
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if vals[u] == 2 {
                has_two = true;
                has_pos = true;
            } else if vals[u] == 1 {
                has_pos = true;
            }
        }
        if vals[v] == 0 {
            if !has_two {
                return false;
            }
        } else if !has_pos {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// InvariantReport
// ---------------------------------------------------------------------------

/// All six invariants of one graph with one optimal witness each.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub gamma: u32,
    pub gamma_t: u32,
    #[serde(rename = "gamma_R")]
    pub gamma_r: u32,
    #[serde(rename = "gamma_qtR")]
    pub gamma_qtr: u32,
    #[serde(rename = "gamma_tR")]
    pub gamma_tr: u32,
    pub beta: u32,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    pub gamma: VertexSet,
    pub gamma_t: VertexSet,
    #[serde(rename = "gamma_R")]
    pub gamma_r: VertexLabeling,
    #[serde(rename = "gamma_qtR")]
    pub gamma_qtr: VertexLabeling,
    #[serde(rename = "gamma_tR")]
    pub gamma_tr: VertexLabeling,
    pub beta: VertexSet,
}

/// Computes every invariant and asserts the standard inequality chains
/// before returning. These chains are theorems; a violation means a solver
/// bug, so it panics rather than returning a bogus report.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    require_isolate_free(g)?;
    let (gamma, w_gamma) = domination_number(g);
    let (gamma_t, w_gamma_t) = total_domination_number(g)?;
    let (beta, w_beta) = vertex_cover_number(g);
    let (gamma_r, w_gamma_r) = roman_domination_number(g);
    let (gamma_qtr, w_gamma_qtr) = quasi_total_roman_domination_number(g)?;
    let (gamma_tr, w_gamma_tr) = total_roman_domination_number(g)?;

    assert!(gamma <= beta, "gamma <= beta violated");
    assert!(gamma <= gamma_t, "gamma <= gamma_t violated");
    assert!(
        gamma_r <= gamma_qtr && gamma_qtr <= gamma_tr,
        "gamma_R <= gamma_qtR <= gamma_tR violated"
    );
    assert!(
        gamma_t <= gamma_tr && gamma_tr <= 2 * gamma_t,
        "gamma_t <= gamma_tR <= 2 gamma_t violated"
    );
    assert!(
        2 * gamma <= gamma_tr && gamma_tr <= 3 * gamma,
        "2 gamma <= gamma_tR <= 3 gamma violated"
    );
    assert!(
        gamma <= gamma_r && gamma_r <= 2 * gamma,
        "gamma <= gamma_R <= 2 gamma violated"
    );

    Ok(InvariantReport {
        n: g.n(),
        gamma,
        gamma_t,
        gamma_r,
        gamma_qtr,
        gamma_tr,
        beta,
        witnesses: Witnesses {
            gamma: w_gamma,
            gamma_t: w_gamma_t,
            gamma_r: w_gamma_r,
            gamma_qtr: w_gamma_qtr,
            gamma_tr: w_gamma_tr,
            beta: w_beta,
        },
    })
}
