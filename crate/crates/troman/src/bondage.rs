//! Exact bondage numbers: the minimum number of edge removals that strictly
//! raises a domination-type invariant, for all five variants (b, b_t, b_R,
//! b_qtR, b_tR), with witness edge sets or infinity certificates.
//!
//! The plain and Roman variants allow the removal to create isolated
//! vertices (their invariants stay defined); the total variants require the
//! surviving graph to be isolate-free. For the total Roman variant the
//! structural recognizer settles infiniteness up front; the exhaustive
//! search is only a test oracle for that recognizer.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{infinite_bondage_class, InfinityClass};
use crate::graph::{EdgeSet, Graph};
use crate::invariants::{
    all_minimum_trdfs, domination_value, quasi_total_roman_domination_value,
    roman_domination_value, roman_weight_leq, set_size_leq, total_domination_value,
    total_roman_domination_value, RomanKind, SetKind, VertexLabeling,
};

/// Which invariant the edge removals must increase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BondageVariant {
    /// b: domination number, removals may isolate vertices.
    Domination,
    /// b_t: total domination, the surviving graph must be isolate-free.
    TotalDomination,
    /// b_R: Roman domination, removals may isolate vertices.
    Roman,
    /// b_qtR: quasi-total Roman, isolate-free survivors only.
    QuasiTotalRoman,
    /// b_tR: total Roman, isolate-free survivors only.
    TotalRoman,
}

impl BondageVariant {
    fn requires_isolate_free_removal(self) -> bool {
        matches!(
            self,
            BondageVariant::TotalDomination
                | BondageVariant::QuasiTotalRoman
                | BondageVariant::TotalRoman
        )
    }
}

/// Per-component infinity certificate: the class tags proving that no
/// admissible removal can raise the total Roman domination number.
/// Serializes as a bare array of `{component, class}` objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct InfinityCertificate {
    pub components: Vec<ComponentClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub component: usize,
    #[serde(flatten)]
    pub class: InfinityClass,
}

/// Result of a bondage computation.
///
/// `Finite` carries the lexicographically first minimum witness; removing
/// it keeps the graph isolate-free (for the total variants) and strictly
/// raises the invariant. `Infinite` carries a structural certificate for
/// the total Roman variant and `None` for the variants whose infiniteness
/// is established by search exhaustion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BondageResult {
    Finite {
        value: u32,
        witness: EdgeSet,
    },
    Infinite {
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<InfinityCertificate>,
    },
}

impl BondageResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, BondageResult::Finite { .. })
    }

    /// Finite value, or `None` for infinity.
    pub fn value(&self) -> Option<u32> {
        match self {
            BondageResult::Finite { value, .. } => Some(*value),
            BondageResult::Infinite { .. } => None,
        }
    }

    /// `self <= other` under the convention that infinity compares greater
    /// than every finite value and `infinity <= infinity` holds.
    pub fn le(&self, other: &BondageResult) -> bool {
        match (self.value(), other.value()) {
            (Some(a), Some(b)) => a <= b,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => true,
        }
    }

    /// `self <= other + k`, with `infinity + k = infinity`.
    pub fn le_plus(&self, other: &BondageResult, k: u32) -> bool {
        match (self.value(), other.value()) {
            (Some(a), Some(b)) => a <= b + k,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => true,
        }
    }
}

/// Base invariant value of the intact graph for a variant.
fn base_value(g: &Graph, variant: BondageVariant) -> Result<u32> {
    match variant {
        BondageVariant::Domination => Ok(domination_value(g)),
        BondageVariant::TotalDomination => total_domination_value(g),
        BondageVariant::Roman => Ok(roman_domination_value(g)),
        BondageVariant::QuasiTotalRoman => quasi_total_roman_domination_value(g),
        BondageVariant::TotalRoman => total_roman_domination_value(g),
    }
}

/// `true` iff the invariant of the graph described by `adj` still fits
/// within `base` (i.e. the removal did NOT raise it).
fn still_leq(n: usize, adj: &[u128], variant: BondageVariant, base: u32) -> bool {
    match variant {
        BondageVariant::Domination => set_size_leq(n, adj, SetKind::Dominating, base),
        BondageVariant::TotalDomination => set_size_leq(n, adj, SetKind::TotalDominating, base),
        BondageVariant::Roman => roman_weight_leq(n, adj, RomanKind::Plain, base),
        BondageVariant::QuasiTotalRoman => roman_weight_leq(n, adj, RomanKind::QuasiTotal, base),
        BondageVariant::TotalRoman => roman_weight_leq(n, adj, RomanKind::Total, base),
    }
}

struct EdgeSearch<'a> {
    edges: Vec<(usize, usize)>,
    adj: Vec<u128>,
    degree: Vec<u32>,
    n: usize,
    variant: BondageVariant,
    isolate_free_only: bool,
    base: u32,
    witness: Option<Vec<(usize, usize)>>,
    admissible_seen: bool,
    stack: Vec<(usize, usize)>,
    _g: &'a Graph,
}

impl<'a> EdgeSearch<'a> {
    fn new(g: &'a Graph, variant: BondageVariant, isolate_free_only: bool, base: u32) -> Self {
        EdgeSearch {
            edges: g.edges(),
            adj: g.adj_slice().to_vec(),
            degree: (0..g.n()).map(|v| g.degree(v) as u32).collect(),
            n: g.n(),
            variant,
            isolate_free_only,
            base,
            witness: None,
            admissible_seen: false,
            stack: Vec::new(),
            _g: g,
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u128 << v);
        self.adj[v] &= !(1u128 << u);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        self.stack.push((u, v));
    }

    fn restore(&mut self) {
        let (u, v) = self.stack.pop().unwrap();
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
        self.degree[u] += 1;
        self.degree[v] += 1;
    }

    /// Tries every k-subset of the edges in lexicographic order; the first
    /// admissible subset whose removal raises the invariant is kept.
    fn level(&mut self, k: usize) -> bool {
        self.admissible_seen = false;
        self.descend(k, 0);
        self.witness.is_some()
    }

    fn descend(&mut self, k: usize, next: usize) {
        if self.witness.is_some() {
            return;
        }
        if self.stack.len() == k {
            if self.isolate_free_only && self.degree.contains(&0) {
                return;
            }
            self.admissible_seen = true;
            if !still_leq(self.n, &self.adj, self.variant, self.base) {
                self.witness = Some(self.stack.clone());
            }
            return;
        }
        let needed = k - self.stack.len();
        if self.edges.len() - next < needed {
            return;
        }
        for i in next..self.edges.len() {
            let (u, v) = self.edges[i];
            self.remove(u, v);
            self.descend(k, i + 1);
            self.restore();
            if self.witness.is_some() {
                return;
            }
        }
    }
}

fn bondage_search(
    g: &Graph,
    variant: BondageVariant,
    isolate_free_only: bool,
) -> Result<BondageResult> {
    if g.has_isolated_vertex() && variant.requires_isolate_free_removal() {
        return Err(Error::IsolatedVertex);
    }
    let base = base_value(g, variant)?;
    let mut search = EdgeSearch::new(g, variant, isolate_free_only, base);
    for k in 1..=g.m() {
        if search.level(k) {
            let witness = EdgeSet::new(search.witness.take().unwrap());
            return Ok(BondageResult::Finite {
                value: k as u32,
                witness,
            });
        }
        if !search.admissible_seen {
            break; // isolation is monotone: larger subsets stay inadmissible
        }
    }
    Ok(BondageResult::Infinite { certificate: None })
}

/// Layered search over removal sets of size 1, 2, ... for any variant.
/// Returns `Infinite { certificate: None }` when the admissible search
/// space is exhausted without a witness. The domination and Roman variants
/// accept isolating removals (their invariants stay defined); the total
/// variants do not.
pub fn bondage_number(g: &Graph, variant: BondageVariant) -> Result<BondageResult> {
    bondage_search(g, variant, variant.requires_isolate_free_removal())
}

/// Bondage with the removal additionally required to keep the graph
/// isolate-free, whatever the variant. For the total variants this equals
/// [`bondage_number`]; for the domination and Roman variants it is the
/// stricter notion under which the conditional inequalities relating them
/// to the total variants hold.
pub fn isolate_free_bondage(g: &Graph, variant: BondageVariant) -> Result<BondageResult> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    bondage_search(g, variant, true)
}

/// Structural infinity test for the total Roman bondage number: every
/// component must belong to one of the recognized classes.
pub fn infinite_certificate(g: &Graph) -> Result<Option<InfinityCertificate>> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let mut components = Vec::new();
    for (idx, comp) in g.components().into_iter().enumerate() {
        let (sub, _) = g.induced_subgraph(comp);
        match infinite_bondage_class(&sub)? {
            Some(class) => components.push(ComponentClass {
                component: idx,
                class,
            }),
            None => return Ok(None),
        }
    }
    Ok(Some(InfinityCertificate { components }))
}

/// Total Roman bondage number b_tR. The structural recognizer decides
/// infiniteness; otherwise the layered search finds the minimum witness.
/// If the recognizer claims a finite value but the search exhausts without
/// a witness, the characterization itself would be false; this is reported
/// as a loud internal-inconsistency error rather than a result.
pub fn total_roman_bondage(g: &Graph) -> Result<BondageResult> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    if let Some(cert) = infinite_certificate(g)? {
        return Ok(BondageResult::Infinite {
            certificate: Some(cert),
        });
    }
    match bondage_number(g, BondageVariant::TotalRoman)? {
        BondageResult::Infinite { .. } => Err(Error::Inconsistency {
            detail: "recognizer claims finite total Roman bondage but exhaustive search \
                     found no admissible increasing removal"
                .into(),
            graph6: g.to_graph6(),
        }),
        finite => Ok(finite),
    }
}

/// Test oracle: exhaustively confirms that no admissible removal set of any
/// size raises the total Roman domination number. Runs in `O(2^m)`; used to
/// validate the structural recognizer, never on the main path.
pub fn no_witness_by_exhaustion(g: &Graph) -> Result<bool> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    Ok(matches!(
        bondage_number(g, BondageVariant::TotalRoman)?,
        BondageResult::Infinite { .. }
    ))
}

// ---------------------------------------------------------------------------
// Single-edge characterization
// ---------------------------------------------------------------------------

/// Decides whether one edge removal suffices, by the optimal-function
/// criterion: some edge `uv` with `G - uv` isolate-free must, for every
/// minimum TRDF `f = (V_0, V_1, V_2)`, either isolate a positive vertex in
/// the positive subgraph minus `uv`, or join a 2-vertex to one of its
/// private 0-neighbors. Returns the first qualifying edge.
pub fn single_edge_characterization(g: &Graph) -> Result<(bool, Option<(usize, usize)>)> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let functions = all_minimum_trdfs(g)?;
    for (u, v) in g.edges() {
        if g.degree(u) < 2 || g.degree(v) < 2 {
            continue; // removal would isolate an endpoint
        }
        if functions.iter().all(|f| edge_breaks(g, f, u, v)) {
            return Ok((true, Some((u, v))));
        }
    }
    Ok((false, None))
}

fn edge_breaks(g: &Graph, f: &VertexLabeling, u: usize, v: usize) -> bool {
    let positives = f.positives();
    // (i) the positive subgraph minus uv has an isolated vertex
    for w in positives.iter() {
        let mut nbrs = g.neighbors(w).intersection(positives);
        if w == u {
            nbrs.remove(v);
        }
        if w == v {
            nbrs.remove(u);
        }
        if nbrs.is_empty() {
            return true;
        }
    }
    // (ii) one endpoint is a 2 and the other its private 0-neighbor
    let twos = f.level_set(2);
    let zeros = f.level_set(0);
    let private_pair = |a: usize, b: usize| -> bool {
        f.value(a) == 2 && zeros.contains(b) && g.epn(a, twos).contains(b)
    };
    private_pair(u, v) || private_pair(v, u)
}

// ---------------------------------------------------------------------------
// Removal sandwich
// ---------------------------------------------------------------------------

/// Outcome of removing a minimum bondage witness: the new weight always
/// lands on `base + 1` or `base + 2`.
#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    #[serde(rename = "gamma_tR")]
    pub gamma_tr: u32,
    #[serde(rename = "b_tR")]
    pub b_tr: u32,
    pub witness: EdgeSet,
    #[serde(rename = "gamma_tR_removed")]
    pub gamma_tr_removed: u32,
    /// `+1` when the lower bound is tight, `+2` for the upper.
    pub increase: u32,
}

/// Removes the computed minimum witness and reports which side of the
/// two-sided bound is attained. Requires finite total Roman bondage.
pub fn sandwich_check(g: &Graph) -> Result<SandwichReport> {
    let gamma_tr = total_roman_domination_value(g)?;
    let (b_tr, witness) = match total_roman_bondage(g)? {
        BondageResult::Finite { value, witness } => (value, witness),
        BondageResult::Infinite { .. } => {
            return Err(Error::Inconsistency {
                detail: "sandwich check requires finite total Roman bondage".into(),
                graph6: g.to_graph6(),
            })
        }
    };
    let removed = g.remove_edges(&witness)?;
    let gamma_tr_removed = total_roman_domination_value(&removed)?;
    if gamma_tr_removed < gamma_tr + 1 || gamma_tr_removed > gamma_tr + 2 {
        return Err(Error::Inconsistency {
            detail: format!(
                "removing a minimum witness moved the weight from {gamma_tr} to \
                 {gamma_tr_removed}, outside the two-sided bound"
            ),
            graph6: g.to_graph6(),
        });
    }
    Ok(SandwichReport {
        gamma_tr,
        b_tr,
        witness,
        gamma_tr_removed,
        increase: gamma_tr_removed - gamma_tr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn gen(spec: &FamilySpec) -> Graph {
        generate(spec).unwrap().graph
    }

    fn btr(g: &Graph) -> BondageResult {
        total_roman_bondage(g).unwrap()
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(btr(&gen(&FamilySpec::Complete(4))).value(), Some(2));
        assert_eq!(btr(&gen(&FamilySpec::Complete(5))).value(), Some(3));
        assert_eq!(btr(&gen(&FamilySpec::Wheel(5))).value(), Some(1));
        assert_eq!(
            btr(&gen(&FamilySpec::CompleteBipartite(2, 3))).value(),
            Some(2)
        );
        assert_eq!(btr(&gen(&FamilySpec::Spider(2, 4))).value(), Some(2));
        assert_eq!(btr(&gen(&FamilySpec::Broom(4, 3))).value(), Some(1));
        assert_eq!(
            btr(&gen(&FamilySpec::DoubleBroom(3, 2, 2))).value(),
            Some(1)
        );
    }

    #[test]
    fn infinite_cases_carry_certificates() {
        match btr(&gen(&FamilySpec::Path(7))) {
            BondageResult::Infinite {
                certificate: Some(cert),
            } => {
                assert_eq!(cert.components.len(), 1);
                assert_eq!(cert.components[0].class, InfinityClass::Path);
            }
            other => panic!("expected infinite, got {other:?}"),
        }
        // K_3 is the 3-cycle: both 2-subsets of its edges isolate a vertex
        match btr(&gen(&FamilySpec::Complete(3))) {
            BondageResult::Infinite {
                certificate: Some(cert),
            } => assert_eq!(cert.components[0].class, InfinityClass::Cycle),
            other => panic!("expected infinite for K_3, got {other:?}"),
        }
        // disjoint union of infinite-class components
        let g = gen(&FamilySpec::Path(4))
            .disjoint_union(&gen(&FamilySpec::Cycle(5)))
            .unwrap();
        match btr(&g) {
            BondageResult::Infinite {
                certificate: Some(cert),
            } => {
                assert_eq!(cert.components.len(), 2);
            }
            other => panic!("expected infinite, got {other:?}"),
        }
    }

    #[test]
    fn structural_matches_exhaustion_on_samples() {
        for spec in [
            FamilySpec::Path(5),
            FamilySpec::Cycle(6),
            FamilySpec::Star(3),
            FamilySpec::Spider(1, 3),
            FamilySpec::Spider(2, 3),
            FamilySpec::Complete(4),
            FamilySpec::Bistar(2, 2),
        ] {
            let g = gen(&spec);
            let structural = infinite_certificate(&g).unwrap().is_some();
            let exhausted = no_witness_by_exhaustion(&g).unwrap();
            assert_eq!(structural, exhausted, "mismatch on {spec}");
        }
    }

    #[test]
    fn witness_is_minimal_and_admissible() {
        let k4 = gen(&FamilySpec::Complete(4));
        if let BondageResult::Finite { value, witness } = btr(&k4) {
            assert_eq!(value, 2);
            assert_eq!(witness.len(), 2);
            // lexicographically first success: removing the matching
            // {01, 23} leaves a 4-cycle, and no earlier pair works
            assert_eq!(witness, EdgeSet::new([(0, 1), (2, 3)]));
            let removed = k4.remove_edges(&witness).unwrap();
            assert!(!removed.has_isolated_vertex());
            let before = total_roman_domination_value(&k4).unwrap();
            let after = total_roman_domination_value(&removed).unwrap();
            assert!(after > before);
            // no single edge works
            for (u, v) in k4.edges() {
                let h = k4.remove_edge(u, v).unwrap();
                assert_eq!(total_roman_domination_value(&h).unwrap(), before);
            }
        } else {
            panic!("K_4 must have finite bondage");
        }
    }

    #[test]
    fn other_variants() {
        // b(K_2) = 1: removing the only edge lifts domination from 1 to 2
        let k2 = gen(&FamilySpec::Complete(2));
        assert_eq!(
            bondage_number(&k2, BondageVariant::Domination)
                .unwrap()
                .value(),
            Some(1)
        );
        // ... while the total variants cannot remove anything from K_2
        assert_eq!(
            bondage_number(&k2, BondageVariant::TotalDomination)
                .unwrap()
                .value(),
            None
        );

        let k23 = gen(&FamilySpec::CompleteBipartite(2, 3));
        assert_eq!(
            bondage_number(&k23, BondageVariant::TotalDomination)
                .unwrap()
                .value(),
            Some(2)
        );

        // b_t(C_4) by exhaustive search: opposite edges split into 2 K_2
        let c4 = gen(&FamilySpec::Cycle(4));
        assert_eq!(
            bondage_number(&c4, BondageVariant::TotalDomination)
                .unwrap()
                .value(),
            Some(2)
        );
    }

    #[test]
    fn infinity_comparisons() {
        let fin1 = BondageResult::Finite {
            value: 1,
            witness: EdgeSet::new([(0, 1)]),
        };
        let fin3 = BondageResult::Finite {
            value: 3,
            witness: EdgeSet::new([(0, 1), (0, 2), (1, 2)]),
        };
        let inf = BondageResult::Infinite { certificate: None };
        assert!(fin1.le(&fin3));
        assert!(fin3.le(&inf));
        assert!(!inf.le(&fin3));
        assert!(inf.le(&inf));
        assert!(inf.le_plus(&inf, 2));
        assert!(fin3.le_plus(&fin1, 2));
        assert!(!fin3.le_plus(&fin1, 1));
    }

    #[test]
    fn single_edge_criterion_examples() {
        let broom = gen(&FamilySpec::Broom(3, 2));
        let (one, edge) = single_edge_characterization(&broom).unwrap();
        assert!(one);
        assert!(edge.is_some());
        assert_eq!(btr(&broom).value(), Some(1));

        let k4 = gen(&FamilySpec::Complete(4));
        let (one, edge) = single_edge_characterization(&k4).unwrap();
        assert!(!one);
        assert!(edge.is_none());
    }

    #[test]
    fn every_minimum_witness_of_k4_respects_the_sandwich() {
        // enumerate ALL minimum witnesses, not just the lexicographic one
        let k4 = gen(&FamilySpec::Complete(4));
        let before = total_roman_domination_value(&k4).unwrap();
        let edges = k4.edges();
        let mut count = 0;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let set = EdgeSet::new([edges[i], edges[j]]);
                let h = k4.remove_edges(&set).unwrap();
                if h.has_isolated_vertex() {
                    continue;
                }
                let after = total_roman_domination_value(&h).unwrap();
                if after > before {
                    count += 1;
                    assert!(
                        after == before + 1 || after == before + 2,
                        "witness {set:?} moved the weight from {before} to {after}"
                    );
                }
            }
        }
        assert!(count > 0, "K_4 must have at least one 2-edge witness");
    }

    #[test]
    fn sandwich_sharpness_on_bistars() {
        // both centers with >= 2 leaves: removal hits the upper bound
        let up = sandwich_check(&gen(&FamilySpec::Bistar(2, 3))).unwrap();
        assert_eq!(up.increase, 2);
        assert_eq!(up.b_tr, 1);

        // one single-leaf center: removal hits the lower bound
        let low = sandwich_check(&gen(&FamilySpec::Bistar(1, 4))).unwrap();
        assert_eq!(low.increase, 1);
        assert_eq!(low.b_tr, 1);

        // every minimum witness of K_4 stays inside the bound
        let r = sandwich_check(&gen(&FamilySpec::Complete(4))).unwrap();
        assert!(r.increase == 1 || r.increase == 2);
    }

    #[test]
    fn json_shapes() {
        let fin = btr(&gen(&FamilySpec::Complete(4)));
        let v = serde_json::to_value(&fin).unwrap();
        assert_eq!(v["kind"], "finite");
        assert_eq!(v["value"], 2);
        assert!(v["witness"].is_array());

        let inf = btr(&gen(&FamilySpec::Cycle(5)));
        let v = serde_json::to_value(&inf).unwrap();
        assert_eq!(v["kind"], "infinite");
        assert_eq!(v["certificate"][0]["class"], "Cycle");
        assert_eq!(v["certificate"][0]["component"], 0);
    }

    #[test]
    fn isolating_witnesses_separate_the_two_bondage_notions() {
        // gamma = gamma_t = 2 here, yet removing the pendant edge (0,4)
        // isolates 4 and lifts gamma to 3, so the unrestricted bondage is 1
        // while any isolate-free removal set needs 2 edges.
        let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5)])
            .unwrap();
        assert_eq!(crate::invariants::domination_value(&g), 2);
        assert_eq!(crate::invariants::total_domination_value(&g).unwrap(), 2);
        let plain = bondage_number(&g, BondageVariant::Domination).unwrap();
        assert_eq!(plain.value(), Some(1));
        // no isolate-free removal set can raise gamma here at all
        let restricted = isolate_free_bondage(&g, BondageVariant::Domination).unwrap();
        assert_eq!(restricted.value(), None);
        let b_t = bondage_number(&g, BondageVariant::TotalDomination).unwrap();
        assert_eq!(b_t.value(), Some(2));
        // b_t <= restricted holds; b_t <= plain does not
        assert!(b_t.le(&restricted));
        assert!(!b_t.le(&plain));
    }

    #[test]
    fn isolated_inputs_rejected() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            total_roman_bondage(&g),
            Err(Error::IsolatedVertex)
        ));
        assert!(matches!(
            infinite_certificate(&g),
            Err(Error::IsolatedVertex)
        ));
    }
}
