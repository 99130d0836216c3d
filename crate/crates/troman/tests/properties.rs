//! Property tests for the structural invariants of the graph type and the
//! solver witnesses.

use proptest::prelude::*;

use troman::graph::{parse_graph6, Graph, VertexSet};
use troman::invariants::{
    is_qtrdf, is_rdf, is_trdf, quasi_total_roman_domination_number, roman_domination_number,
    total_roman_domination_number, total_roman_domination_oracle,
};
use troman::EdgeSet;

/// Arbitrary simple graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        let enc = g.to_graph6();
        prop_assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list_text(&g.to_edge_list_text()).unwrap(), g);
    }

    #[test]
    fn remove_then_add_back_is_identity(g in arb_graph(10), picks in prop::collection::vec(any::<u16>(), 1..5)) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let subset: Vec<(usize, usize)> = picks
            .iter()
            .map(|&p| edges[p as usize % edges.len()])
            .collect();
        let set = EdgeSet::new(subset);
        let mut h = g.remove_edges(&set).unwrap();
        for (u, v) in set.iter() {
            h = h.add_edge(u, v).unwrap();
        }
        prop_assert_eq!(h, g);
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(16)) {
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, g.n());
        let mut seen = VertexSet::EMPTY;
        for c in &comps {
            prop_assert!(seen.intersection(*c).is_empty());
            seen = seen.union(*c);
        }
        prop_assert_eq!(seen, VertexSet::full(g.n()));
    }

    #[test]
    fn private_neighborhoods_avoid_the_set(g in arb_graph(10), bits in any::<u16>()) {
        let s = VertexSet::from_bits(u128::from(bits) & VertexSet::full(g.n()).bits());
        prop_assume!(!s.is_empty());
        for v in s.iter() {
            let pn = g.epn(v, s);
            prop_assert!(pn.intersection(s).is_empty());
            for w in pn.iter() {
                prop_assert_eq!(g.neighbors(w).intersection(s), VertexSet::singleton(v));
            }
        }
    }

    #[test]
    fn roman_witness_is_lex_minimal(g in arb_graph(6)) {
        prop_assume!(!g.has_isolated_vertex());
        let (v, f) = roman_domination_number(&g);
        // brute-force the lexicographically smallest optimal labeling
        let n = g.n();
        let mut best: Option<Vec<u8>> = None;
        let mut vals = vec![0u8; n];
        loop {
            let lab = troman::invariants::VertexLabeling::new(vals.clone());
            if lab.weight() == v
                && is_rdf(&g, &lab)
                && best.as_ref().is_none_or(|b| &vals < b)
            {
                best = Some(vals.clone());
            }
            let mut i = n;
            loop {
                if i == 0 { break; }
                i -= 1;
                if vals[i] < 2 { vals[i] += 1; break; }
                vals[i] = 0;
            }
            if vals.iter().all(|&x| x == 0) { break; }
        }
        let best = best.unwrap();
        prop_assert_eq!(f.values(), best.as_slice());
    }

    #[test]
    fn solver_witnesses_check_out(g in arb_graph(8)) {
        prop_assume!(!g.has_isolated_vertex());
        let (v, f) = total_roman_domination_number(&g).unwrap();
        prop_assert!(is_trdf(&g, &f));
        prop_assert_eq!(f.weight(), v);
        prop_assert_eq!(v, total_roman_domination_oracle(&g).unwrap());

        let (vr, fr) = roman_domination_number(&g);
        prop_assert!(is_rdf(&g, &fr));
        prop_assert_eq!(fr.weight(), vr);

        let (vq, fq) = quasi_total_roman_domination_number(&g).unwrap();
        prop_assert!(is_qtrdf(&g, &fq));
        prop_assert_eq!(fq.weight(), vq);
        prop_assert!(vr <= vq && vq <= v);
    }
}
