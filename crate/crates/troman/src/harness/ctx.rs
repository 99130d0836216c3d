//! Per-graph evaluation context with lazy caching, so each invariant is
//! computed at most once per corpus graph no matter how many checks ask
//! for it.

use std::cell::OnceCell;

use crate::bondage::{
    bondage_number, isolate_free_bondage, total_roman_bondage, BondageResult, BondageVariant,
};
use crate::error::Result;
use crate::families::{full_weight_class, FullWeightClass};
use crate::graph::Graph;
use crate::harness::corpus::CorpusItem;
use crate::invariants::{
    all_minimum_trdfs, domination_value, quasi_total_roman_domination_value,
    roman_domination_value, total_domination_value, total_roman_domination_value,
    vertex_cover_value, VertexLabeling,
};

pub struct GraphCtx<'a> {
    pub item: &'a CorpusItem,
    gamma: OnceCell<u32>,
    gamma_t: OnceCell<u32>,
    gamma_r: OnceCell<u32>,
    gamma_qtr: OnceCell<u32>,
    gamma_tr: OnceCell<u32>,
    beta: OnceCell<u32>,
    b: OnceCell<Result<BondageResult>>,
    b_t: OnceCell<Result<BondageResult>>,
    b_r: OnceCell<Result<BondageResult>>,
    b_qtr: OnceCell<Result<BondageResult>>,
    b_tr: OnceCell<Result<BondageResult>>,
    b_restricted: OnceCell<Result<BondageResult>>,
    b_r_restricted: OnceCell<Result<BondageResult>>,
    all_trdfs: OnceCell<Result<Vec<VertexLabeling>>>,
    full_weight: OnceCell<Option<FullWeightClass>>,
}

impl<'a> GraphCtx<'a> {
    pub fn new(item: &'a CorpusItem) -> Self {
        GraphCtx {
            item,
            gamma: OnceCell::new(),
            gamma_t: OnceCell::new(),
            gamma_r: OnceCell::new(),
            gamma_qtr: OnceCell::new(),
            gamma_tr: OnceCell::new(),
            beta: OnceCell::new(),
            b: OnceCell::new(),
            b_t: OnceCell::new(),
            b_r: OnceCell::new(),
            b_qtr: OnceCell::new(),
            b_tr: OnceCell::new(),
            b_restricted: OnceCell::new(),
            b_r_restricted: OnceCell::new(),
            all_trdfs: OnceCell::new(),
            full_weight: OnceCell::new(),
        }
    }

    pub fn g(&self) -> &Graph {
        &self.item.graph
    }

    pub fn gamma(&self) -> u32 {
        *self.gamma.get_or_init(|| domination_value(self.g()))
    }

    pub fn gamma_t(&self) -> u32 {
        *self
            .gamma_t
            .get_or_init(|| total_domination_value(self.g()).expect("corpus is isolate-free"))
    }

    pub fn gamma_r(&self) -> u32 {
        *self
            .gamma_r
            .get_or_init(|| roman_domination_value(self.g()))
    }

    pub fn gamma_qtr(&self) -> u32 {
        *self.gamma_qtr.get_or_init(|| {
            quasi_total_roman_domination_value(self.g()).expect("corpus is isolate-free")
        })
    }

    pub fn gamma_tr(&self) -> u32 {
        *self
            .gamma_tr
            .get_or_init(|| total_roman_domination_value(self.g()).expect("corpus is isolate-free"))
    }

    pub fn beta(&self) -> u32 {
        *self.beta.get_or_init(|| vertex_cover_value(self.g()))
    }

    pub fn bondage(&self, variant: BondageVariant) -> &Result<BondageResult> {
        let cell = match variant {
            BondageVariant::Domination => &self.b,
            BondageVariant::TotalDomination => &self.b_t,
            BondageVariant::Roman => &self.b_r,
            BondageVariant::QuasiTotalRoman => &self.b_qtr,
            BondageVariant::TotalRoman => &self.b_tr,
        };
        cell.get_or_init(|| match variant {
            // the total Roman variant goes through the recognizer-first path
            BondageVariant::TotalRoman => total_roman_bondage(self.g()),
            other => bondage_number(self.g(), other),
        })
    }

    pub fn b_tr(&self) -> &Result<BondageResult> {
        self.bondage(BondageVariant::TotalRoman)
    }

    /// Domination or Roman bondage restricted to isolate-free removals.
    pub fn restricted_bondage(&self, variant: BondageVariant) -> &Result<BondageResult> {
        let cell = match variant {
            BondageVariant::Domination => &self.b_restricted,
            BondageVariant::Roman => &self.b_r_restricted,
            _ => panic!("restricted bondage is only cached for the unconstrained variants"),
        };
        cell.get_or_init(|| isolate_free_bondage(self.g(), variant))
    }

    pub fn all_trdfs(&self) -> &Result<Vec<VertexLabeling>> {
        self.all_trdfs.get_or_init(|| all_minimum_trdfs(self.g()))
    }

    /// Full-weight recognizer; `None` when the graph is disconnected (the
    /// characterization only speaks about connected graphs).
    pub fn full_weight(&self) -> Option<FullWeightClass> {
        *self
            .full_weight
            .get_or_init(|| full_weight_class(self.g()).ok().flatten())
    }
}
