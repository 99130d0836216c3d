//! Exact computation of total Roman domination and total Roman bondage
//! numbers on small graphs.
//!
//! The crate is organized around an immutable bitset-backed [`graph::Graph`]
//! and provides:
//!
//! - [`invariants`]: exact solvers for the domination-type numbers
//!   γ, γ_t, β, γ_R, γ_qtR and γ_tR, each with an independent brute-force
//!   oracle and witness extraction;
//! - [`bondage`]: exact bondage numbers b, b_t, b_R, b_qtR and b_tR with
//!   witness edge sets or structural infinity certificates;
//! - [`families`]: generators, closed-form expected values and structural
//!   recognizers for the named graph families (paths, cycles, spiders,
//!   brooms, coronas, ...);
//! - [`reduction`]: the 3-SAT to total-Roman-bondage instance builder and
//!   its verification harness;
//! - [`harness`]: corpus generation and the property-suite runner that
//!   checks every supported statement on desk-scale corpora.
//!
//! All solvers are exponential-time exact searches and are intended for
//! graphs up to [`MAX_VERTICES`] vertices.

pub mod bondage;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod reduction;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet, MAX_VERTICES};
