//! Minimum (n,k,t)-graphs.
//!
//! An (n,k,t)-graph has `n` vertices and every `k` of them induce a clique
//! on `t` vertices. Its minimum-edge members are disjoint unions of cliques,
//! which turns the extremal problem into integer-partition optimization.
//! This crate provides the graph primitives, membership tests, the closed
//! forms and recursive construction of minimum graphs, and exhaustive
//! searches that check all of it against every small graph.

pub mod canon;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod params;
pub mod search;
pub mod union;
pub mod verify;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use error::{Infeasible, NktError, Result};
pub use extremal::{
    candidate_decompositions, construct_g_prime, feasible_min_partition, min_nkt,
    min_nkt_alpha_at_most, min_nktr, recursive_min_construct, special_case, CandidateDecomposition,
    Construction, Constructor, ExtremalRecord,
};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use params::{NktParams, Regime};
pub use search::{Catalog, SearchConfig, SearchReport};
pub use union::{binomial, CliqueUnion};
pub use verify::{is_nkt, is_nkt_oracle, is_nktr, max_kt_free_size, remove_independent_set};
