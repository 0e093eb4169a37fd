//! Exact toolkit for edge-weighted clique factors.
//!
//! Given an edge weighting of `K_n` with values in `[0, 1]`, a clique size `r`
//! and a target average `t`, the central question is whether `K_n` splits
//! into `n / r` disjoint `r`-cliques each of total weight at least
//! `t * C(r, 2)`, and how large the minimum weighted degree must be to force
//! such a split.
//!
//! - [`graph`]: weighted complete graphs, degrees, heaviness predicates.
//! - [`constructions`]: extremal weightings and seeded random instances.
//! - [`solver`]: exact backtracking, hypergraph matching, clique counting and
//!   maximum heavy collections.
//! - [`matching`]: general and bipartite maximum matching.
//! - [`schemes`]: constructive factor builders (quotient/lift, random
//!   partition plus bipartite matching, local search).
//! - [`lab`]: lower-bound certification, adversarial search and grid scans.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod lab;
pub mod matching;
pub mod rational;
pub mod schemes;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{
    CliqueFactor, FactorParams, Strictness, ThresholdGraph, Vertex, WeightedCompleteGraph,
};
pub use rational::{q, Rational};
