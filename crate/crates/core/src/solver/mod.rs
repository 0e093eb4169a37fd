//! Exact search for heavy clique factors, heavy-clique counting, the
//! hypergraph-matching route, and maximum heavy collections.

mod backtrack;
mod collections;
mod enumerate;
mod facts;
mod hypergraph;

pub use backtrack::{find_heavy_factor, SolveCertificate, SolveOutcome};
pub use collections::{enumerate_maximum_heavy_collections, HeavyCollection};
pub use enumerate::{count_factors, enumerate_all_factors, FactorEnumerator};
pub use facts::{check_facts_at_maximum, FactCheck, FactKind, FactsReport};
pub use hypergraph::{
    build_heavy_hypergraph, daykin_haggkvist_check, daykin_haggkvist_threshold,
    heavy_cliques_containing, hypergraph_perfect_matching, lemma1_bound, HeavyHypergraph,
};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial_q, FactorParams, Strictness, Vertex, WeightedCompleteGraph};
use crate::rational::Rational;

/// Vertex sets are packed into a `u64`, which bounds every exact search.
pub const MAX_SEARCH_VERTICES: usize = 64;

/// Enumeration and certification limits. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverCaps {
    /// Largest `n` for [`enumerate_all_factors`].
    pub factor_enumeration: usize,
    /// Largest `n` for [`enumerate_maximum_heavy_collections`].
    pub collection_enumeration: usize,
    /// Largest `n` on which lower bounds are certified by exhaustion.
    pub certification: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            factor_enumeration: 12,
            collection_enumeration: 10,
            certification: 18,
        }
    }
}

/// Which exact route decides factor existence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    Backtrack,
    Hypergraph,
    Oracle,
}

/// Decides factor existence with the chosen route and wraps the result in a certificate.
pub fn solve(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    strictness: Strictness,
    method: SolveMethod,
    caps: &SolverCaps,
) -> Result<SolveCertificate> {
    match method {
        SolveMethod::Backtrack => find_heavy_factor(g, params, strictness),
        SolveMethod::Hypergraph => {
            let h = build_heavy_hypergraph(g, params, strictness)?;
            let (found, nodes) = hypergraph::perfect_matching_with_stats(&h)?;
            Ok(SolveCertificate::from_blocks(
                g.n(),
                params,
                strictness,
                found,
                nodes,
            )?)
        }
        SolveMethod::Oracle => {
            let mut nodes = 0u64;
            let mut found = None;
            for factor in enumerate_all_factors(g.n(), params.r(), caps.factor_enumeration)? {
                nodes += 1;
                if factor.is_heavy(g, params, strictness)? {
                    found = Some(factor.blocks().to_vec());
                    break;
                }
            }
            Ok(SolveCertificate::from_blocks(
                g.n(),
                params,
                strictness,
                found,
                nodes,
            )?)
        }
    }
}

/// `4 / (C(r, 2) (r^3 - r^2 - 2r + 4))`, the small-`t` range in which the
/// lower-bound construction is tight.
pub fn t_r_threshold(r: usize) -> Result<Rational> {
    if r < 3 {
        return Err(Error::InvalidParams(format!(
            "t_r is defined for r >= 3, got {r}"
        )));
    }
    let r = r as i64;
    let cubic = Rational::from(r * r * r - r * r - 2 * r + 4);
    Ok(Rational::from_integer(4) / (binomial_q(r as usize, 2) * cubic))
}

pub(crate) fn mask_of(vertices: &[Vertex]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

pub(crate) fn vertices_of(mask: u64) -> Vec<Vertex> {
    (0..MAX_SEARCH_VERTICES)
        .filter(|&v| mask & (1u64 << v) != 0)
        .collect()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_search_size(n: usize) -> Result<()> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::CapExceeded {
            what: "exact search vertex count",
            value: n,
            cap: MAX_SEARCH_VERTICES,
        });
    }
    Ok(())
}

/// Heavy (`>=`) `r`-subsets of `vertices` in lexicographic order.
pub fn heavy_subsets_public(
    g: &WeightedCompleteGraph,
    vertices: &[Vertex],
    params: &FactorParams,
) -> Vec<Vec<Vertex>> {
    heavy_subsets(g, vertices, params, Strictness::AtLeast)
}

/// Every `r`-subset of `vertices` (in lexicographic order) passing the heaviness predicate.
pub(crate) fn heavy_subsets(
    g: &WeightedCompleteGraph,
    vertices: &[Vertex],
    params: &FactorParams,
    strictness: Strictness,
) -> Vec<Vec<Vertex>> {
    vertices
        .iter()
        .copied()
        .combinations(params.r())
        .filter(|set| strictness.admits(&g.clique_weight_unchecked(set), params.heavy_threshold()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn t_r_values() {
        assert_eq!(t_r_threshold(3).unwrap(), q(1, 12));
        assert_eq!(t_r_threshold(4).unwrap(), q(1, 66));
        // 4 / (10 * 94) = 1/235
        assert_eq!(t_r_threshold(5).unwrap(), q(1, 235));
        assert!(t_r_threshold(2).is_err());
    }

    #[test]
    fn masks_round_trip() {
        let v = vec![0, 3, 17, 63];
        assert_eq!(vertices_of(mask_of(&v)), v);
        assert_eq!(full_mask(64), u64::MAX);
        assert_eq!(full_mask(3), 0b111);
    }
}
