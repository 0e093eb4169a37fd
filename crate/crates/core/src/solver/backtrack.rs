use serde::{Deserialize, Serialize};

use super::{check_search_size, full_mask, heavy_subsets, mask_of, vertices_of};
use crate::error::{Error, Result};
use crate::graph::{CliqueFactor, FactorParams, Strictness, Vertex, WeightedCompleteGraph};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SolveOutcome {
    Factor {
        factor: CliqueFactor,
    },
    /// The search covered every partition and found no heavy factor.
    Exhausted,
}

/// Result of an exact solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub r: usize,
    pub t: Rational,
    pub strictness: Strictness,
    #[serde(flatten)]
    pub outcome: SolveOutcome,
    pub nodes_explored: u64,
}

impl SolveCertificate {
    pub(crate) fn from_blocks(
        n: usize,
        params: &FactorParams,
        strictness: Strictness,
        blocks: Option<Vec<Vec<Vertex>>>,
        nodes_explored: u64,
    ) -> Result<Self> {
        let outcome = match blocks {
            Some(blocks) => SolveOutcome::Factor {
                factor: CliqueFactor::new(n, params.r(), blocks)?,
            },
            None => SolveOutcome::Exhausted,
        };
        Ok(SolveCertificate {
            r: params.r(),
            t: params.t().clone(),
            strictness,
            outcome,
            nodes_explored,
        })
    }

    pub fn factor(&self) -> Option<&CliqueFactor> {
        match &self.outcome {
            SolveOutcome::Factor { factor } => Some(factor),
            SolveOutcome::Exhausted => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, SolveOutcome::Exhausted)
    }
}

struct Search {
    full: u64,
    sets: Vec<u64>,
    /// Indices into `sets` of the heavy sets through each vertex, lexicographic.
    through: Vec<Vec<usize>>,
    nodes: u64,
}

impl Search {
    fn run(&mut self, covered: u64, chosen: &mut Vec<usize>) -> bool {
        self.nodes += 1;
        if covered == self.full {
            return true;
        }
        // Branch on the uncovered vertex with the fewest live heavy sets
        // (ties to the smallest index); fail as soon as one has none.
        let mut best: Option<(usize, usize)> = None;
        let mut free = self.full & !covered;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let live = self.through[v]
                .iter()
                .filter(|&&s| self.sets[s] & covered == 0)
                .count();
            if live == 0 {
                return false;
            }
            if best.is_none_or(|(_, c)| live < c) {
                best = Some((v, live));
            }
        }
        let (v, _) = best.expect("an uncovered vertex exists");
        for idx in 0..self.through[v].len() {
            let s = self.through[v][idx];
            if self.sets[s] & covered != 0 {
                continue;
            }
            chosen.push(s);
            if self.run(covered | self.sets[s], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Complete backtracking search for a `K_r`-factor whose blocks all pass the
/// heaviness predicate.
pub fn find_heavy_factor(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    strictness: Strictness,
) -> Result<SolveCertificate> {
    let n = g.n();
    let r = params.r();
    if !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    check_search_size(n)?;
    let vertices: Vec<Vertex> = (0..n).collect();
    let sets: Vec<u64> = heavy_subsets(g, &vertices, params, strictness)
        .iter()
        .map(|s| mask_of(s))
        .collect();
    let mut through = vec![Vec::new(); n];
    for (idx, &m) in sets.iter().enumerate() {
        for v in vertices_of(m) {
            through[v].push(idx);
        }
    }
    let mut search = Search {
        full: full_mask(n),
        sets,
        through,
        nodes: 0,
    };
    let mut chosen = Vec::new();
    let found = search.run(0, &mut chosen);
    let blocks = found.then(|| {
        chosen
            .iter()
            .map(|&s| vertices_of(search.sets[s]))
            .collect()
    });
    let cert = SolveCertificate::from_blocks(n, params, strictness, blocks, search.nodes)?;
    if let Some(f) = cert.factor() {
        if !f.is_heavy(g, params, strictness)? {
            return Err(Error::Invariant(
                "solver returned a block below the threshold".into(),
            ));
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hs_sharpness_construction, prop2_construction};
    use crate::rational::q;

    fn params(r: usize, t: Rational) -> FactorParams {
        FactorParams::new(r, t).unwrap()
    }

    #[test]
    fn uniform_ones_always_factor() {
        for (n, r) in [(6, 3), (8, 4), (6, 2), (12, 3)] {
            let g = WeightedCompleteGraph::uniform(n, Rational::one()).unwrap();
            let c = find_heavy_factor(&g, &params(r, q(9, 10)), Strictness::Strict).unwrap();
            assert!(c.factor().is_some());
        }
    }

    #[test]
    fn prop2_boundary_cases() {
        let (g, _) = prop2_construction(3, &q(2, 3), 9).unwrap();
        let p = params(3, q(2, 3));
        assert!(find_heavy_factor(&g, &p, Strictness::AtLeast)
            .unwrap()
            .factor()
            .is_some());
        assert!(find_heavy_factor(&g, &p, Strictness::Strict)
            .unwrap()
            .is_exhausted());
        let scaled = g.scale_weights(&q(999, 1000)).unwrap();
        for s in [Strictness::AtLeast, Strictness::Strict] {
            assert!(find_heavy_factor(&scaled, &p, s).unwrap().is_exhausted());
        }
    }

    #[test]
    fn hs_sharpness_has_no_all_ones_factor() {
        for (r, n) in [(2, 6), (3, 6), (3, 9)] {
            let (g, _) = hs_sharpness_construction(r, n).unwrap();
            let c =
                find_heavy_factor(&g, &params(r, Rational::one()), Strictness::AtLeast).unwrap();
            assert!(c.is_exhausted(), "r={r} n={n}");
        }
    }

    #[test]
    fn divisibility_error() {
        let g = WeightedCompleteGraph::uniform(7, Rational::one()).unwrap();
        assert!(matches!(
            find_heavy_factor(&g, &params(3, q(1, 2)), Strictness::AtLeast),
            Err(Error::Divisibility { .. })
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let g = WeightedCompleteGraph::uniform(4, Rational::one()).unwrap();
        let c = find_heavy_factor(&g, &params(2, q(1, 2)), Strictness::AtLeast).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["outcome"], "factor");
        assert_eq!(v["strictness"], "at-least");
        let back: SolveCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
