//! Structural properties that any lexicographically maximum heavy collection
//! must have relative to an uncovered `r`-set `L`. Each property follows from
//! an exchange argument, so a violation means a better collection exists on a
//! few blocks plus `L`; when one is found it is returned as the error witness.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::collections::{best_packings, HeavyCollection};
use crate::error::{Error, Result};
use crate::graph::{FactorParams, Vertex, WeightedCompleteGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactKind {
    /// No overweight edge between two uncovered vertices.
    NoUncoveredOverweightEdge,
    /// Overweight edges from a block to `L` share a single block vertex.
    UniqueBlockEndpoint,
    /// In blocks with `>= r - 1` overweight edges to `L`, the shared vertex `x_R`
    /// meets every overweight edge of `R ∪ L` and all its edges inside `R` are overweight.
    DominatingVertex,
    /// A `Y`-vertex sends at most one overweight edge to any other block.
    YIncidence,
    /// No heavy `r`-set made of one `L`-vertex and `r - 1` `Y`-vertices.
    NoHeavyLY,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactCheck {
    pub fact: FactKind,
    /// Number of concrete instances examined (0 means the fact was vacuous).
    pub instances: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsReport {
    pub rho: usize,
    /// Blocks with at least `r - 1` overweight edges to `L`.
    pub rho_prime: usize,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub checks: Vec<FactCheck>,
}

impl FactsReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, fact: FactKind) -> Option<&FactCheck> {
        self.checks.iter().find(|c| c.fact == fact)
    }
}

struct Ctx<'a> {
    g: &'a WeightedCompleteGraph,
    params: &'a FactorParams,
    collection: &'a HeavyCollection,
    uncovered: Vec<Vertex>,
}

impl Ctx<'_> {
    fn overweight(&self, u: Vertex, v: Vertex) -> bool {
        self.g.weight(u, v) >= self.params.heavy_threshold()
    }

    /// Looks for a strictly better packing on the chosen blocks plus `extra`
    /// uncovered vertices; on success the whole improved collection is the
    /// error witness.
    fn improvement(&self, blocks: &[usize], extra: &[Vertex], reason: String) -> Result<()> {
        let mut pool: Vec<Vertex> = blocks
            .iter()
            .flat_map(|&b| self.collection.blocks[b].iter().copied())
            .chain(extra.iter().copied())
            .collect();
        pool.sort_unstable();
        pool.dedup();
        let current = (
            blocks.len(),
            blocks
                .iter()
                .map(|&b| {
                    super::collections::overweight_inside(
                        self.g,
                        self.params,
                        &self.collection.blocks[b],
                    )
                })
                .sum::<usize>(),
        );
        let Some(best) = best_packings(self.g, self.params, &pool, false)
            .into_iter()
            .next()
        else {
            return Ok(());
        };
        if best.score() > current {
            let mut witness: Vec<Vec<Vertex>> = self
                .collection
                .blocks
                .iter()
                .enumerate()
                .filter(|(i, _)| !blocks.contains(i))
                .map(|(_, b)| b.clone())
                .collect();
            witness.extend(best.blocks);
            witness.sort();
            return Err(Error::NotMaximum { reason, witness });
        }
        Ok(())
    }
}

/// Checks the maximality consequences for `collection` and the uncovered set `l`.
///
/// Requires `r >= 3`, a valid heavy collection with at least `r` uncovered
/// vertices, and `l` an `r`-subset of them. Returns [`Error::NotMaximum`]
/// with an improved collection when the input is demonstrably not maximum.
pub fn check_facts_at_maximum(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    collection: &HeavyCollection,
    l: &[Vertex],
) -> Result<FactsReport> {
    let r = params.r();
    if r < 3 {
        return Err(Error::InvalidParams(
            "the exchange facts need r >= 3".into(),
        ));
    }
    let validated = HeavyCollection::new(g, params, collection.blocks.clone())?;
    let uncovered = validated.uncovered(g.n());
    if uncovered.len() < r {
        return Err(Error::InvalidParams(format!(
            "only {} uncovered vertices; the collection is already (nearly) a factor",
            uncovered.len()
        )));
    }
    let l_set: BTreeSet<Vertex> = l.iter().copied().collect();
    if l.len() != r || l_set.len() != r {
        return Err(Error::WrongSetSize {
            expected: r,
            actual: l_set.len(),
        });
    }
    if let Some(&v) = l.iter().find(|v| !uncovered.contains(v)) {
        return Err(Error::InvalidParams(format!("vertex {v} of L is covered")));
    }
    let l: Vec<Vertex> = l_set.into_iter().collect();
    let ctx = Ctx {
        g,
        params,
        collection: &validated,
        uncovered,
    };
    let blocks = &validated.blocks;
    let mut checks = Vec::new();

    // Overweight edges among uncovered vertices.
    {
        let mut instances = 0;
        let mut violation = None;
        for (&u, &v) in ctx.uncovered.iter().tuple_combinations() {
            instances += 1;
            if ctx.overweight(u, v) {
                let reason = format!("uncovered pair ({u}, {v}) is overweight");
                ctx.improvement(&[], &ctx.uncovered, reason.clone())?;
                violation.get_or_insert(reason);
            }
        }
        checks.push(FactCheck {
            fact: FactKind::NoUncoveredOverweightEdge,
            instances,
            passed: violation.is_none(),
            violation,
        });
    }

    // Block endpoints of overweight block–L edges.
    let mut endpoints: Vec<BTreeSet<Vertex>> = Vec::with_capacity(blocks.len());
    let mut edges_to_l: Vec<usize> = Vec::with_capacity(blocks.len());
    {
        let mut instances = 0;
        let mut violation = None;
        for (bi, block) in blocks.iter().enumerate() {
            let mut ends = BTreeSet::new();
            let mut count = 0;
            for &x in block {
                for &v in &l {
                    if ctx.overweight(x, v) {
                        ends.insert(x);
                        count += 1;
                    }
                }
            }
            if count > 0 {
                instances += 1;
                if ends.len() > 1 {
                    let reason = format!("block {block:?} meets L in overweight edges at {ends:?}");
                    ctx.improvement(&[bi], &l, reason.clone())?;
                    violation.get_or_insert(reason);
                }
            }
            endpoints.push(ends);
            edges_to_l.push(count);
        }
        checks.push(FactCheck {
            fact: FactKind::UniqueBlockEndpoint,
            instances,
            passed: violation.is_none(),
            violation,
        });
    }

    // Blocks with at least r - 1 overweight edges to L, and their dominating vertices.
    let prime: Vec<usize> = (0..blocks.len())
        .filter(|&b| edges_to_l[b] >= r - 1)
        .collect();
    let mut dominating: Vec<Option<Vertex>> = vec![None; blocks.len()];
    {
        let mut violation = None;
        for &bi in &prime {
            let block = &blocks[bi];
            let reason = if endpoints[bi].len() != 1 {
                Some(format!("block {block:?} has no unique vertex towards L"))
            } else {
                let x = *endpoints[bi].iter().next().expect("one endpoint");
                let region: Vec<Vertex> = block.iter().chain(l.iter()).copied().collect();
                let stray = region
                    .iter()
                    .tuple_combinations()
                    .find(|&(&u, &v)| u != x && v != x && ctx.overweight(u, v));
                let light = block.iter().find(|&&y| y != x && !ctx.overweight(x, y));
                match (stray, light) {
                    (Some((u, v)), _) => Some(format!(
                        "overweight edge ({u}, {v}) in {block:?} ∪ L avoids x = {x}"
                    )),
                    (None, Some(y)) => Some(format!(
                        "edge ({x}, {y}) inside {block:?} is not overweight"
                    )),
                    (None, None) => {
                        dominating[bi] = Some(x);
                        None
                    }
                }
            };
            if let Some(reason) = reason {
                ctx.improvement(&[bi], &l, reason.clone())?;
                violation.get_or_insert(reason);
            }
        }
        checks.push(FactCheck {
            fact: FactKind::DominatingVertex,
            instances: prime.len(),
            passed: violation.is_none(),
            violation,
        });
    }

    let structure_ok = prime.iter().all(|&b| dominating[b].is_some());
    let x: Vec<Vertex> = prime.iter().filter_map(|&b| dominating[b]).collect();
    let mut y_owner: Vec<(Vertex, usize)> = Vec::new();
    for &b in &prime {
        y_owner.extend(
            blocks[b]
                .iter()
                .filter(|&&v| Some(v) != dominating[b])
                .map(|&v| (v, b)),
        );
    }
    y_owner.sort_unstable();
    let y: Vec<Vertex> = y_owner.iter().map(|&(v, _)| v).collect();

    // Y-vertices versus blocks outside the primed set.
    {
        let mut instances = 0;
        let mut violation = None;
        if structure_ok {
            for &(yv, owner) in &y_owner {
                for (bi, block) in blocks.iter().enumerate() {
                    if prime.contains(&bi) {
                        continue;
                    }
                    instances += 1;
                    let hits = block.iter().filter(|&&z| ctx.overweight(yv, z)).count();
                    if hits > 1 {
                        let reason = format!("y = {yv} has {hits} overweight edges into {block:?}");
                        ctx.improvement(&[owner, bi], &l, reason.clone())?;
                        violation.get_or_insert(reason);
                    }
                }
            }
        }
        checks.push(FactCheck {
            fact: FactKind::YIncidence,
            instances,
            passed: structure_ok && violation.is_none(),
            violation: violation.or_else(|| {
                (!structure_ok).then(|| "skipped: dominating vertices undefined".into())
            }),
        });
    }

    // Heavy r-sets of the form {v} ∪ T, v ∈ L, T ⊆ Y.
    {
        let mut instances = 0;
        let mut violation = None;
        if structure_ok {
            for t_set in y_owner.iter().combinations(r - 1) {
                for &v in &l {
                    instances += 1;
                    let mut set: Vec<Vertex> = t_set.iter().map(|&&(yv, _)| yv).collect();
                    set.push(v);
                    if g.is_heavy(&set, params)? {
                        let mut owners: Vec<usize> = t_set.iter().map(|&&(_, b)| b).collect();
                        owners.sort_unstable();
                        owners.dedup();
                        set.sort_unstable();
                        let reason = format!("{set:?} is heavy");
                        ctx.improvement(&owners, &l, reason.clone())?;
                        violation.get_or_insert(reason);
                    }
                }
            }
        }
        checks.push(FactCheck {
            fact: FactKind::NoHeavyLY,
            instances,
            passed: structure_ok && violation.is_none(),
            violation: violation.or_else(|| {
                (!structure_ok).then(|| "skipped: dominating vertices undefined".into())
            }),
        });
    }

    Ok(FactsReport {
        rho: blocks.len(),
        rho_prime: prime.len(),
        x,
        y,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, Rational};
    use crate::solver::enumerate_maximum_heavy_collections;

    #[test]
    fn vacuous_on_zero_weights() {
        let g = WeightedCompleteGraph::uniform(7, Rational::zero()).unwrap();
        let p = FactorParams::new(3, q(1, 4)).unwrap();
        let report = check_facts_at_maximum(&g, &p, &HeavyCollection::empty(), &[0, 1, 2]).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.rho_prime, 0);
    }

    #[test]
    fn refuses_when_no_r_set_is_uncovered() {
        let g = WeightedCompleteGraph::uniform(6, Rational::one()).unwrap();
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        let full = HeavyCollection::new(&g, &p, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(check_facts_at_maximum(&g, &p, &full, &[0, 1, 2]).is_err());
    }

    #[test]
    fn rejects_bad_l() {
        let g = WeightedCompleteGraph::uniform(7, Rational::zero()).unwrap();
        let p = FactorParams::new(3, q(1, 4)).unwrap();
        assert!(check_facts_at_maximum(&g, &p, &HeavyCollection::empty(), &[0, 1]).is_err());
        assert!(check_facts_at_maximum(&g, &p, &HeavyCollection::empty(), &[0, 1, 1]).is_err());
    }

    /// A star: vertex 0 joined to every other vertex by weight 1, all else 0.
    fn star(n: usize) -> WeightedCompleteGraph {
        WeightedCompleteGraph::from_fn(n, |i, _| {
            if i == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .unwrap()
    }

    #[test]
    fn star_has_a_dominating_vertex() {
        let g = star(7);
        let p = FactorParams::new(3, q(1, 6)).unwrap();
        let max = enumerate_maximum_heavy_collections(&g, &p, 10).unwrap();
        assert!(max.iter().all(|c| c.size() == 1));
        let c = max.iter().find(|c| c.blocks[0] == vec![0, 1, 2]).unwrap();
        let report = check_facts_at_maximum(&g, &p, c, &[3, 4, 5]).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.rho_prime, 1);
        assert_eq!(report.x, vec![0]);
        assert_eq!(report.y, vec![1, 2]);
    }

    #[test]
    fn non_maximum_input_yields_a_witness() {
        // Two disjoint overweight edges {0, 1} and {2, 3}; the empty collection is not maximum.
        let g = WeightedCompleteGraph::from_edges(
            7,
            [(0, 1, Rational::one()), (2, 3, Rational::one())],
        )
        .unwrap();
        let p = FactorParams::new(3, q(1, 6)).unwrap();
        let err =
            check_facts_at_maximum(&g, &p, &HeavyCollection::empty(), &[0, 1, 4]).unwrap_err();
        match err {
            Error::NotMaximum { witness, .. } => {
                let better = HeavyCollection::new(&g, &p, witness).unwrap();
                assert!(better.size() >= 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        // One block {0, 4, 5} next to the overweight uncovered pair {2, 3}.
        let c = HeavyCollection::new(&g, &p, vec![vec![0, 1, 4]]).unwrap();
        assert!(matches!(
            check_facts_at_maximum(&g, &p, &c, &[2, 3, 5]),
            Err(Error::NotMaximum { .. })
        ));
    }
}
