use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{heavy_subsets, mask_of};
use crate::error::{Error, Result};
use crate::graph::{FactorParams, Strictness, Vertex, WeightedCompleteGraph};

/// Pairwise-disjoint heavy `r`-sets, scored lexicographically by
/// `(number of blocks, overweight edges inside the blocks)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeavyCollection {
    pub blocks: Vec<Vec<Vertex>>,
    pub overweight_count: usize,
}

/// Overweight edges inside one block.
pub(crate) fn overweight_inside(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    block: &[Vertex],
) -> usize {
    let mut count = 0;
    for (a, &u) in block.iter().enumerate() {
        for &v in &block[a + 1..] {
            if g.weight(u, v) >= params.heavy_threshold() {
                count += 1;
            }
        }
    }
    count
}

impl HeavyCollection {
    /// Validates the blocks (size `r`, disjoint, heavy under `>=`) and scores them.
    pub fn new(
        g: &WeightedCompleteGraph,
        params: &FactorParams,
        blocks: Vec<Vec<Vertex>>,
    ) -> Result<Self> {
        let mut used = vec![false; g.n()];
        let mut blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        for b in &blocks {
            if !g.is_heavy(b, params)? {
                return Err(Error::InvalidParams(format!("block {b:?} is not heavy")));
            }
            for &v in b {
                if std::mem::replace(&mut used[v], true) {
                    return Err(Error::InvalidParams(format!("vertex {v} is in two blocks")));
                }
            }
        }
        let overweight_count = blocks.iter().map(|b| overweight_inside(g, params, b)).sum();
        Ok(HeavyCollection {
            blocks,
            overweight_count,
        })
    }

    pub fn empty() -> Self {
        HeavyCollection {
            blocks: Vec::new(),
            overweight_count: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    /// The lexicographic objective `(size, overweight count)`.
    pub fn score(&self) -> (usize, usize) {
        (self.blocks.len(), self.overweight_count)
    }

    pub fn uncovered(&self, n: usize) -> Vec<Vertex> {
        let covered = self.blocks.iter().fold(0u64, |m, b| m | mask_of(b));
        (0..n).filter(|&v| covered & (1u64 << v) == 0).collect()
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        self.score().cmp(&other.score())
    }
}

struct PackingSearch<'a> {
    sets: &'a [Vec<Vertex>],
    masks: Vec<u64>,
    weights: Vec<usize>,
    best: (usize, usize),
    keep_all: bool,
    found: Vec<Vec<usize>>,
}

impl PackingSearch<'_> {
    fn visit(&mut self, start: usize, covered: u64, chosen: &mut Vec<usize>, overweight: usize) {
        let score = (chosen.len(), overweight);
        match score.cmp(&self.best) {
            Ordering::Greater => {
                self.best = score;
                self.found.clear();
                self.found.push(chosen.clone());
            }
            Ordering::Equal if self.keep_all || self.found.is_empty() => {
                self.found.push(chosen.clone())
            }
            _ => {}
        }
        for idx in start..self.sets.len() {
            if self.masks[idx] & covered == 0 {
                chosen.push(idx);
                self.visit(
                    idx + 1,
                    covered | self.masks[idx],
                    chosen,
                    overweight + self.weights[idx],
                );
                chosen.pop();
            }
        }
    }
}

/// Best packings of heavy `r`-sets drawn from `vertices`. With `keep_all`
/// every optimal packing is returned, otherwise the first one found.
pub(crate) fn best_packings(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    vertices: &[Vertex],
    keep_all: bool,
) -> Vec<HeavyCollection> {
    let sets = heavy_subsets(g, vertices, params, Strictness::AtLeast);
    let mut search = PackingSearch {
        masks: sets.iter().map(|s| mask_of(s)).collect(),
        weights: sets
            .iter()
            .map(|s| overweight_inside(g, params, s))
            .collect(),
        sets: &sets,
        best: (0, 0),
        keep_all,
        found: Vec::new(),
    };
    search.visit(0, 0, &mut Vec::new(), 0);
    let (_, overweight_count) = search.best;
    search
        .found
        .iter()
        .map(|idx| HeavyCollection {
            blocks: idx.iter().map(|&i| sets[i].clone()).collect(),
            overweight_count,
        })
        .collect()
}

/// Every heavy collection attaining the lexicographic maximum of
/// `(size, overweight edges inside the blocks)`; `n <= cap`.
pub fn enumerate_maximum_heavy_collections(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    cap: usize,
) -> Result<Vec<HeavyCollection>> {
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "maximum heavy collection enumeration",
            value: g.n(),
            cap,
        });
    }
    let vertices: Vec<Vertex> = (0..g.n()).collect();
    Ok(best_packings(g, params, &vertices, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::prop2_construction;
    use crate::rational::{q, Rational};

    #[test]
    fn all_ones_gives_every_pairing() {
        let g = WeightedCompleteGraph::uniform(6, Rational::one()).unwrap();
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        let all = enumerate_maximum_heavy_collections(&g, &p, 10).unwrap();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|c| c.size() == 2 && c.overweight_count == 0));
    }

    #[test]
    fn all_zeros_gives_the_empty_collection() {
        let g = WeightedCompleteGraph::uniform(7, Rational::zero()).unwrap();
        let p = FactorParams::new(3, q(1, 4)).unwrap();
        assert_eq!(
            enumerate_maximum_heavy_collections(&g, &p, 10).unwrap(),
            vec![HeavyCollection::empty()]
        );
    }

    #[test]
    fn prop2_scaled_leaves_one_block_short() {
        let (g, _) = prop2_construction(3, &q(2, 3), 9).unwrap();
        let g = g.scale_weights(&q(999, 1000)).unwrap();
        let p = FactorParams::new(3, q(2, 3)).unwrap();
        let all = enumerate_maximum_heavy_collections(&g, &p, 10).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.size() == 2));
    }

    #[test]
    fn cap_is_enforced() {
        let g = WeightedCompleteGraph::uniform(11, Rational::one()).unwrap();
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        assert!(matches!(
            enumerate_maximum_heavy_collections(&g, &p, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn validation() {
        let g = WeightedCompleteGraph::uniform(6, q(1, 2)).unwrap();
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        assert!(HeavyCollection::new(&g, &p, vec![vec![0, 1, 2], vec![2, 3, 4]]).is_err());
        let p = FactorParams::new(3, q(2, 3)).unwrap();
        assert!(HeavyCollection::new(&g, &p, vec![vec![0, 1, 2]]).is_err());
    }
}
