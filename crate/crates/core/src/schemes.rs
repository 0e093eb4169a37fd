//! Constructive factor builders: the perfect-matching base case for `r = 2`,
//! the quotient/lift composition of a `K_p`- and a `K_q`-factor, the random
//! partition plus bipartite matching step from `K_{r-1}` to `K_r`, and a
//! hill-climbing search for large heavy collections.

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    binomial_q, CliqueFactor, FactorParams, Strictness, Vertex, WeightedCompleteGraph,
};
use crate::matching::{bipartite_matching, perfect_matching};
use crate::rational::Rational;
use crate::solver::{find_heavy_factor, HeavyCollection};

/// Perfect matching in `G_w(t)`, returned as a `K_2`-factor whose edges all weigh at least `t`.
pub fn matching_base_case(g: &WeightedCompleteGraph, t: &Rational) -> Result<Option<CliqueFactor>> {
    if !g.n().is_multiple_of(2) {
        return Err(Error::Divisibility { n: g.n(), r: 2 });
    }
    let Some(pairs) = perfect_matching(&g.threshold_subgraph(t)) else {
        return Ok(None);
    };
    if let Some([u, v]) = pairs.iter().find(|[u, v]| g.weight(*u, *v) < t) {
        return Err(Error::Invariant(format!(
            "matched pair ({u}, {v}) lies below the threshold"
        )));
    }
    let blocks = pairs.iter().map(|p| p.to_vec()).collect();
    Ok(Some(CliqueFactor::new(g.n(), 2, blocks)?))
}

/// Complete graph on the blocks of a `K_p`-factor; a pair of blocks weighs the
/// average of its `p^2` cross weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGraph {
    pub base: CliqueFactor,
    pub graph: WeightedCompleteGraph,
}

fn check_factor_on(g: &WeightedCompleteGraph, factor: &CliqueFactor) -> Result<()> {
    if factor.n() != g.n() {
        return Err(Error::InvalidFactor(format!(
            "factor covers {} vertices, graph has {}",
            factor.n(),
            g.n()
        )));
    }
    if factor.block_size() < 2 {
        return Err(Error::InvalidFactor(
            "blocks must have at least 2 vertices".into(),
        ));
    }
    Ok(())
}

pub fn scheme1_quotient(g: &WeightedCompleteGraph, factor: &CliqueFactor) -> Result<QuotientGraph> {
    check_factor_on(g, factor)?;
    let p = factor.block_size();
    let p_sq = Rational::from(p * p);
    let blocks = factor.blocks();
    let graph = WeightedCompleteGraph::from_fn(blocks.len(), |a, b| {
        let cross: Rational = blocks[a]
            .iter()
            .flat_map(|&u| blocks[b].iter().map(move |&v| (u, v)))
            .map(|(u, v)| g.weight(u, v))
            .sum();
        cross / &p_sq
    })?;
    Ok(QuotientGraph {
        base: factor.clone(),
        graph,
    })
}

/// `(delta_w(G) - (p - 1)) / p`, a lower bound on the quotient's minimum weighted degree.
pub fn quotient_degree_bound(g: &WeightedCompleteGraph, p: usize) -> Result<Rational> {
    Ok((g.min_weighted_degree()? - Rational::from(p - 1)) / Rational::from(p))
}

/// Outcome of lifting a quotient factor back to `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lift {
    pub factor: CliqueFactor,
    pub block_weights: Vec<Rational>,
    /// Minimum average edge weight over the base `K_p` blocks.
    pub base_min_average: Rational,
    /// Minimum average edge weight over the quotient `K_q` blocks.
    pub quotient_min_average: Rational,
    /// `t_q C(q, 2) p^2 + t_p C(p, 2) q`.
    pub bound: Rational,
}

/// Merges the base cliques named by each quotient block into one `K_{pq}`.
///
/// Every lifted weight is checked against the decomposition "base cliques
/// plus `p^2` times the quotient pairs" and against the minimum-average bound.
pub fn scheme1_lift(
    g: &WeightedCompleteGraph,
    p_factor: &CliqueFactor,
    q_factor: &CliqueFactor,
) -> Result<Lift> {
    let quotient = scheme1_quotient(g, p_factor)?;
    check_factor_on(&quotient.graph, q_factor)?;
    let p = p_factor.block_size();
    let q = q_factor.block_size();
    let base = p_factor.blocks();
    let base_weights = p_factor.block_weights(g)?;
    let quotient_weights = q_factor.block_weights(&quotient.graph)?;
    let p_sq = Rational::from(p * p);

    let base_min_average = base_weights.iter().min().expect("non-empty factor") / binomial_q(p, 2);
    let quotient_min_average =
        quotient_weights.iter().min().expect("non-empty factor") / binomial_q(q, 2);
    let bound = &quotient_min_average * binomial_q(q, 2) * &p_sq
        + &base_min_average * binomial_q(p, 2) * Rational::from(q);

    let mut blocks = Vec::with_capacity(q_factor.blocks().len());
    let mut block_weights = Vec::with_capacity(q_factor.blocks().len());
    for (qb, q_weight) in q_factor.blocks().iter().zip(&quotient_weights) {
        let lifted: Vec<Vertex> = qb.iter().flat_map(|&c| base[c].iter().copied()).collect();
        let direct = g.clique_weight(&lifted)?;
        let decomposed: Rational =
            qb.iter().map(|&c| &base_weights[c]).sum::<Rational>() + &p_sq * q_weight;
        if direct != decomposed {
            return Err(Error::Invariant(format!(
                "lifted block {lifted:?}: weight {direct} differs from decomposition {decomposed}"
            )));
        }
        if direct < bound {
            return Err(Error::Invariant(format!(
                "lifted block {lifted:?}: weight {direct} below bound {bound}"
            )));
        }
        blocks.push(lifted);
        block_weights.push(direct);
    }
    Ok(Lift {
        factor: CliqueFactor::new(g.n(), p * q, blocks)?,
        block_weights,
        base_min_average,
        quotient_min_average,
        bound,
    })
}

/// Per-vertex degree requirements for an accepted random split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTargets {
    pub into_a: Rational,
    pub into_b: Rational,
}

impl DegreeTargets {
    /// `(delta' + eps/2) ((r-1)/r) n` into `A` and `delta' n / r` into `B`.
    pub fn new(delta_prime: &Rational, epsilon: &Rational, r: usize, n: usize) -> Self {
        let r_q = Rational::from(r);
        let n_q = Rational::from(n);
        let half_eps = epsilon / Rational::from(2i64);
        DegreeTargets {
            into_a: (delta_prime + &half_eps) * Rational::from(r - 1) / &r_q * &n_q,
            into_b: delta_prime * &n_q / &r_q,
        }
    }

    /// Targets at `delta' = 1/2 + t/2`, the normalized degree that suffices for
    /// every `r` once the `r = 2` case holds.
    pub fn for_threshold(t: &Rational, epsilon: &Rational, r: usize, n: usize) -> Self {
        let delta_prime = (Rational::one() + t) / Rational::from(2i64);
        Self::new(&delta_prime, epsilon, r, n)
    }
}

/// Uniformly random split into `|A| = (r-1)n/r` and `|B| = n/r`, resampled
/// until every vertex meets both degree targets. Both sides come back sorted.
pub fn scheme2_partition(
    g: &WeightedCompleteGraph,
    r: usize,
    seed: u64,
    targets: &DegreeTargets,
    cap: usize,
) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.n();
    if r < 2 || !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    let a_size = n - n / r;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    for _ in 0..cap {
        order.shuffle(&mut rng);
        let mut a = order[..a_size].to_vec();
        let mut b = order[a_size..].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        let meets = |v: Vertex| -> bool {
            let sum_to = |side: &[Vertex]| -> Rational {
                side.iter()
                    .filter(|&&u| u != v)
                    .map(|&u| g.weight(v, u))
                    .sum()
            };
            sum_to(&a) >= targets.into_a && sum_to(&b) >= targets.into_b
        };
        if (0..n).all(meets) {
            return Ok((a, b));
        }
    }
    Err(Error::BudgetExhausted {
        what: "random partition",
        attempts: cap,
    })
}

/// Complete bipartite graph between the cliques of a factor on `A` and the
/// vertices of `B`; `(K, v)` weighs the average of `w(v, u)` over `u` in `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteAverageGraph {
    pub left: Vec<Vec<Vertex>>,
    pub right: Vec<Vertex>,
    pub weights: Vec<Vec<Rational>>,
}

impl BipartiteAverageGraph {
    pub fn new(
        g: &WeightedCompleteGraph,
        left: Vec<Vec<Vertex>>,
        right: Vec<Vertex>,
    ) -> Result<Self> {
        let mut weights = Vec::with_capacity(left.len());
        for clique in &left {
            if clique.is_empty() {
                return Err(Error::InvalidParams("empty clique on the left side".into()));
            }
            let size = Rational::from(clique.len());
            let row = right
                .iter()
                .map(|&v| g.weighted_degree_to(v, clique).map(|d| d / &size))
                .collect::<Result<Vec<_>>>()?;
            weights.push(row);
        }
        Ok(BipartiteAverageGraph {
            left,
            right,
            weights,
        })
    }
}

/// Perfect matching using only pairs with average weight at least `t`.
/// `result[i]` is the index into `right` matched with `left[i]`.
pub fn bipartite_threshold_matching(
    h: &BipartiteAverageGraph,
    t: &Rational,
) -> Result<Option<Vec<usize>>> {
    if h.left.len() != h.right.len() {
        return Err(Error::InvalidParams(format!(
            "sides differ in size: {} cliques, {} vertices",
            h.left.len(),
            h.right.len()
        )));
    }
    let adj: Vec<Vec<usize>> = h
        .weights
        .iter()
        .map(|row| (0..row.len()).filter(|&j| row[j] >= *t).collect())
        .collect();
    let matched = bipartite_matching(&adj, h.right.len());
    Ok(matched.into_iter().collect::<Option<Vec<_>>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scheme2Config {
    /// Random partitions tried per recursion level.
    pub retries: usize,
    /// Resamples allowed inside one partition attempt.
    pub partition_cap: usize,
    /// Largest `|A|` on which an exact solve replaces a failed recursive step.
    pub exact_fallback_cap: usize,
}

impl Default for Scheme2Config {
    fn default() -> Self {
        Scheme2Config {
            retries: 20,
            partition_cap: 1000,
            exact_fallback_cap: 12,
        }
    }
}

/// Why attempts failed, tallied over the whole recursion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scheme2Stats {
    pub attempts: usize,
    pub partition_failures: usize,
    pub subfactor_failures: usize,
    pub exact_fallbacks: usize,
    pub matching_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scheme2Outcome {
    pub factor: Option<CliqueFactor>,
    pub stats: Scheme2Stats,
}

fn scheme2_blocks(
    g: &WeightedCompleteGraph,
    r: usize,
    t: &Rational,
    seed: u64,
    epsilon: &Rational,
    config: &Scheme2Config,
    stats: &mut Scheme2Stats,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    if r == 2 {
        return Ok(matching_base_case(g, t)?.map(|f| f.blocks().to_vec()));
    }
    let prev_threshold = t * binomial_q(r - 1, 2);
    let threshold = t * binomial_q(r, 2);
    let targets = DegreeTargets::for_threshold(t, epsilon, r, g.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.retries {
        stats.attempts += 1;
        let attempt_seed = rng.next_u64();
        let (a, b) = match scheme2_partition(g, r, attempt_seed, &targets, config.partition_cap) {
            Ok(split) => split,
            Err(Error::BudgetExhausted { .. }) => {
                stats.partition_failures += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let on_a = g.induced_subgraph(&a)?;
        let mut cliques = scheme2_blocks(&on_a, r - 1, t, rng.next_u64(), epsilon, config, stats)?;
        if cliques.is_none() && a.len() <= config.exact_fallback_cap {
            stats.exact_fallbacks += 1;
            let params = FactorParams::new(r - 1, t.clone())?;
            cliques = find_heavy_factor(&on_a, &params, Strictness::AtLeast)?
                .factor()
                .map(|f| f.blocks().to_vec());
        }
        let Some(cliques) = cliques else {
            stats.subfactor_failures += 1;
            continue;
        };
        let left: Vec<Vec<Vertex>> = cliques
            .iter()
            .map(|c| c.iter().map(|&i| a[i]).collect())
            .collect();
        let h = BipartiteAverageGraph::new(g, left, b)?;
        let Some(matching) = bipartite_threshold_matching(&h, t)? else {
            stats.matching_failures += 1;
            continue;
        };
        let mut blocks = Vec::with_capacity(h.left.len());
        for (i, &j) in matching.iter().enumerate() {
            let clique = &h.left[i];
            let v = h.right[j];
            let clique_weight = g.clique_weight(clique)?;
            let to_v = g.weighted_degree_to(v, clique)?;
            // weight(K + v) = weight(K) + (r-1) * avg >= t C(r-1, 2) + t (r-1) = t C(r, 2)
            if clique_weight < prev_threshold
                || h.weights[i][j] < *t
                || &clique_weight + &to_v < threshold
            {
                return Err(Error::Invariant(format!(
                    "merging {v} into {clique:?} is not heavy"
                )));
            }
            let mut block = clique.clone();
            block.push(v);
            blocks.push(block);
        }
        return Ok(Some(blocks));
    }
    Ok(None)
}

/// Builds a heavy `K_r`-factor by recursion on `r`. `None` means the retry
/// budget ran out, not that no factor exists.
pub fn scheme2_factor(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    seed: u64,
    epsilon: &Rational,
    config: &Scheme2Config,
) -> Result<Scheme2Outcome> {
    let r = params.r();
    if !g.n().is_multiple_of(r) {
        return Err(Error::Divisibility { n: g.n(), r });
    }
    let mut stats = Scheme2Stats::default();
    let blocks = scheme2_blocks(g, r, params.t(), seed, epsilon, config, &mut stats)?;
    let factor = match blocks {
        Some(blocks) => {
            let f = CliqueFactor::new(g.n(), r, blocks)?;
            if !f.is_heavy(g, params, Strictness::AtLeast)? {
                return Err(Error::Invariant("scheme 2 produced a light block".into()));
            }
            Some(f)
        }
        None => None,
    };
    Ok(Scheme2Outcome { factor, stats })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSearchConfig {
    /// Restarts after the first (identity-ordered) run; each uses a seeded vertex order.
    pub restarts: usize,
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        LocalSearchConfig { restarts: 8 }
    }
}

struct Climber<'a> {
    g: &'a WeightedCompleteGraph,
    params: &'a FactorParams,
    /// Heavy r-sets sorted by the vertex order of this run.
    candidates: Vec<Vec<Vertex>>,
    order: Vec<Vertex>,
    blocks: Vec<Vec<Vertex>>,
    covered: Vec<bool>,
}

impl Climber<'_> {
    fn overweight(&self, u: Vertex, v: Vertex) -> bool {
        self.g.weight(u, v) >= self.params.heavy_threshold()
    }

    fn overweight_inside(&self, block: &[Vertex]) -> usize {
        let mut c = 0;
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                c += usize::from(self.overweight(u, v));
            }
        }
        c
    }

    fn add(&mut self, block: Vec<Vertex>) {
        for &v in &block {
            self.covered[v] = true;
        }
        self.blocks.push(block);
    }

    /// Add a heavy r-set of uncovered vertices.
    fn add_heavy_set(&mut self) -> bool {
        let found = self
            .candidates
            .iter()
            .find(|s| s.iter().all(|&v| !self.covered[v]))
            .cloned();
        found.map(|s| self.add(s)).is_some()
    }

    /// Extend an uncovered overweight edge by r - 2 uncovered vertices.
    fn extend_overweight_edge(&mut self) -> bool {
        let r = self.params.r();
        let free: Vec<Vertex> = self
            .order
            .iter()
            .copied()
            .filter(|&v| !self.covered[v])
            .collect();
        if free.len() < r {
            return false;
        }
        for (i, &u) in free.iter().enumerate() {
            for &v in &free[i + 1..] {
                if self.overweight(u, v) {
                    let mut block = vec![u, v];
                    block.extend(
                        free.iter()
                            .copied()
                            .filter(|&x| x != u && x != v)
                            .take(r - 2),
                    );
                    self.add(block);
                    return true;
                }
            }
        }
        false
    }

    /// Swap a block vertex for an uncovered one if the block stays heavy and
    /// gains overweight edges.
    fn swap_vertex(&mut self) -> bool {
        let free: Vec<Vertex> = self
            .order
            .iter()
            .copied()
            .filter(|&v| !self.covered[v])
            .collect();
        for bi in 0..self.blocks.len() {
            let current = self.overweight_inside(&self.blocks[bi]);
            for pos in 0..self.blocks[bi].len() {
                for &u in &free {
                    let mut next = self.blocks[bi].clone();
                    let out = std::mem::replace(&mut next[pos], u);
                    let heavy =
                        self.g.clique_weight_unchecked(&next) >= *self.params.heavy_threshold();
                    if heavy && self.overweight_inside(&next) > current {
                        self.covered[out] = false;
                        self.covered[u] = true;
                        self.blocks[bi] = next;
                        return true;
                    }
                }
            }
        }
        false
    }

    fn climb(&mut self) {
        while self.add_heavy_set() || self.extend_overweight_edge() || self.swap_vertex() {}
    }
}

/// Hill-climbs `(number of blocks, overweight edges inside blocks)` from the
/// empty collection, keeping the best local optimum over all restarts.
pub fn local_search_heavy_collection(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    seed: u64,
    config: &LocalSearchConfig,
) -> Result<HeavyCollection> {
    let n = g.n();
    let all: Vec<Vertex> = (0..n).collect();
    let heavy = crate::solver::heavy_subsets_public(g, &all, params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<HeavyCollection> = None;
    for run in 0..=config.restarts {
        let mut order = all.clone();
        if run > 0 {
            order.shuffle(&mut rng);
        }
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut candidates = heavy.clone();
        candidates.sort_by_cached_key(|s| {
            let mut key: Vec<usize> = s.iter().map(|&v| rank[v]).collect();
            key.sort_unstable();
            key
        });
        let mut climber = Climber {
            g,
            params,
            candidates,
            order,
            blocks: Vec::new(),
            covered: vec![false; n],
        };
        climber.climb();
        let found = HeavyCollection::new(g, params, climber.blocks)?;
        if best.as_ref().is_none_or(|b| found.score() > b.score()) {
            best = Some(found);
        }
    }
    Ok(best.unwrap_or_else(HeavyCollection::empty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn base_case_extremes() {
        let ones = WeightedCompleteGraph::uniform(6, Rational::one()).unwrap();
        assert!(matching_base_case(&ones, &Rational::one())
            .unwrap()
            .is_some());
        let zeros = WeightedCompleteGraph::uniform(4, Rational::zero()).unwrap();
        assert!(matching_base_case(&zeros, &q(1, 2)).unwrap().is_none());
        assert!(matching_base_case(
            &WeightedCompleteGraph::uniform(5, Rational::one()).unwrap(),
            &q(1, 2)
        )
        .is_err());
    }

    #[test]
    fn quotient_of_constant_graph_is_constant() {
        let g = WeightedCompleteGraph::uniform(6, q(2, 5)).unwrap();
        let f = CliqueFactor::new(6, 2, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let qg = scheme1_quotient(&g, &f).unwrap();
        assert!(qg.graph.edges().all(|(_, _, w)| *w == q(2, 5)));
    }

    #[test]
    fn quotient_averages_cross_weights() {
        let g = WeightedCompleteGraph::from_edges(
            4,
            [
                (0, 2, Rational::one()),
                (0, 3, Rational::zero()),
                (1, 2, q(1, 2)),
                (1, 3, q(1, 2)),
            ],
        )
        .unwrap();
        let f = CliqueFactor::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            scheme1_quotient(&g, &f).unwrap().graph.weight(0, 1),
            &q(1, 2)
        );
    }

    #[test]
    fn lift_of_all_ones() {
        let g = WeightedCompleteGraph::uniform(8, Rational::one()).unwrap();
        let pf =
            CliqueFactor::new(8, 2, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap();
        let qf = CliqueFactor::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let lift = scheme1_lift(&g, &pf, &qf).unwrap();
        assert_eq!(lift.factor.blocks(), &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert!(lift.block_weights.iter().all(|w| *w == q(6, 1)));
    }

    #[test]
    fn lift_rejects_mismatched_factors() {
        let g = WeightedCompleteGraph::uniform(8, Rational::one()).unwrap();
        let pf =
            CliqueFactor::new(8, 2, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap();
        let qf = CliqueFactor::new(6, 2, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(scheme1_lift(&g, &pf, &qf).is_err());
    }

    #[test]
    fn partition_extremes() {
        let ones = WeightedCompleteGraph::uniform(12, Rational::one()).unwrap();
        let targets = DegreeTargets::new(&q(3, 4), &q(1, 10), 3, 12);
        let (a, b) = scheme2_partition(&ones, 3, 1, &targets, 1).unwrap();
        assert_eq!((a.len(), b.len()), (8, 4));
        let zeros = WeightedCompleteGraph::uniform(12, Rational::zero()).unwrap();
        assert!(matches!(
            scheme2_partition(&zeros, 3, 1, &targets, 50),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn threshold_matching_cases() {
        let g = WeightedCompleteGraph::uniform(6, Rational::one()).unwrap();
        let h = BipartiteAverageGraph::new(&g, vec![vec![0, 1], vec![2, 3]], vec![4, 5]).unwrap();
        let m = bipartite_threshold_matching(&h, &q(1, 2)).unwrap().unwrap();
        assert_eq!(m.iter().collect::<std::collections::BTreeSet<_>>().len(), 2);
        // Clique {0, 1} sees nothing at weight >= 1/2.
        let g = WeightedCompleteGraph::from_fn(6, |i, j| {
            if i <= 1 && j >= 4 {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .unwrap();
        let h = BipartiteAverageGraph::new(&g, vec![vec![0, 1], vec![2, 3]], vec![4, 5]).unwrap();
        assert_eq!(bipartite_threshold_matching(&h, &q(1, 2)).unwrap(), None);
        let bad = BipartiteAverageGraph::new(&g, vec![vec![0, 1]], vec![4, 5]).unwrap();
        assert!(bipartite_threshold_matching(&bad, &q(1, 2)).is_err());
    }

    #[test]
    fn scheme2_extremes() {
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        let ones = WeightedCompleteGraph::uniform(12, Rational::one()).unwrap();
        let out = scheme2_factor(&ones, &p, 0, &q(1, 10), &Scheme2Config::default()).unwrap();
        assert!(out
            .factor
            .unwrap()
            .is_heavy(&ones, &p, Strictness::AtLeast)
            .unwrap());
        let zeros = WeightedCompleteGraph::uniform(12, Rational::zero()).unwrap();
        let config = Scheme2Config {
            retries: 3,
            partition_cap: 5,
            exact_fallback_cap: 12,
        };
        let out = scheme2_factor(&zeros, &p, 0, &q(1, 10), &config).unwrap();
        assert!(out.factor.is_none());
        assert_eq!(out.stats.attempts, 3);
    }

    #[test]
    fn local_search_extremes() {
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        let ones = WeightedCompleteGraph::uniform(9, Rational::one()).unwrap();
        let c = local_search_heavy_collection(&ones, &p, 0, &LocalSearchConfig::default()).unwrap();
        assert_eq!(c.size(), 3);
        let zeros = WeightedCompleteGraph::uniform(9, Rational::zero()).unwrap();
        let c =
            local_search_heavy_collection(&zeros, &p, 0, &LocalSearchConfig::default()).unwrap();
        assert_eq!(c, HeavyCollection::empty());
    }
}
