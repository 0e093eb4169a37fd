//! Edge-weighted complete graphs and the weighted-degree / heaviness vocabulary.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vertex = usize;

/// `C(n, k)` as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `C(n, k)` as a rational, for threshold arithmetic.
pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n, k))
}

/// Position of the unordered pair `{i, j}` (`i < j`) in the packed upper triangle.
#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// The complete graph `K_n` with symmetric weights in `[0, 1]`.
///
/// Immutable once built; every transformation returns a new graph.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphFile", try_from = "GraphFile")]
pub struct WeightedCompleteGraph {
    n: usize,
    weights: Vec<Rational>,
}

impl WeightedCompleteGraph {
    /// Builds a graph by evaluating `weight(i, j)` for every pair `i < j`.
    pub fn from_fn<F>(n: usize, mut weight: F) -> Result<Self>
    where
        F: FnMut(Vertex, Vertex) -> Rational,
    {
        if n == 0 {
            return Err(Error::InvalidParams(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut weights = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let w = weight(i, j);
                if !w.in_unit_interval() {
                    return Err(Error::WeightOutOfRange {
                        i,
                        j,
                        weight: w.to_string(),
                    });
                }
                weights.push(w);
            }
        }
        Ok(WeightedCompleteGraph { n, weights })
    }

    /// Every pair gets weight `w`.
    pub fn uniform(n: usize, w: Rational) -> Result<Self> {
        Self::from_fn(n, |_, _| w.clone())
    }

    /// Builds from a sparse edge list; missing pairs get weight 0.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Rational)>,
    {
        if n == 0 {
            return Err(Error::InvalidParams(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut weights = vec![Rational::zero(); n * (n - 1) / 2];
        let mut seen = BTreeSet::new();
        for (a, b, w) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::InvalidParams(format!("self-loop on vertex {a}")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((i, j)) {
                return Err(Error::InvalidParams(format!(
                    "pair ({i}, {j}) listed twice"
                )));
            }
            if !w.in_unit_interval() {
                return Err(Error::WeightOutOfRange {
                    i,
                    j,
                    weight: w.to_string(),
                });
            }
            weights[pair_index(n, i, j)] = w;
        }
        Ok(WeightedCompleteGraph { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of the pair `{i, j}`. Panics on `i == j` or an out-of-range vertex.
    pub fn weight(&self, i: Vertex, j: Vertex) -> &Rational {
        assert!(i != j, "the diagonal carries no weight");
        assert!(i < self.n && j < self.n, "vertex out of range");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &self.weights[pair_index(self.n, a, b)]
    }

    /// All pairs `(i, j, w)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &Rational)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.weights.iter())
            .map(|((i, j), w)| (i, j, w))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, set: &[Vertex]) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &v in set {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(())
    }

    /// Sum of the weights of all edges at `v`.
    pub fn weighted_degree(&self, v: Vertex) -> Result<Rational> {
        self.check_vertex(v)?;
        Ok((0..self.n)
            .filter(|&u| u != v)
            .map(|u| self.weight(v, u))
            .sum())
    }

    pub fn weighted_degrees(&self) -> Vec<Rational> {
        let mut deg = vec![Rational::zero(); self.n];
        for (i, j, w) in self.edges() {
            deg[i] += w;
            deg[j] += w;
        }
        deg
    }

    /// `min_v deg_w(v)`; requires `n >= 2`.
    pub fn min_weighted_degree(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::InvalidParams("minimum degree needs n >= 2".into()));
        }
        Ok(self.weighted_degrees().into_iter().min().expect("n >= 2"))
    }

    /// Weighted degree of `v` into `set`; `v` must not be in `set`.
    pub fn weighted_degree_to(&self, v: Vertex, set: &[Vertex]) -> Result<Rational> {
        self.check_vertex(v)?;
        self.check_set(set)?;
        if set.contains(&v) {
            return Err(Error::VertexInSet(v));
        }
        Ok(set.iter().map(|&u| self.weight(v, u)).sum())
    }

    /// Total weight of the pairs inside `set`.
    pub fn clique_weight(&self, set: &[Vertex]) -> Result<Rational> {
        if set.len() < 2 {
            return Err(Error::WrongSetSize {
                expected: 2,
                actual: set.len(),
            });
        }
        self.check_set(set)?;
        Ok(self.clique_weight_unchecked(set))
    }

    pub(crate) fn clique_weight_unchecked(&self, set: &[Vertex]) -> Rational {
        let mut total = Rational::zero();
        for (a, &u) in set.iter().enumerate() {
            for &v in &set[a + 1..] {
                total += self.weight(u, v);
            }
        }
        total
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.iter().sum()
    }

    fn heavy_check(
        &self,
        set: &[Vertex],
        params: &FactorParams,
        strictness: Strictness,
    ) -> Result<bool> {
        if set.len() != params.r() {
            return Err(Error::WrongSetSize {
                expected: params.r(),
                actual: set.len(),
            });
        }
        let w = self.clique_weight(set)?;
        Ok(strictness.admits(&w, params.heavy_threshold()))
    }

    /// `w(S) >= t * C(r, 2)`.
    pub fn is_heavy(&self, set: &[Vertex], params: &FactorParams) -> Result<bool> {
        self.heavy_check(set, params, Strictness::AtLeast)
    }

    /// `w(S) > t * C(r, 2)`.
    pub fn is_strictly_heavy(&self, set: &[Vertex], params: &FactorParams) -> Result<bool> {
        self.heavy_check(set, params, Strictness::Strict)
    }

    /// An edge is overweight when its own weight reaches the heavy threshold.
    /// Impossible for every edge once `t * C(r, 2) > 1`.
    pub fn is_overweight_edge(&self, i: Vertex, j: Vertex, params: &FactorParams) -> Result<bool> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidParams(format!("({i}, {j}) is not a pair")));
        }
        Ok(self.weight(i, j) >= params.heavy_threshold())
    }

    /// `G_w(s)`: the unweighted graph of pairs with weight at least `s`.
    pub fn threshold_subgraph(&self, s: &Rational) -> ThresholdGraph {
        ThresholdGraph::from_pairs(
            self.n,
            self.edges()
                .filter(|(_, _, w)| *w >= s)
                .map(|(i, j, _)| (i, j)),
        )
    }

    /// Multiplies every weight by `factor` in `[0, 1]`.
    pub fn scale_weights(&self, factor: &Rational) -> Result<Self> {
        if !factor.in_unit_interval() {
            return Err(Error::OutOfUnitInterval {
                what: "scale factor",
                value: factor.to_string(),
            });
        }
        Ok(WeightedCompleteGraph {
            n: self.n,
            weights: self.weights.iter().map(|w| w * factor).collect(),
        })
    }

    /// The graph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Self> {
        self.check_set(vertices)?;
        Self::from_fn(vertices.len(), |a, b| {
            self.weight(vertices[a], vertices[b]).clone()
        })
    }

    /// Returns a copy with the pair `{i, j}` set to `w`.
    pub fn with_weight(&self, i: Vertex, j: Vertex, w: Rational) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidParams(format!("({i}, {j}) is not a pair")));
        }
        if !w.in_unit_interval() {
            return Err(Error::WeightOutOfRange {
                i,
                j,
                weight: w.to_string(),
            });
        }
        let mut next = self.clone();
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        next.weights[pair_index(self.n, a, b)] = w;
        Ok(next)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Debug for WeightedCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedCompleteGraph")
            .field("n", &self.n)
            .field(
                "edges",
                &self
                    .edges()
                    .filter(|(_, _, w)| !w.is_zero())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// On-disk graph format: `{"n": 4, "edges": [[0, 1, "1/2"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex, Rational)>,
}

impl From<WeightedCompleteGraph> for GraphFile {
    fn from(g: WeightedCompleteGraph) -> Self {
        GraphFile {
            n: g.n,
            edges: g.edges().map(|(i, j, w)| (i, j, w.clone())).collect(),
        }
    }
}

impl TryFrom<GraphFile> for WeightedCompleteGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        WeightedCompleteGraph::from_edges(file.n, file.edges)
    }
}

/// Whether a block must reach the heavy threshold (`>=`) or exceed it (`>`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strictness {
    AtLeast,
    Strict,
}

impl Strictness {
    pub fn admits(self, weight: &Rational, threshold: &Rational) -> bool {
        match self {
            Strictness::AtLeast => weight >= threshold,
            Strictness::Strict => weight > threshold,
        }
    }
}

/// Clique size `r` and target average weight `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct FactorParams {
    r: usize,
    t: Rational,
    heavy_threshold: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    r: usize,
    t: Rational,
}

impl TryFrom<RawParams> for FactorParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        FactorParams::new(raw.r, raw.t)
    }
}

impl FactorParams {
    pub fn new(r: usize, t: Rational) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!(
                "clique size r = {r} must be at least 2"
            )));
        }
        if !t.in_unit_interval() {
            return Err(Error::OutOfUnitInterval {
                what: "t",
                value: t.to_string(),
            });
        }
        let heavy_threshold = &t * binomial_q(r, 2);
        Ok(FactorParams {
            r,
            t,
            heavy_threshold,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    /// `t * C(r, 2)`.
    pub fn heavy_threshold(&self) -> &Rational {
        &self.heavy_threshold
    }
}

/// A partition of `0..n` into blocks of equal size.
///
/// Blocks are stored sorted, and ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueFactor {
    n: usize,
    block_size: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl CliqueFactor {
    pub fn new(n: usize, block_size: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        if block_size == 0 || !n.is_multiple_of(block_size) {
            return Err(Error::Divisibility { n, r: block_size });
        }
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.len() != block_size {
                return Err(Error::InvalidFactor(format!(
                    "block {b:?} has size {} instead of {block_size}",
                    b.len()
                )));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidFactor(format!("vertex {v} covered twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidFactor(format!("vertex {v} is not covered")));
        }
        blocks.sort();
        Ok(CliqueFactor {
            n,
            block_size,
            blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// Weight of every block, in block order.
    pub fn block_weights(&self, g: &WeightedCompleteGraph) -> Result<Vec<Rational>> {
        if g.n() != self.n {
            return Err(Error::InvalidFactor(format!(
                "factor covers {} vertices but the graph has {}",
                self.n,
                g.n()
            )));
        }
        if self.block_size < 2 {
            return Err(Error::InvalidFactor(
                "blocks of size 1 carry no weight".into(),
            ));
        }
        Ok(self
            .blocks
            .iter()
            .map(|b| g.clique_weight_unchecked(b))
            .collect())
    }

    /// True when every block passes the heaviness predicate.
    pub fn is_heavy(
        &self,
        g: &WeightedCompleteGraph,
        params: &FactorParams,
        strictness: Strictness,
    ) -> Result<bool> {
        if self.block_size != params.r() {
            return Err(Error::WrongSetSize {
                expected: params.r(),
                actual: self.block_size,
            });
        }
        Ok(self
            .block_weights(g)?
            .iter()
            .all(|w| strictness.admits(w, params.heavy_threshold())))
    }
}

/// Unweighted graph on `0..n` stored as an adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdGraph {
    n: usize,
    adjacent: Vec<bool>,
}

impl ThresholdGraph {
    pub fn from_pairs<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacent = vec![false; n * n];
        for (i, j) in pairs {
            assert!(i != j && i < n && j < n, "invalid pair ({i}, {j})");
            adjacent[i * n + j] = true;
            adjacent[j * n + i] = true;
        }
        ThresholdGraph { n, adjacent }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: Vertex, j: Vertex) -> bool {
        i != j && self.adjacent[i * self.n + j]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n)
                .filter(move |&j| self.has_edge(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// The 0/1 weighting whose weight-1 pairs are exactly this graph's edges.
    pub fn to_weighting(&self) -> WeightedCompleteGraph {
        WeightedCompleteGraph::from_fn(self.n, |i, j| {
            if self.has_edge(i, j) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .expect("0/1 weights are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ones(n: usize) -> WeightedCompleteGraph {
        WeightedCompleteGraph::uniform(n, Rational::one()).unwrap()
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 7;
        let mut expected = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(n, i, j), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn degrees_of_uniform_graphs() {
        let g = ones(5);
        assert_eq!(g.weighted_degree(3).unwrap(), q(4, 1));
        assert_eq!(ones(7).min_weighted_degree().unwrap(), q(6, 1));
        let z = WeightedCompleteGraph::uniform(5, Rational::zero()).unwrap();
        assert_eq!(z.weighted_degree(0).unwrap(), Rational::zero());
    }

    #[test]
    fn degree_errors() {
        let g = ones(4);
        assert!(matches!(
            g.weighted_degree(4),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            g.weighted_degree_to(1, &[0, 1]),
            Err(Error::VertexInSet(1))
        ));
        assert_eq!(g.weighted_degree_to(1, &[]).unwrap(), Rational::zero());
        assert_eq!(g.weighted_degree_to(1, &[0, 2, 3]).unwrap(), q(3, 1));
        assert!(WeightedCompleteGraph::uniform(1, Rational::one())
            .unwrap()
            .min_weighted_degree()
            .is_err());
    }

    #[test]
    fn clique_weights() {
        let g = ones(6);
        assert_eq!(g.clique_weight(&[0, 1, 2, 3]).unwrap(), q(6, 1));
        let g = WeightedCompleteGraph::from_edges(3, [(0, 1, q(3, 4))]).unwrap();
        assert_eq!(g.clique_weight(&[0, 1]).unwrap(), q(3, 4));
        assert!(matches!(
            g.clique_weight(&[0]),
            Err(Error::WrongSetSize { .. })
        ));
        assert!(matches!(
            g.clique_weight(&[0, 0]),
            Err(Error::DuplicateVertex(0))
        ));
    }

    #[test]
    fn heaviness_boundary() {
        // One triangle with total weight exactly t * C(3, 2) = 3/2.
        let g = WeightedCompleteGraph::uniform(3, q(1, 2)).unwrap();
        let p = FactorParams::new(3, q(1, 2)).unwrap();
        assert!(g.is_heavy(&[0, 1, 2], &p).unwrap());
        assert!(!g.is_strictly_heavy(&[0, 1, 2], &p).unwrap());
        let p = FactorParams::new(3, q(9, 10)).unwrap();
        let g = ones(3);
        assert!(g.is_heavy(&[0, 1, 2], &p).unwrap());
        assert!(g.is_strictly_heavy(&[0, 1, 2], &p).unwrap());
        assert!(g.is_heavy(&[0, 1], &p).is_err());
    }

    #[test]
    fn overweight_edges() {
        let g = ones(3);
        assert!(g
            .is_overweight_edge(0, 1, &FactorParams::new(3, q(1, 4)).unwrap())
            .unwrap());
        assert!(!g
            .is_overweight_edge(0, 1, &FactorParams::new(3, q(1, 2)).unwrap())
            .unwrap());
        let g = WeightedCompleteGraph::uniform(2, q(1, 3)).unwrap();
        assert!(g
            .is_overweight_edge(0, 1, &FactorParams::new(2, q(1, 3)).unwrap())
            .unwrap());
    }

    #[test]
    fn threshold_extremes() {
        let g = WeightedCompleteGraph::from_fn(6, |i, j| {
            q(((i + j) % 4) as i64, 3).min(Rational::one())
        })
        .unwrap();
        assert_eq!(g.threshold_subgraph(&Rational::zero()).edge_count(), 15);
        assert_eq!(g.threshold_subgraph(&q(4, 3)).edge_count(), 0);
    }

    #[test]
    fn scaling() {
        let g =
            WeightedCompleteGraph::from_fn(5, |i, j| q((i * j % 3) as i64, 2).min(Rational::one()))
                .unwrap();
        assert_eq!(g.scale_weights(&Rational::one()).unwrap(), g);
        let z = g.scale_weights(&Rational::zero()).unwrap();
        assert!(z.edges().all(|(_, _, w)| w.is_zero()));
        assert!(g.scale_weights(&q(3, 2)).is_err());
        assert!(g.scale_weights(&q(-1, 2)).is_err());
    }

    #[test]
    fn construction_validates_weights() {
        assert!(WeightedCompleteGraph::uniform(3, q(3, 2)).is_err());
        assert!(WeightedCompleteGraph::from_edges(3, [(0, 3, Rational::one())]).is_err());
        assert!(WeightedCompleteGraph::from_edges(3, [(1, 1, Rational::one())]).is_err());
        assert!(WeightedCompleteGraph::from_edges(3, [(0, 1, q(1, 2)), (1, 0, q(1, 2))]).is_err());
    }

    #[test]
    fn json_reader_accepts_sparse_and_writer_emits_all_pairs() {
        let g =
            WeightedCompleteGraph::from_json(r#"{"n": 4, "edges": [[0, 2, "1/2"], [3, 1, "1"]]}"#)
                .unwrap();
        assert_eq!(g.weight(2, 0), &q(1, 2));
        assert_eq!(g.weight(1, 3), &Rational::one());
        assert_eq!(g.weight(0, 1), &Rational::zero());
        let out: GraphFile = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(out.edges.len(), 6);
        assert!(out.edges.iter().all(|(i, j, _)| i < j));
        assert_eq!(WeightedCompleteGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn json_reader_reports_position() {
        let err =
            WeightedCompleteGraph::from_json("{\"n\": 3,\n \"edges\": [[0, 1, 0.5]]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn factor_validation() {
        assert!(CliqueFactor::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).is_ok());
        assert!(matches!(
            CliqueFactor::new(7, 3, vec![]),
            Err(Error::Divisibility { .. })
        ));
        assert!(CliqueFactor::new(6, 3, vec![vec![0, 1, 2], vec![2, 4, 5]]).is_err());
        assert!(CliqueFactor::new(6, 3, vec![vec![0, 1, 2]]).is_err());
        let f = CliqueFactor::new(4, 2, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(f.blocks(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn params_validation() {
        assert!(FactorParams::new(1, q(1, 2)).is_err());
        assert!(FactorParams::new(3, q(3, 2)).is_err());
        assert_eq!(
            FactorParams::new(4, q(1, 2)).unwrap().heavy_threshold(),
            &q(3, 1)
        );
        let p: FactorParams = serde_json::from_str(r#"{"r": 3, "t": "2/3"}"#).unwrap();
        assert_eq!(p.heavy_threshold(), &q(2, 1));
    }
}
