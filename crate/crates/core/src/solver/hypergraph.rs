use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{check_search_size, full_mask, heavy_subsets, mask_of};
use crate::error::{Error, Result};
use crate::graph::{binomial_q, FactorParams, Strictness, Vertex, WeightedCompleteGraph};
use crate::rational::Rational;

/// `r`-uniform hypergraph on `0..n`; edges are sorted vertex lists in
/// lexicographic order, without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeavyHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<Vertex>>,
}

impl HeavyHypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::WrongSetSize {
                    expected: r,
                    actual: e.len(),
                });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertex(e[0]));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if !set.insert(e.clone()) {
                return Err(Error::InvalidParams(format!(
                    "hyperedge {e:?} listed twice"
                )));
            }
        }
        Ok(HeavyHypergraph {
            n,
            r,
            edges: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }
}

/// Hypergraph whose edges are exactly the heavy `r`-sets of `g`.
pub fn build_heavy_hypergraph(
    g: &WeightedCompleteGraph,
    params: &FactorParams,
    strictness: Strictness,
) -> Result<HeavyHypergraph> {
    let vertices: Vec<Vertex> = (0..g.n()).collect();
    Ok(HeavyHypergraph {
        n: g.n(),
        r: params.r(),
        edges: heavy_subsets(g, &vertices, params, strictness),
    })
}

fn matching_search(
    full: u64,
    by_min: &[Vec<u64>],
    covered: u64,
    chosen: &mut Vec<u64>,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    if covered == full {
        return true;
    }
    let v = (!covered & full).trailing_zeros() as usize;
    for &e in &by_min[v] {
        if e & covered != 0 {
            continue;
        }
        chosen.push(e);
        if matching_search(full, by_min, covered | e, chosen, nodes) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub(crate) fn perfect_matching_with_stats(
    h: &HeavyHypergraph,
) -> Result<(Option<Vec<Vec<Vertex>>>, u64)> {
    if h.r == 0 || !h.n.is_multiple_of(h.r) {
        return Err(Error::Divisibility { n: h.n, r: h.r });
    }
    check_search_size(h.n)?;
    // Every uncovered vertex is larger than the anchor, so only edges whose
    // minimum is the anchor can cover it.
    let mut by_min = vec![Vec::new(); h.n];
    for e in &h.edges {
        by_min[e[0]].push(mask_of(e));
    }
    let mut chosen = Vec::new();
    let mut nodes = 0;
    let found = matching_search(full_mask(h.n), &by_min, 0, &mut chosen, &mut nodes);
    let matching = found.then(|| chosen.iter().map(|&m| super::vertices_of(m)).collect());
    Ok((matching, nodes))
}

/// Complete backtracking for a perfect matching: the smallest uncovered
/// vertex is covered by each of its hyperedges in turn.
pub fn hypergraph_perfect_matching(h: &HeavyHypergraph) -> Result<Option<Vec<Vec<Vertex>>>> {
    Ok(perfect_matching_with_stats(h)?.0)
}

/// `(1 - 1/r) (C(n-1, r-1) - 1)`.
pub fn daykin_haggkvist_threshold(n: usize, r: usize) -> Rational {
    let r_q = Rational::from(r);
    (Rational::one() - r_q.recip()) * (binomial_q(n - 1, r - 1) - Rational::one())
}

/// True when every vertex lies in at least `(1 - 1/r)(C(n-1, r-1) - 1)` hyperedges,
/// which is sufficient for a perfect matching.
pub fn daykin_haggkvist_check(h: &HeavyHypergraph) -> bool {
    if h.n == 0 || h.r == 0 {
        return false;
    }
    let bound = daykin_haggkvist_threshold(h.n, h.r);
    h.degrees().into_iter().all(|d| Rational::from(d) >= bound)
}

/// Number of `r`-sets through `v` passing the heaviness predicate.
pub fn heavy_cliques_containing(
    g: &WeightedCompleteGraph,
    v: Vertex,
    params: &FactorParams,
    strictness: Strictness,
) -> Result<u64> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut count = 0;
    let mut set = Vec::with_capacity(params.r());
    for others in (0..g.n()).filter(|&u| u != v).combinations(params.r() - 1) {
        set.clear();
        set.push(v);
        set.extend(others);
        if strictness.admits(&g.clique_weight_unchecked(&set), params.heavy_threshold()) {
            count += 1;
        }
    }
    Ok(count)
}

/// `((delta - t) / (1 - t)) C(n-1, r-1)`: every vertex of a graph with minimum
/// weighted degree at least `delta n` lies in at least this many heavy `r`-sets.
pub fn lemma1_bound(delta: &Rational, t: &Rational, r: usize, n: usize) -> Result<Rational> {
    if *t == Rational::one() {
        return Err(Error::InvalidParams(
            "the clique-count bound needs t < 1".into(),
        ));
    }
    if r == 0 || n == 0 || r > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok((delta - t) / (Rational::one() - t) * binomial_q(n - 1, r - 1))
}
