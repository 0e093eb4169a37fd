//! Generators for the extremal weightings and for seeded random instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedCompleteGraph};
use crate::rational::Rational;

/// Default number of samples drawn by [`random_weighting`] before giving up.
pub const DEFAULT_ATTEMPT_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructionKind {
    #[serde(rename = "prop2")]
    Prop2,
    #[serde(rename = "hs-sharpness")]
    HsSharpness,
    #[serde(rename = "counterexample-29-36")]
    Counterexample2936,
    #[serde(rename = "random")]
    Random,
}

/// Weight distributions for [`random_weighting`]. Every weight lands on the
/// grid `{0, 1/D, ..., 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Distribution {
    /// Independent uniform weights on the grid.
    UniformGrid { denominator: u32 },
    /// Rejection-sampled until the minimum weighted degree is at least `delta * n`.
    MinDegreeConditioned { delta: Rational, denominator: u32 },
    /// Each pair is nonzero with probability `density`, then uniform on `{1/D, ..., 1}`.
    SparseGrid { denominator: u32, density: Rational },
}

/// A labelled group of vertices (the sets `A`, `B`, or the parts of a multipartite graph).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub label: String,
    pub vertices: Vec<Vertex>,
}

/// Everything needed to rebuild a generated graph exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionDescriptor {
    pub kind: ConstructionKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Distribution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempt_cap: Option<usize>,
    /// Factor applied to every weight after generation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<Rational>,
    pub parts: Vec<Part>,
}

impl ConstructionDescriptor {
    /// Rebuilds the graph from the recorded parameters.
    pub fn build(&self) -> Result<WeightedCompleteGraph> {
        let g = self.build_unscaled()?;
        match &self.scale {
            Some(f) => g.scale_weights(f),
            None => Ok(g),
        }
    }

    fn build_unscaled(&self) -> Result<WeightedCompleteGraph> {
        let missing = |field: &str| Error::InvalidParams(format!("descriptor lacks `{field}`"));
        match self.kind {
            ConstructionKind::Prop2 => {
                let r = self.r.ok_or_else(|| missing("r"))?;
                let t = self.t.clone().ok_or_else(|| missing("t"))?;
                Ok(prop2_construction(r, &t, self.n)?.0)
            }
            ConstructionKind::HsSharpness => {
                let r = self.r.ok_or_else(|| missing("r"))?;
                Ok(hs_sharpness_construction(r, self.n)?.0)
            }
            ConstructionKind::Counterexample2936 => Ok(counterexample_29_36(self.n)?.0),
            ConstructionKind::Random => {
                let dist = self
                    .distribution
                    .as_ref()
                    .ok_or_else(|| missing("distribution"))?;
                let seed = self.seed.ok_or_else(|| missing("seed"))?;
                random_weighting(
                    self.n,
                    dist,
                    seed,
                    self.attempt_cap.unwrap_or(DEFAULT_ATTEMPT_CAP),
                )
            }
        }
    }
}

fn part(label: &str, vertices: impl IntoIterator<Item = Vertex>) -> Part {
    Part {
        label: label.to_string(),
        vertices: vertices.into_iter().collect(),
    }
}

/// The lower-bound weighting: `A` holds the first `n/r - 1` vertices, pairs
/// inside `B` weigh `t`, every other pair weighs 1.
pub fn prop2_construction(
    r: usize,
    t: &Rational,
    n: usize,
) -> Result<(WeightedCompleteGraph, ConstructionDescriptor)> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("r = {r} must be at least 2")));
    }
    if !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    if n <= r {
        return Err(Error::InvalidParams(format!(
            "need n > r, got n = {n}, r = {r}"
        )));
    }
    if !t.in_unit_interval() {
        return Err(Error::OutOfUnitInterval {
            what: "t",
            value: t.to_string(),
        });
    }
    let a_size = n / r - 1;
    let g = WeightedCompleteGraph::from_fn(n, |i, _j| {
        // i < j, so both endpoints lie in B exactly when i does.
        if i >= a_size {
            t.clone()
        } else {
            Rational::one()
        }
    })?;
    let descriptor = ConstructionDescriptor {
        kind: ConstructionKind::Prop2,
        n,
        r: Some(r),
        t: Some(t.clone()),
        seed: None,
        distribution: None,
        attempt_cap: None,
        scale: None,
        parts: vec![part("A", 0..a_size), part("B", a_size..n)],
    };
    Ok((g, descriptor))
}

/// `min{n - 1, k - 1 + t (n - k)}` with `k = n / r`.
pub fn prop2_min_degree(r: usize, t: &Rational, n: usize) -> Rational {
    let k = n / r;
    let mixed = Rational::from(k - 1) + t * Rational::from(n - k);
    Rational::from(n - 1).min(mixed)
}

/// Part sizes of the complete multipartite extremal graph: one part of size
/// `n/r + 1`, the rest split as evenly as possible into `r - 1` parts.
pub fn hs_sharpness_part_sizes(r: usize, n: usize) -> Result<Vec<usize>> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("r = {r} must be at least 2")));
    }
    if !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    if n <= r {
        return Err(Error::InvalidParams(format!(
            "n = {n} leaves no room for the remaining {} parts",
            r - 1
        )));
    }
    let big = n / r + 1;
    let rest = n - big;
    let (base, extra) = (rest / (r - 1), rest % (r - 1));
    let mut sizes = vec![big];
    sizes.extend((0..r - 1).map(|i| base + usize::from(i < extra)));
    Ok(sizes)
}

/// 0/1 weighting: weight 1 exactly between different parts.
pub fn hs_sharpness_construction(
    r: usize,
    n: usize,
) -> Result<(WeightedCompleteGraph, ConstructionDescriptor)> {
    let sizes = hs_sharpness_part_sizes(r, n)?;
    let mut label = Vec::with_capacity(n);
    let mut parts = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for (idx, &s) in sizes.iter().enumerate() {
        label.extend(std::iter::repeat_n(idx, s));
        parts.push(part(&format!("P{idx}"), start..start + s));
        start += s;
    }
    let g = WeightedCompleteGraph::from_fn(n, |i, j| {
        if label[i] != label[j] {
            Rational::one()
        } else {
            Rational::zero()
        }
    })?;
    let descriptor = ConstructionDescriptor {
        kind: ConstructionKind::HsSharpness,
        n,
        r: Some(r),
        t: None,
        seed: None,
        distribution: None,
        attempt_cap: None,
        scale: None,
        parts,
    };
    Ok((g, descriptor))
}

/// `|A| = 29n/36`, `|B| = 7n/36`; all A–B pairs and a circulant
/// `(11n/18)`-regular graph on `A` weigh 1, everything else 0.
pub fn counterexample_29_36(n: usize) -> Result<(WeightedCompleteGraph, ConstructionDescriptor)> {
    if n == 0 || !n.is_multiple_of(36) {
        return Err(Error::Divisibility { n, r: 36 });
    }
    let a_size = 29 * n / 36;
    let reach = 11 * n / 36;
    // offsets ±1..±reach must be distinct modulo |A|
    if 2 * reach >= a_size {
        return Err(Error::InvalidParams(format!(
            "a {}-regular circulant does not fit on {a_size} vertices",
            2 * reach
        )));
    }
    let g = WeightedCompleteGraph::from_fn(n, |i, j| {
        let in_a = |v: Vertex| v < a_size;
        let w = match (in_a(i), in_a(j)) {
            (true, true) => {
                let gap = j - i;
                gap <= reach || a_size - gap <= reach
            }
            (false, false) => false,
            _ => true,
        };
        if w {
            Rational::one()
        } else {
            Rational::zero()
        }
    })?;
    let descriptor = ConstructionDescriptor {
        kind: ConstructionKind::Counterexample2936,
        n,
        r: Some(3),
        t: None,
        seed: None,
        distribution: None,
        attempt_cap: None,
        scale: None,
        parts: vec![part("A", 0..a_size), part("B", a_size..n)],
    };
    Ok((g, descriptor))
}

fn grid(denominator: u32) -> Result<i64> {
    if denominator == 0 {
        return Err(Error::InvalidParams(
            "grid denominator must be positive".into(),
        ));
    }
    Ok(i64::from(denominator))
}

/// Seeded random weighting on the rational grid of `dist`.
pub fn random_weighting(
    n: usize,
    dist: &Distribution,
    seed: u64,
    attempt_cap: usize,
) -> Result<WeightedCompleteGraph> {
    if n < 2 {
        return Err(Error::InvalidParams("random weightings need n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match dist {
        Distribution::UniformGrid { denominator } => {
            let d = grid(*denominator)?;
            WeightedCompleteGraph::from_fn(n, |_, _| Rational::new(rng.gen_range(0..=d), d))
        }
        Distribution::SparseGrid {
            denominator,
            density,
        } => {
            let d = grid(*denominator)?;
            if !density.in_unit_interval() {
                return Err(Error::OutOfUnitInterval {
                    what: "density",
                    value: density.to_string(),
                });
            }
            let p = density.to_f64();
            WeightedCompleteGraph::from_fn(n, |_, _| {
                if rng.gen_bool(p) {
                    Rational::new(rng.gen_range(1..=d), d)
                } else {
                    Rational::zero()
                }
            })
        }
        Distribution::MinDegreeConditioned { delta, denominator } => {
            let d = grid(*denominator)?;
            let target = delta * Rational::from(n);
            // Per-pair mean needed for the average degree to reach the target.
            let needed = &target / Rational::from(n - 1);
            if needed > Rational::one() {
                return Err(Error::InvalidParams(format!(
                    "minimum degree {target} is unreachable on {n} vertices"
                )));
            }
            // Sample from a mixture (1 with probability p, else uniform on the
            // grid) whose mean sits halfway between `needed` and 1.
            let mean = (needed + Rational::one()) / Rational::from(2i64);
            let p_one = (mean * Rational::from(2i64) - Rational::one())
                .max(Rational::zero())
                .to_f64();
            for _ in 0..attempt_cap {
                let g = WeightedCompleteGraph::from_fn(n, |_, _| {
                    if rng.gen_bool(p_one) {
                        Rational::one()
                    } else {
                        Rational::new(rng.gen_range(0..=d), d)
                    }
                })?;
                if g.min_weighted_degree()? >= target {
                    return Ok(g);
                }
            }
            Err(Error::BudgetExhausted {
                what: "min-degree-conditioned sampling",
                attempts: attempt_cap,
            })
        }
    }
}

/// [`random_weighting`] together with its descriptor.
pub fn random_construction(
    n: usize,
    dist: &Distribution,
    seed: u64,
    attempt_cap: usize,
) -> Result<(WeightedCompleteGraph, ConstructionDescriptor)> {
    let g = random_weighting(n, dist, seed, attempt_cap)?;
    let descriptor = ConstructionDescriptor {
        kind: ConstructionKind::Random,
        n,
        r: None,
        t: None,
        seed: Some(seed),
        distribution: Some(dist.clone()),
        attempt_cap: Some(attempt_cap),
        scale: None,
        parts: vec![part("V", 0..n)],
    };
    Ok((g, descriptor))
}
