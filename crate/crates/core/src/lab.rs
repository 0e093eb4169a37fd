//! Lower-bound bookkeeping for `delta(r, t, n)`: certified constructions,
//! an annealing attack on the supremum, empirical checks of the upper bound,
//! and grid scans against the conjectured value.

use std::collections::BTreeMap;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    prop2_construction, random_weighting, Distribution, DEFAULT_ATTEMPT_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{FactorParams, Strictness, WeightedCompleteGraph};
use crate::rational::Rational;
use crate::solver::{find_heavy_factor, SolveCertificate, SolverCaps};

/// `1 - 1/1000`, applied to every weight so the construction moves from `W*` into `W`.
pub fn lower_bound_scale() -> Rational {
    Rational::new(999, 1000)
}

/// `1/r + (1 - 1/r) t`.
pub fn conjectured_delta(r: usize, t: &Rational) -> Rational {
    let inv = Rational::from(r).recip();
    &inv + (Rational::one() - &inv) * t
}

/// `1/2 + t/2`.
pub fn upper_bound_delta(t: &Rational) -> Rational {
    (Rational::one() + t) / Rational::from(2i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BoundSource {
    Prop2,
    HsSharpness,
    Adversarial { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub r: usize,
    pub t: Rational,
    pub n: usize,
    /// Minimum weighted degree of the recorded weighting.
    pub lower_bound_value: Rational,
    pub source: BoundSource,
    /// True when a strict exact solve exhausted every factor and `t > 0`.
    pub certified: bool,
    /// `t = 0`: every factor is heavy under `>=`, so no weighting certifies.
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighting_file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SolveCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundRecord {
    /// Recomputes the minimum degree and the strict solve on `weighting` and
    /// compares both with the record.
    pub fn reverify(&self, weighting: &WeightedCompleteGraph) -> Result<bool> {
        if weighting.n() != self.n || weighting.min_weighted_degree()? != self.lower_bound_value {
            return Ok(false);
        }
        let params = FactorParams::new(self.r, self.t.clone())?;
        let exhausted = find_heavy_factor(weighting, &params, Strictness::Strict)?.is_exhausted();
        Ok(exhausted
            == self
                .certificate
                .as_ref()
                .is_some_and(SolveCertificate::is_exhausted))
    }
}

/// A record together with the weighting it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedBound {
    pub record: BoundRecord,
    pub weighting: WeightedCompleteGraph,
}

fn certify(
    r: usize,
    t: &Rational,
    weighting: WeightedCompleteGraph,
    source: BoundSource,
    caps: &SolverCaps,
) -> Result<CertifiedBound> {
    let n = weighting.n();
    let params = FactorParams::new(r, t.clone())?;
    let degenerate = t.is_zero();
    let (certificate, note) = if n > caps.certification {
        (
            None,
            Some(format!(
                "n = {n} exceeds the certification cap {}",
                caps.certification
            )),
        )
    } else {
        (
            Some(find_heavy_factor(&weighting, &params, Strictness::Strict)?),
            None,
        )
    };
    let exhausted = certificate
        .as_ref()
        .is_some_and(SolveCertificate::is_exhausted);
    let note =
        note.or_else(|| degenerate.then(|| "t = 0 admits no certified lower bound".to_string()));
    let record = BoundRecord {
        r,
        t: t.clone(),
        n,
        lower_bound_value: weighting.min_weighted_degree()?,
        source,
        certified: exhausted && !degenerate,
        degenerate,
        weighting_file: None,
        certificate,
        note,
    };
    Ok(CertifiedBound { record, weighting })
}

/// Scaled lower-bound construction, certified by a strict exact solve when `n` is within the cap.
pub fn evaluate_lower_bounds(
    r: usize,
    t: &Rational,
    n: usize,
    caps: &SolverCaps,
) -> Result<CertifiedBound> {
    let (g, _) = prop2_construction(r, t, n)?;
    let scaled = g.scale_weights(&lower_bound_scale())?;
    certify(r, t, scaled, BoundSource::Prop2, caps)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnealConfig {
    /// Weights move on the grid `{0, 1/D, ..., 1}`.
    pub denominator: u32,
    /// Proposed moves.
    pub budget: usize,
    /// In units of weighted degree; grid steps move a degree by `1/D`.
    pub initial_temperature: f64,
    /// Multiplicative cooling per move.
    pub cooling: f64,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        AnnealConfig {
            denominator: 12,
            budget: 2000,
            initial_temperature: 0.02,
            cooling: 0.998,
        }
    }
}

/// Simulated annealing over grid weightings, started from the scaled
/// construction. A state is feasible when a strict exact solve finds no heavy
/// factor; the objective is the minimum weighted degree. Returns the starting
/// record unless a strictly better feasible weighting turns up.
pub fn adversarial_search(
    r: usize,
    t: &Rational,
    n: usize,
    seed: u64,
    config: &AnnealConfig,
    caps: &SolverCaps,
) -> Result<CertifiedBound> {
    if n > caps.certification {
        return Err(Error::CapExceeded {
            what: "adversarial search",
            value: n,
            cap: caps.certification,
        });
    }
    if config.denominator == 0 {
        return Err(Error::InvalidParams(
            "grid denominator must be positive".into(),
        ));
    }
    let start = evaluate_lower_bounds(r, t, n, caps)?;
    let params = FactorParams::new(r, t.clone())?;
    let d = i64::from(config.denominator);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut current = start.weighting.clone();
    let mut current_value = start.record.lower_bound_value.clone();
    let mut best: Option<(WeightedCompleteGraph, Rational)> = None;
    let mut temperature = config.initial_temperature;
    for _ in 0..config.budget {
        temperature *= config.cooling;
        // Half the moves touch a vertex of minimum degree, the only ones that can raise the objective.
        let i = if rng.gen_bool(0.5) {
            let degrees = current.weighted_degrees();
            let lowest: Vec<usize> = (0..n).filter(|&v| degrees[v] == current_value).collect();
            lowest[rng.gen_range(0..lowest.len())]
        } else {
            rng.gen_range(0..n)
        };
        let j = (i + rng.gen_range(1..n)) % n;
        let old = current.weight(i, j).clone();
        let proposed = grid_step(&old, d, rng.gen_bool(0.5));
        if proposed == old {
            continue;
        }
        let candidate = current.with_weight(i, j, proposed.clone())?;
        let value = candidate.min_weighted_degree()?;
        let delta = (&value - &current_value).to_f64();
        let accept = delta >= 0.0
            || (temperature > 0.0 && rng.gen_bool((delta / temperature).exp().min(1.0)));
        if !accept {
            continue;
        }
        // Lowering a weight never creates a heavy factor.
        let feasible = proposed < old
            || find_heavy_factor(&candidate, &params, Strictness::Strict)?.is_exhausted();
        if !feasible {
            continue;
        }
        current = candidate;
        current_value = value;
        let best_value = best
            .as_ref()
            .map_or(&start.record.lower_bound_value, |(_, v)| v);
        if current_value > *best_value {
            best = Some((current.clone(), current_value.clone()));
        }
    }
    match best {
        Some((weighting, _)) => certify(r, t, weighting, BoundSource::Adversarial { seed }, caps),
        None => Ok(start),
    }
}

/// Next grid point `k/d` above (or below) `w`, clamped to `[0, 1]`.
fn grid_step(w: &Rational, d: i64, up: bool) -> Rational {
    let scaled = w * Rational::from(d);
    let floor = scaled.floor();
    let k = if up {
        floor + 1
    } else if Rational::from(floor.clone()) == scaled {
        floor - 1
    } else {
        floor
    };
    let k = k.max(0.into()).min(d.into());
    Rational::from(k) / Rational::from(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Config {
    /// Added to `1/2 + t/2` for the sampled minimum degree.
    pub margin: Rational,
    pub denominator: u32,
    /// Violations at `n` below this floor are logged only.
    pub n_floor: usize,
    pub attempt_cap: usize,
}

impl Default for Theorem3Config {
    fn default() -> Self {
        Theorem3Config {
            margin: Rational::new(1, 10),
            denominator: 12,
            n_floor: usize::MAX,
            attempt_cap: DEFAULT_ATTEMPT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Violation {
    pub trial: usize,
    pub seed: u64,
    pub min_weighted_degree: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Report {
    pub r: usize,
    pub t: Rational,
    pub n: usize,
    /// Normalized minimum degree imposed on every sample.
    pub delta: Rational,
    pub trials: usize,
    pub passed: usize,
    pub violations: Vec<Theorem3Violation>,
    /// False when `n` is below the floor and violations are informational.
    pub enforced: bool,
}

/// Samples weightings above the upper bound plus a margin and checks each for
/// a heavy (`>=`) factor. Violations are finite-`n` observations, not
/// disproofs; the caller decides whether an enforced violation is fatal.
pub fn verify_theorem3_empirically(
    r: usize,
    t: &Rational,
    trials: usize,
    n: usize,
    seed: u64,
    config: &Theorem3Config,
    caps: &SolverCaps,
) -> Result<Theorem3Report> {
    if r < 2 || !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    if n > caps.certification {
        return Err(Error::CapExceeded {
            what: "theorem 3 sampling",
            value: n,
            cap: caps.certification,
        });
    }
    let params = FactorParams::new(r, t.clone())?;
    let delta = upper_bound_delta(t) + &config.margin;
    let dist = Distribution::MinDegreeConditioned {
        delta: delta.clone(),
        denominator: config.denominator,
    };
    let mut report = Theorem3Report {
        r,
        t: t.clone(),
        n,
        delta,
        trials,
        passed: 0,
        violations: Vec::new(),
        enforced: n >= config.n_floor,
    };
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial as u64);
        let g = random_weighting(n, &dist, trial_seed, config.attempt_cap)?;
        if find_heavy_factor(&g, &params, Strictness::AtLeast)?.is_exhausted() {
            report.violations.push(Theorem3Violation {
                trial,
                seed: trial_seed,
                min_weighted_degree: g.min_weighted_degree()?,
            });
        } else {
            report.passed += 1;
        }
    }
    Ok(report)
}

/// One CSV row. Degree columns are normalized by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCell {
    pub r: usize,
    pub t: Rational,
    pub n: usize,
    pub prop2_value: Rational,
    pub adversarial_value: Option<Rational>,
    pub conjecture: Rational,
    pub upper_bound: Rational,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub cells: Vec<ScanCell>,
    /// Skipped cells and trend observations, in deterministic order.
    pub observations: Vec<String>,
}

impl ConjectureReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for cell in &self.cells {
            w.serialize(cell)?;
        }
        if self.cells.is_empty() {
            w.write_record([
                "r",
                "t",
                "n",
                "prop2_value",
                "adversarial_value",
                "conjecture",
                "upper_bound",
                "certified",
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Annealing per cell; `None` leaves the adversarial column empty.
    pub adversarial: Option<AnnealConfig>,
}

/// Tabulates every `(r, t)` cell at order `n`. Cells with `r` not dividing `n`
/// are skipped and noted.
pub fn scan_report(
    rs: &[usize],
    ts: &[Rational],
    n: usize,
    seed: u64,
    config: &ScanConfig,
    caps: &SolverCaps,
) -> Result<ConjectureReport> {
    let mut cells = Vec::new();
    let mut observations = Vec::new();
    let n_q = Rational::from(n);
    for &r in rs {
        for t in ts {
            if r < 2 || !n.is_multiple_of(r) || n <= r {
                observations.push(format!(
                    "skipped r={r} t={t} n={n}: r must divide n and be smaller than it"
                ));
                continue;
            }
            let prop2 = evaluate_lower_bounds(r, t, n, caps)?;
            let adversarial = match &config.adversarial {
                Some(anneal) if n <= caps.certification => {
                    Some(adversarial_search(r, t, n, seed, anneal, caps)?)
                }
                _ => None,
            };
            let certified =
                prop2.record.certified && adversarial.as_ref().is_none_or(|a| a.record.certified);
            cells.push(ScanCell {
                r,
                t: t.clone(),
                n,
                prop2_value: &prop2.record.lower_bound_value / &n_q,
                adversarial_value: adversarial.map(|a| a.record.lower_bound_value / &n_q),
                conjecture: conjectured_delta(r, t),
                upper_bound: upper_bound_delta(t),
                certified,
            });
        }
    }
    observations.extend(trend_observations(&cells));
    Ok(ConjectureReport {
        cells,
        observations,
    })
}

/// Flags cells where the best lower bound grows with `r` at fixed `t`,
/// against the expected decreasing trend.
fn trend_observations(cells: &[ScanCell]) -> Vec<String> {
    let mut by_t: BTreeMap<&Rational, Vec<&ScanCell>> = BTreeMap::new();
    for c in cells {
        by_t.entry(&c.t).or_default().push(c);
    }
    let mut out = Vec::new();
    for (t, mut row) in by_t {
        row.sort_by_key(|c| c.r);
        for pair in row.windows(2) {
            let best = |c: &ScanCell| {
                c.adversarial_value
                    .clone()
                    .unwrap_or_else(|| c.prop2_value.clone())
                    .max(c.prop2_value.clone())
            };
            let (lo, hi) = (best(pair[0]), best(pair[1]));
            if hi > lo {
                out.push(format!(
                    "t={t}: best lower bound rises from {lo} at r={} to {hi} at r={}",
                    pair[0].r, pair[1].r
                ));
            }
        }
    }
    out
}
