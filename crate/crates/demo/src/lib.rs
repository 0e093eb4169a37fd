//! WebAssembly bindings for the static page in `www/`.
//!
//! Each export takes plain strings and numbers and returns a JSON string; the
//! `*_json` functions hold the logic and are callable natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use hfl_core::constructions::{
    counterexample_29_36, hs_sharpness_construction, prop2_construction, random_weighting,
    Distribution,
};
use hfl_core::lab::{conjectured_delta, upper_bound_delta};
use hfl_core::solver::{find_heavy_factor, MAX_SEARCH_VERTICES};
use hfl_core::{FactorParams, Rational, Strictness, WeightedCompleteGraph};

/// Largest graph the page will build; keeps the heatmap and the solver responsive.
pub const DEMO_MAX_N: usize = 36;

#[derive(Serialize)]
struct Heatmap {
    n: usize,
    /// Row-major `n x n` weights as floats for colouring; the diagonal is 0.
    cells: Vec<f64>,
    graph: WeightedCompleteGraph,
    min_weighted_degree: Rational,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: hfl_core::Error| e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Builds a named construction and returns it with a float matrix for display.
pub fn construction_json(
    kind: &str,
    r: usize,
    t: &str,
    n: usize,
    seed: u64,
) -> Result<String, String> {
    if n > DEMO_MAX_N {
        return Err(format!("n = {n} is above the demo limit {DEMO_MAX_N}"));
    }
    let err = |e: hfl_core::Error| e.to_string();
    let g = match kind {
        "prop2" => {
            prop2_construction(r, &parse_rational(t)?, n)
                .map_err(err)?
                .0
        }
        "hs-sharpness" => hs_sharpness_construction(r, n).map_err(err)?.0,
        "counterexample-29-36" => counterexample_29_36(n).map_err(err)?.0,
        "random" => random_weighting(n, &Distribution::UniformGrid { denominator: 12 }, seed, 1)
            .map_err(err)?,
        other => return Err(format!("unknown construction `{other}`")),
    };
    let mut cells = vec![0.0; n * n];
    for (i, j, w) in g.edges() {
        cells[i * n + j] = w.to_f64();
        cells[j * n + i] = w.to_f64();
    }
    json(&Heatmap {
        n,
        cells,
        min_weighted_degree: g.min_weighted_degree().map_err(err)?,
        graph: g,
    })
}

/// Exact solve of a graph given as JSON; returns the certificate.
pub fn solve_json(graph: &str, r: usize, t: &str, strict: bool) -> Result<String, String> {
    let g = WeightedCompleteGraph::from_json(graph).map_err(|e| e.to_string())?;
    if g.n() > MAX_SEARCH_VERTICES {
        return Err(format!(
            "the solver handles at most {MAX_SEARCH_VERTICES} vertices"
        ));
    }
    let params = FactorParams::new(r, parse_rational(t)?).map_err(|e| e.to_string())?;
    let strictness = if strict {
        Strictness::Strict
    } else {
        Strictness::AtLeast
    };
    json(&find_heavy_factor(&g, &params, strictness).map_err(|e| e.to_string())?)
}

#[derive(Serialize)]
struct Curve {
    r: usize,
    /// `(t, 1/r + (1 - 1/r) t)` at each sampled `t`.
    conjecture: Vec<(f64, f64)>,
}

#[derive(Serialize)]
struct Curves {
    upper: Vec<(f64, f64)>,
    lower: Vec<Curve>,
}

/// Conjectured value for each `r` and the proven upper bound, sampled at `t = k / steps`.
pub fn curves_json(rs: &[usize], steps: u32) -> Result<String, String> {
    if steps == 0 {
        return Err("steps must be positive".into());
    }
    if let Some(r) = rs.iter().find(|&&r| r < 2) {
        return Err(format!("r = {r} must be at least 2"));
    }
    let ts: Vec<Rational> = (0..=steps)
        .map(|k| Rational::new(i64::from(k), i64::from(steps)))
        .collect();
    let upper = ts
        .iter()
        .map(|t| (t.to_f64(), upper_bound_delta(t).to_f64()))
        .collect();
    let lower = rs
        .iter()
        .map(|&r| Curve {
            r,
            conjecture: ts
                .iter()
                .map(|t| (t.to_f64(), conjectured_delta(r, t).to_f64()))
                .collect(),
        })
        .collect();
    json(&Curves { upper, lower })
}

#[wasm_bindgen]
pub fn construction(kind: &str, r: usize, t: &str, n: usize, seed: u64) -> Result<String, JsError> {
    construction_json(kind, r, t, n, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(graph: &str, r: usize, t: &str, strict: bool) -> Result<String, JsError> {
    solve_json(graph, r, t, strict).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn curves(rs: Vec<usize>, steps: u32) -> Result<String, JsError> {
    curves_json(&rs, steps).map_err(|e| JsError::new(&e))
}
