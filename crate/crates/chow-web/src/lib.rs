//! Browser bindings: plethysm decompositions, Littlewood-Richardson coefficients and
//! highest weight vectors, returned as JSON strings.

use chow_core::combinatorics::lr_coefficient;
use chow_core::glaction::hwv_space;
use chow_core::plethysm::{decompose, Space};
use chow_core::{Config, Partition};
use serde_json::json;
use wasm_bindgen::prelude::*;

// Keeps the page responsive; larger inputs are refused with a budget error.
const WEB_WEIGHT_CAP: usize = 20_000;
const WEB_MAX_CANDIDATES: usize = 2_000;

fn config() -> Config {
    Config { weight_cap: WEB_WEIGHT_CAP, max_candidates: WEB_MAX_CANDIDATES, ..Config::default() }
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("not a number: {x:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

pub fn decompose_json(space: &str, k: usize, d: u32, n: usize) -> Result<String, String> {
    let space: Space = space.parse().map_err(|e: chow_core::Error| e.to_string())?;
    let dec = decompose(space, k, d, n, &config()).map_err(|e| e.to_string())?;
    let modules: Vec<_> = dec.iter().map(|(p, m)| json!({ "partition": p.to_string(), "multiplicity": m })).collect();
    Ok(json!({ "text": dec.to_string(), "modules": modules, "dimension": dec.dimension(n).to_string() }).to_string())
}

pub fn lr_json(lambda: &str, mu: &str, nu: &str) -> Result<String, String> {
    let (l, m, n) = (parse_partition(lambda)?, parse_partition(mu)?, parse_partition(nu)?);
    Ok(json!({ "coefficient": lr_coefficient(&l, &m, &n) }).to_string())
}

pub fn hwv_json(k: usize, d: u32, lambda: &str) -> Result<String, String> {
    let lam = parse_partition(lambda)?;
    let basis = hwv_space(k, d, lam.len().max(1), &lam, &config()).map_err(|e| e.to_string())?;
    let vecs: Vec<_> = basis.iter().map(|f| json!({ "text": f.to_text(), "terms": f.len() })).collect();
    Ok(json!({ "vectors": vecs }).to_string())
}

#[wasm_bindgen]
pub fn decompose_plethysm(space: &str, k: usize, d: u32, n: usize) -> Result<String, JsError> {
    decompose_json(space, k, d, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn littlewood_richardson(lambda: &str, mu: &str, nu: &str) -> Result<String, JsError> {
    lr_json(lambda, mu, nu).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn highest_weight_vectors(k: usize, d: u32, lambda: &str) -> Result<String, JsError> {
    hwv_json(k, d, lambda).map_err(|e| JsError::new(&e))
}
