//! Three operations from `interp-core` for the static page in `www/`. Each
//! returns a JSON string; the `*_json` functions are the same operations
//! without the JavaScript boundary.

use interp_core::entropy_count::growth_rate_profile;
use interp_core::intsets::{banach_density_profile, IntegerSetModel};
use interp_core::rational::{parse_rational, ContinuedFraction};
use interp_core::words::{complexity_profile, mechanical_word};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest inputs the page accepts, to keep the tab responsive.
pub const MAX_WORD: usize = 200_000;
pub const MAX_WINDOW: u64 = 5_000_000;
pub const MAX_M: u64 = 5_000;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Complexity `p(n)` of the mechanical word whose slope is the continued
/// fraction `cf` (e.g. `0,2,2,2,2`), next to the Sturmian value `n + 1`.
pub fn sturmian_complexity_json(cf: &str, len: usize, n_max: usize) -> Result<String, String> {
    if len > MAX_WORD {
        return Err(format!("length is limited to {MAX_WORD}"));
    }
    let cf: ContinuedFraction = cf.parse().map_err(err)?;
    let delta = cf.value();
    let w = mechanical_word(delta, len).map_err(err)?;
    let prof = complexity_profile(&w, n_max).map_err(err)?;
    let rows: Vec<_> = (1..=n_max).map(|n| json!({ "n": n, "p": prof.p(n), "sturmian": n + 1 })).collect();
    let prefix: String = w.symbols().iter().take(120).map(|s| char::from(b'0' + s)).collect();
    Ok(json!({ "delta": delta.to_string(), "prefix": prefix, "rows": rows }).to_string())
}

/// Dyadic upper Banach density profile of a generated set on `[1, n]`.
pub fn banach_profile_json(spec: &str, n: u64, n_max: u64) -> Result<String, String> {
    if n > MAX_WINDOW {
        return Err(format!("window is limited to {MAX_WINDOW}"));
    }
    let set: IntegerSetModel = spec.parse().map_err(err)?;
    let prof = banach_density_profile(&set, n, n_max).map_err(err)?;
    let rows: Vec<_> = prof
        .points
        .iter()
        .map(|p| json!({ "n": p.n, "count": p.count, "start": p.start, "density": p.value() }))
        .collect();
    let exact = prof.exact.map(|d| d.to_string());
    Ok(json!({ "set": set.to_spec_string(), "exact": exact, "rows": rows }).to_string())
}

/// Exact rates `log|S(m, δ, k)| / m` for `m = step, 2·step, …, m_max`.
pub fn growth_rates_json(delta: &str, k: u32, m_max: u64, step: u64) -> Result<String, String> {
    if m_max > MAX_M {
        return Err(format!("m is limited to {MAX_M}"));
    }
    if step == 0 {
        return Err("step must be at least 1".into());
    }
    let delta = parse_rational(delta).map_err(err)?;
    let ms: Vec<u64> = (1..).map(|i| i * step).take_while(|&m| m <= m_max).collect();
    let prof = growth_rate_profile(delta, k, &ms).map_err(err)?;
    let rows: Vec<_> = prof
        .points
        .iter()
        .map(|p| json!({ "m": p.result.m, "count_digits": p.result.count.to_string().len(), "rate": p.result.log_rate }))
        .collect();
    Ok(json!({ "limit": prof.analytic_limit, "rows": rows }).to_string())
}

#[wasm_bindgen]
pub fn sturmian_complexity(cf: &str, len: usize, n_max: usize) -> Result<String, JsValue> {
    sturmian_complexity_json(cf, len, n_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn banach_profile(spec: &str, n: u64, n_max: u64) -> Result<String, JsValue> {
    banach_profile_json(spec, n, n_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn growth_rates(delta: &str, k: u32, m_max: u64, step: u64) -> Result<String, JsValue> {
    growth_rates_json(delta, k, m_max, step).map_err(|e| JsValue::from_str(&e))
}
