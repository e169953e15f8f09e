//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes a JSON request and returns a JSON string:
//!
//! ```json
//! {"model": "pfp", "n": 800, "seed": 1, "params": {"delta": 0.02}}
//! ```
//!
//! `params` is optional and overlays the model defaults. Errors come back as a
//! thrown string.

use astopo::metrics::{self, SpectrumMode};
use astopo::{Graph, ModelConfig, ModelKind, Seed};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will generate.
pub const MAX_NODES: usize = 6000;
/// Dense eigensolves beyond this stall the tab.
pub const MAX_SPECTRUM_NODES: usize = 1500;

#[derive(Debug, Deserialize)]
pub struct Request {
    pub model: String,
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub params: Map<String, Value>,
}

#[derive(Debug, Serialize)]
pub struct DegreeCurves {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub p_k: Vec<(usize, f64)>,
    pub knn_norm: Vec<(usize, f64)>,
}

#[derive(Debug, Serialize)]
pub struct RichClubCurve {
    pub n: usize,
    pub m: usize,
    /// `(rho / N, phi)`.
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub m: usize,
    pub eigenvalues: Vec<f64>,
}

/// Resolves a request into a full model config.
pub fn config_for(req: &Request) -> Result<ModelConfig, String> {
    let kind: ModelKind = req.model.parse().map_err(|e| format!("{e}"))?;
    if req.n > MAX_NODES {
        return Err(format!("n = {} exceeds the demo limit of {MAX_NODES}", req.n));
    }
    let mut value = serde_json::to_value(ModelConfig::default_for(kind, req.n)).map_err(|e| e.to_string())?;
    let fields = value.as_object_mut().expect("model config serializes to an object");
    for (key, v) in &req.params {
        if key == "model" || key == "n" || !fields.contains_key(key) {
            return Err(format!("unknown parameter '{key}' for {kind}"));
        }
        fields.insert(key.clone(), v.clone());
    }
    let cfg: ModelConfig = serde_json::from_value(value).map_err(|e| e.to_string())?;
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn build(request: &str) -> Result<Graph, String> {
    let req: Request = serde_json::from_str(request).map_err(|e| format!("bad request: {e}"))?;
    let cfg = config_for(&req)?;
    cfg.generate(Seed(req.seed)).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn defaults_json(model: &str, n: usize) -> Result<String, String> {
    let kind: ModelKind = model.parse().map_err(|e| format!("{e}"))?;
    let mut value = serde_json::to_value(ModelConfig::default_for(kind, n)).map_err(|e| e.to_string())?;
    if let Some(fields) = value.as_object_mut() {
        fields.remove("model");
        fields.remove("n");
    }
    to_json(&value)
}

pub fn degree_curves_json(request: &str) -> Result<String, String> {
    let g = build(request)?;
    let d = metrics::degree_profile(&g);
    to_json(&DegreeCurves {
        n: g.node_count(),
        m: g.edge_count(),
        avg_degree: d.avg_degree,
        p_k: d.p_k.into_iter().collect(),
        knn_norm: d.knn_norm.into_iter().collect(),
    })
}

pub fn rich_club_json(request: &str) -> Result<String, String> {
    let g = build(request)?;
    let n = g.node_count() as f64;
    let points = metrics::rich_club(&g)
        .phi
        .into_iter()
        .map(|(rho, phi)| (rho as f64 / n, phi))
        .collect();
    to_json(&RichClubCurve { n: g.node_count(), m: g.edge_count(), points })
}

pub fn spectrum_json(request: &str) -> Result<String, String> {
    let g = build(request)?;
    if g.node_count() > MAX_SPECTRUM_NODES {
        return Err(format!("spectrum is limited to {MAX_SPECTRUM_NODES} nodes in the browser"));
    }
    let s = metrics::normalized_laplacian_spectrum(&g, SpectrumMode::Full).map_err(|e| e.to_string())?;
    to_json(&Spectrum { n: g.node_count(), m: g.edge_count(), eigenvalues: s.eigenvalues })
}

/// Default parameters of `model` (without `model` and `n`).
#[wasm_bindgen]
pub fn defaults(model: &str, n: usize) -> Result<String, JsValue> {
    defaults_json(model, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = degreeCurves)]
pub fn degree_curves(request: &str) -> Result<String, JsValue> {
    degree_curves_json(request).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = richClub)]
pub fn rich_club(request: &str) -> Result<String, JsValue> {
    rich_club_json(request).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(request: &str) -> Result<String, JsValue> {
    spectrum_json(request).map_err(|e| JsValue::from_str(&e))
}
