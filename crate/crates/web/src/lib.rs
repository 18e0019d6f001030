//! Browser bindings for the census demo in `www/`.
//!
//! Each export returns a JSON string; failures become thrown JS strings.
//! The `*_json` functions hold the logic and are usable natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use treecensus::census::{census_formula, census_mtt, census_oracle, has_formula, Family, Grain};
use treecensus::exact::parse_rational;
use treecensus::graph::Graph;
use treecensus::identities::{verify_instance, IdentityId};
use treecensus::kirchhoff::count_spanning_trees;
use treecensus::Error;

/// Oracle budget for the page; larger instances skip the brute-force column.
pub const WEB_BUDGET: u64 = 200_000;

fn family_from(tag: &str, n: usize, m: usize) -> Result<Family, String> {
    let family = match tag {
        "kn" => Family::Complete { n },
        "kmn" => Family::Bipartite { m, n },
        "kn-minus-edge" => Family::CompleteMinusEdge { n },
        other => return Err(format!("unknown family `{other}`")),
    };
    family.validate().map_err(|e| e.to_string())?;
    Ok(family)
}

/// Every available census table for the family, plus whether they agree.
/// The oracle is left out, with `"oracle": false`, once it would exceed
/// [`WEB_BUDGET`].
pub fn census_json(tag: &str, n: usize, m: usize, grain: &str) -> Result<String, String> {
    let family = family_from(tag, n, m)?;
    let grain = Grain::parse(grain).map_err(|e| e.to_string())?;
    let mut tables = Vec::new();
    if has_formula(&family, grain) {
        tables.push(census_formula(&family, grain).map_err(|e| e.to_string())?);
    }
    tables.push(census_mtt(&family, grain).map_err(|e| e.to_string())?);
    let oracle = match census_oracle(&family, grain, WEB_BUDGET) {
        Ok(t) => {
            tables.push(t);
            true
        }
        Err(Error::OracleTooLarge { .. }) => false,
        Err(e) => return Err(e.to_string()),
    };
    let agreement = tables.windows(2).all(|w| w[0].agrees_with(&w[1]));
    Ok(json!({
        "tables": tables.iter().map(|t| t.to_json()).collect::<Vec<Value>>(),
        "agreement": agreement,
        "oracle": oracle,
    })
    .to_string())
}

/// Spanning-tree count of a graph given as `{"n": .., "edges": [[u,v], ..]}`.
pub fn count_json(graph: &str) -> Result<String, String> {
    let g = Graph::parse_json(graph).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "spanning_trees": count_spanning_trees(&g).to_string(),
    })
    .to_string())
}

/// One identity instance. `m`, `k` and `a` may be empty when unused.
pub fn verify_json(id: &str, n: usize, m: &str, k: &str, a: &str) -> Result<String, String> {
    let id = IdentityId::parse(id).map_err(|e| e.to_string())?;
    let opt = |text: &str, name: &str| -> Result<Option<usize>, String> {
        match text.trim() {
            "" => Ok(None),
            t => t.parse().map(Some).map_err(|_| format!("bad {name} `{t}`")),
        }
    };
    let a = match a.trim() {
        "" => None,
        t => Some(parse_rational(t).map_err(|e| e.to_string())?),
    };
    let report = verify_instance(id, Some(n), opt(m, "m")?, opt(k, "k")?, a.as_ref()).map_err(|e| e.to_string())?;
    Ok(report.to_json().to_string())
}

/// Identity ids accepted by [`verify_json`], as a JSON array.
pub fn identity_ids_json() -> String {
    json!(IdentityId::ALL.iter().map(|id| id.as_str()).collect::<Vec<_>>()).to_string()
}

#[wasm_bindgen]
pub fn census(tag: &str, n: usize, m: usize, grain: &str) -> Result<String, JsValue> {
    census_json(tag, n, m, grain).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn count(graph: &str) -> Result<String, JsValue> {
    count_json(graph).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn verify(id: &str, n: usize, m: &str, k: &str, a: &str) -> Result<String, JsValue> {
    verify_json(id, n, m, k, a).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn identity_ids() -> String {
    identity_ids_json()
}
