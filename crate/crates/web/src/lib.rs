//! Browser bindings: three operations exposed to `www/index.html` through wasm-bindgen.
//! Every export returns a string (JSON or DOT) or an error message for the page to show.

use serde_json::json;
use wasm_bindgen::prelude::*;

use z2star::export::{graph_to_dot, graph_to_json};
use z2star::free_product::{is_iss_smooth, iss_dim, one_quiver_euler_closed, simplicity};
use z2star::local::degeneration_graph;
use z2star::DimVector;

const MAX_GRAPH_N: usize = 7;
const MAX_EULER_N: usize = 6;

fn graph_checked(n: usize, m: usize) -> Result<z2star::DegenerationGraph, String> {
    if n > MAX_GRAPH_N {
        return Err(format!("n is capped at {MAX_GRAPH_N} in the browser"));
    }
    degeneration_graph(n, m).map_err(|e| e.to_string())
}

/// Degeneration graph of local settings for `(n, m)` as JSON.
#[wasm_bindgen]
pub fn degeneration_graph_json(n: usize, m: usize) -> Result<String, String> {
    Ok(graph_to_json(&graph_checked(n, m)?).to_string())
}

/// The same graph as Graphviz DOT, with smooth nodes filled.
#[wasm_bindgen]
pub fn degeneration_graph_dot(n: usize, m: usize) -> Result<String, String> {
    Ok(graph_to_dot(&graph_checked(n, m)?, true))
}

/// Simplicity verdict for a dimension vector such as `2,1;2,1;2,1`, plus the quotient
/// dimension and smoothness when the component is simple.
#[wasm_bindgen]
pub fn analyze_alpha(alpha: &str) -> Result<String, String> {
    let alpha: DimVector = alpha
        .trim()
        .parse()
        .map_err(|e: z2star::Error| e.to_string())?;
    let verdict = simplicity(&alpha).map_err(|e| e.to_string())?;
    let (dim, smooth) = if verdict.simple {
        (iss_dim(&alpha).ok(), Some(is_iss_smooth(&alpha)))
    } else {
        (None, None)
    };
    Ok(json!({
        "alpha": alpha.to_string(),
        "canonical": alpha.bn_canonical().to_string(),
        "simple": verdict.simple,
        "reason": verdict.reason,
        "iss_dim": dim,
        "iss_smooth": smooth,
    })
    .to_string())
}

/// Euler matrix of the one quiver on `2^n` vertices as a JSON array of rows.
#[wasm_bindgen]
pub fn one_quiver_euler(n: usize) -> Result<String, String> {
    if n == 0 || n > MAX_EULER_N {
        return Err(format!("n must be between 1 and {MAX_EULER_N}"));
    }
    let m = one_quiver_euler_closed(n).map_err(|e| e.to_string())?;
    Ok(json!(m.to_rows()).to_string())
}
