//! Browser bindings. Every function returns a JSON string so the page can
//! stay plain JavaScript.

use serde_json::{json, Value};
use torcert::constraints::{check_type_uniformity, detect_s_cycles};
use torcert::graph::{parse_graph, RotationSystem, Sign, SurfaceSummary};
use torcert::homology::klein_scan;
use torcert::perms::InducedPermutation;
use wasm_bindgen::prelude::*;

fn surface_json(s: &SurfaceSummary) -> Value {
    let components: Vec<Value> = s
        .components
        .iter()
        .map(|c| {
            json!({
                "vertices": c.vertices,
                "edges": c.edges,
                "faces": c.faces,
                "euler": c.euler,
                "genus": c.genus,
            })
        })
        .collect();
    json!({
        "euler": s.euler(),
        "genus": s.genus(),
        "connected": s.is_connected(),
        "cellular_torus": s.is_cellular_torus(),
        "components": components,
    })
}

/// Edge letters in order of first appearance, matching `from_words`.
fn edge_names(words: &[&str]) -> Vec<char> {
    let mut names = Vec::new();
    for ch in words.iter().flat_map(|w| w.chars()).filter(|c| !c.is_whitespace()) {
        if !names.contains(&ch) {
            names.push(ch);
        }
    }
    names
}

fn trace_words(input: &str) -> Result<Value, String> {
    let words: Vec<&str> = input
        .split(['\n', ',', '|'])
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .collect();
    let map = RotationSystem::from_words(&words).map_err(|e| e.to_string())?;
    let names = edge_names(&words);
    let faces: Vec<String> = map
        .faces()
        .iter()
        .map(|f| f.iter().map(|&d| names[map.edge_of(d)]).collect())
        .collect();
    Ok(json!({
        "vertices": map.vertex_count(),
        "edges": map.edge_count(),
        "faces": faces,
        "surface": surface_json(&map.surface()),
    }))
}

fn trace_graph_text(input: &str) -> Result<Value, String> {
    let g = parse_graph(input).map_err(|e| e.to_string())?;
    let faces: Vec<Vec<usize>> = g
        .faces()
        .iter()
        .map(|f| f.darts.iter().map(|&d| g.map().edge_of(d)).collect())
        .collect();
    let reduced = g.reduce();
    let sizes: Vec<u32> = (0..reduced.edge_count()).map(|e| reduced.size(e)).collect();
    let uniform = check_type_uniformity(&g);
    Ok(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "faces": faces,
        "surface": surface_json(&g.surface()),
        "reduced_sizes": sizes,
        "s_cycles": detect_s_cycles(&g).len(),
        "uniform_vertex_type": uniform.satisfied,
        "uniform_vertex_type_witness": uniform.witness,
    }))
}

fn is_graph_text(input: &str) -> bool {
    input.lines().map(str::trim).any(|l| {
        let mut chars = l.chars();
        matches!(chars.next(), Some('v' | 'e')) && chars.next().is_some_and(|c| c.is_ascii_digit())
    })
}

/// Traces faces of either a rotation word list (`abcabc`, one word per
/// vertex separated by newlines or `|`) or a graph in the text format.
#[wasm_bindgen]
pub fn trace_faces(input: &str) -> Result<String, JsError> {
    let out = if is_graph_text(input) {
        trace_graph_text(input)
    } else {
        trace_words(input)
    };
    out.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// Orbits of `x ↦ α − εx` on `1..=n`.
#[wasm_bindgen]
pub fn perm_orbits(n: u32, alpha: i32, positive: bool) -> Result<String, JsError> {
    let eps = if positive { Sign::Plus } else { Sign::Minus };
    let p = InducedPermutation::new(n, alpha as i64, eps).map_err(|e| JsError::new(&e.to_string()))?;
    let dec = p.orbits();
    Ok(json!({
        "table": p.table(),
        "orbits": dec.orbits,
        "count": dec.count,
        "formula_count": p.formula_orbit_count(),
        "identity": p.is_identity(),
        "fixed_points": p.fixed_points(),
        "parity_obstructed": p.parity_obstructed(),
    })
    .to_string())
}

/// Klein bottle boundary slopes for every gluing parameter in `0..=max`.
#[wasm_bindgen]
pub fn klein_table(max: u32) -> String {
    let rows: Vec<Value> = klein_scan(max.min(1000) as i64)
        .into_iter()
        .map(|(m, s)| json!({ "m": m, "solution": s }))
        .collect();
    Value::Array(rows).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_trace_a_torus() {
        let v = trace_words("abcabc").unwrap();
        assert_eq!(v["surface"]["cellular_torus"], true);
        assert_eq!(v["faces"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn graph_text_is_detected() {
        let text = "v0 + : 1 2 3 1 2 3\ne0 + (0,0,1)-(0,3,1)\ne1 + (0,1,2)-(0,4,2)\ne2 + (0,2,3)-(0,5,3)\n";
        assert!(is_graph_text(text));
        assert!(!is_graph_text("abab\ncdcd"));
        let v = trace_graph_text(text).unwrap();
        assert_eq!(v["surface"]["genus"], 1);
        assert_eq!(v["reduced_sizes"], json!([1, 1, 1]));
    }

    #[test]
    fn klein_rows_cover_the_range() {
        let v: Value = serde_json::from_str(&klein_table(4)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
        assert_eq!(v[2]["solution"]["q"], 1);
        assert!(v[3]["solution"].is_null());
    }
}
