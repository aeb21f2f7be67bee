//! Browser bindings. Every function takes and returns plain strings; results
//! are JSON objects with an `ok` flag and either the payload or an `error`.

use gridmark::io::{self, SolutionFile};
use gridmark::separation::{find_unseparated_pair, is_minimal_landmark_set};
use gridmark::svg::{self, Figure};
use gridmark::{Error, Grid};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(mut v) => {
            v["ok"] = Value::Bool(true);
            v.to_string()
        }
        Err(e) => json!({ "ok": false, "error": e.to_string() }).to_string(),
    }
}

/// Solves a CSV or JSON instance. The answer carries the solution file (with
/// per-category bests) and an SVG figure.
#[wasm_bindgen]
pub fn solve(instance: &str) -> String {
    respond((|| {
        let g = io::parse_instance(instance)?;
        let file = SolutionFile::with_report(&gridmark::solve_with_report(&g)?);
        let figure = svg::render(
            &g,
            &Figure {
                landmarks: &file.vertices,
                witness: file.witness.as_ref(),
                pair: None,
            },
        );
        Ok(json!({ "solution": file, "svg": figure }))
    })())
}

/// Checks a vertex set (`[[r,c],..]`) against an instance.
#[wasm_bindgen]
pub fn verify(instance: &str, set: &str) -> String {
    respond((|| {
        let g = io::parse_instance(instance)?;
        let landmarks = io::parse_vertex_set(set)?;
        if landmarks.is_empty() {
            return Err(Error::Input("the vertex set is empty".into()));
        }
        let pair = find_unseparated_pair(g.m(), g.n(), &landmarks)?;
        let minimal = pair.is_none() && is_minimal_landmark_set(g.m(), g.n(), &landmarks)?;
        let figure = svg::render(
            &g,
            &Figure {
                landmarks: &landmarks,
                witness: None,
                pair,
            },
        );
        Ok(json!({
            "landmark": pair.is_none(),
            "minimal": minimal,
            "pair": pair.map(|(u, v)| [u, v]),
            "cost": g.set_cost(&landmarks),
            "svg": figure,
        }))
    })())
}

/// A reproducible random instance as CSV.
#[wasm_bindgen]
pub fn generate(m: usize, n: usize, max_cost: u32, seed: u32) -> String {
    respond(
        io::generate(m, n, max_cost.into(), seed.into())
            .map(|g: Grid| json!({ "csv": io::to_csv(&g) })),
    )
}
