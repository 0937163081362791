//! Browser bindings: three JSON-returning entry points for `www/index.html`.
//!
//! The `*_json` functions do the work and are plain Rust, so they can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use positroid::affperm::{enumerate_bound, BoundedAffinePermutation};
use positroid::cohom::{amplituhedron_class, degree_gcd_bound, degree_top_cell, kinematical_support, DegreeInfo};
use positroid::symm::affine_stanley_schur;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest `n` the page accepts; the scans grow quickly beyond it.
pub const MAX_N: usize = 8;

fn parse(window: &str) -> Result<BoundedAffinePermutation, String> {
    let f = BoundedAffinePermutation::parse_infer_k(window).map_err(|e| e.to_string())?;
    if f.n() > MAX_N {
        return Err(format!("n = {} is above the demo limit {MAX_N}", f.n()));
    }
    Ok(f)
}

/// Schur expansion of the affine Stanley function of `window`.
pub fn stanley_json(window: &str) -> Result<String, String> {
    let f = parse(window)?;
    let g = affine_stanley_schur(&f);
    Ok(json!({
        "window": f.window(),
        "k": f.k(),
        "n": f.n(),
        "length": f.length(),
        "dim": f.cell_dimension(),
        "text": g.to_string(),
        "expansion": g,
    })
    .to_string())
}

/// Amplituhedron class of a single cell in `H*(Gr(k, k+m))`.
pub fn class_json(window: &str, m: usize) -> Result<String, String> {
    let f = parse(window)?;
    let a = amplituhedron_class(&f, m).map_err(|e| e.to_string())?;
    let degree = match &a.degree {
        DegreeInfo::Exact(d) => json!({ "exact": d.to_string() }),
        DegreeInfo::DividesGcd(g) => json!({ "divides": g.to_string() }),
    };
    Ok(json!({
        "window": f.window(),
        "m": m,
        "truncation": a.truncation.to_string(),
        "degree": degree,
        "class": a,
    })
    .to_string())
}

/// Support flag, degree and gcd bound for every cell of `Bound(k, n)`.
pub fn support_scan_json(k: usize, n: usize, m: usize) -> Result<String, String> {
    if n > MAX_N {
        return Err(format!("n = {n} is above the demo limit {MAX_N}"));
    }
    let cells = enumerate_bound(k, n).map_err(|e| e.to_string())?;
    let mut rows = Vec::with_capacity(cells.len());
    for f in &cells {
        let support = kinematical_support(f, m).map_err(|e| e.to_string())?;
        let degree = if support && f.cell_dimension() == k * m {
            degree_top_cell(f, m).map_err(|e| e.to_string())?.map(|d| d.to_string())
        } else {
            None
        };
        let gcd = support
            .then(|| degree_gcd_bound(f, m).map(|g| g.to_string()))
            .transpose()
            .map_err(|e| e.to_string())?;
        rows.push(json!({
            "window": f.window(),
            "length": f.length(),
            "dim": f.cell_dimension(),
            "support": support,
            "degree": degree,
            "gcd": gcd,
        }));
    }
    Ok(json!({ "k": k, "n": n, "m": m, "cells": rows }).to_string())
}

#[wasm_bindgen]
pub fn stanley(window: &str) -> Result<String, JsValue> {
    stanley_json(window).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn amplituhedron(window: &str, m: usize) -> Result<String, JsValue> {
    class_json(window, m).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn support_scan(k: usize, n: usize, m: usize) -> Result<String, JsValue> {
    support_scan_json(k, n, m).map_err(|e| JsValue::from_str(&e))
}
