//! Bindings used by `www/index.html`. Inputs use the same JSON shapes as the
//! CLI input files; every call returns a JSON string or throws a message.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use paramrec::algnum::isolate_roots_of;
use paramrec::lrs::ParametricFamily;
use paramrec::skolem::{find_zeros, sml_structure};
use paramrec::torsion::level_curve_points;
use paramrec::wire::{self, WireError};

/// Largest index the page may expand; higher n makes the root plot useless anyway.
pub const MAX_EXPAND_N: u64 = 40;
pub const MAX_ZERO_BOUND: u64 = 5000;

fn parse<T>(text: &str, what: &str, f: impl Fn(&Value, &str) -> Result<T, WireError>) -> Result<T, String> {
    let v = wire::parse_json(text).map_err(|e| format!("{what}: {e}"))?;
    f(&v, "$").map_err(|e| format!("{what}: {e}"))
}

fn family(text: &str) -> Result<ParametricFamily, String> {
    parse(text, "family", wire::family_from)
}

/// Expanded terms for `start..=end`, each with the numerator's distinct complex roots.
pub fn expand_json(family_text: &str, start: u64, end: u64) -> Result<String, String> {
    if start > end || end > MAX_EXPAND_N {
        return Err(format!("range must satisfy start <= end <= {MAX_EXPAND_N}"));
    }
    let fam = family(family_text)?;
    let mut terms = Vec::new();
    for n in start..=end {
        let f = fam.expand(n);
        let roots = if f.num().is_zero() {
            Vec::new()
        } else {
            isolate_roots_of(f.num()).map_err(|e| e.to_string())?
        };
        terms.push(json!({
            "n": n,
            "degree": f.degree(),
            "value": wire::ratfunc_json(&f),
            "text": f.to_string(),
            "roots": roots.iter().map(|b| json!([b.re_f64(), b.im_f64()])).collect::<Vec<_>>(),
        }));
    }
    Ok(json!({ "terms": terms }).to_string())
}

/// Zeros of the specialization below `bound`, with the progression structure when `sml` is set.
pub fn zeros_json(family_text: &str, alpha_text: &str, bound: u64, sml: bool) -> Result<String, String> {
    if bound > MAX_ZERO_BOUND {
        return Err(format!("bound must be at most {MAX_ZERO_BOUND}"));
    }
    let fam = family(family_text)?;
    let alpha = parse(alpha_text, "alpha", wire::alpha_from)?;
    let spec = fam.specialize(&alpha).map_err(|e| e.to_string())?;
    let zeros = find_zeros(&spec, bound, None).map_err(|e| e.to_string())?;
    let sml = if sml {
        Some(wire::sml_json(&sml_structure(&spec, bound).map_err(|e| e.to_string())?))
    } else {
        None
    };
    Ok(json!({ "order": spec.order(), "zero_report": wire::zero_report_json(&zeros), "sml": sml }).to_string())
}

/// Points with `|g1(z)| = |g2(z)| = 1`.
pub fn level_points_json(g1_text: &str, g2_text: &str) -> Result<String, String> {
    let g1 = parse(g1_text, "g1", wire::ratfunc_from)?;
    let g2 = parse(g2_text, "g2", wire::ratfunc_from)?;
    let sol = level_curve_points(&g1, &g2).map_err(|e| e.to_string())?;
    Ok(wire::level_json(&sol).to_string())
}

#[wasm_bindgen]
pub fn expand(family: &str, start: u32, end: u32) -> Result<String, JsError> {
    expand_json(family, start as u64, end as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn zeros(family: &str, alpha: &str, bound: u32, sml: bool) -> Result<String, JsError> {
    zeros_json(family, alpha, bound as u64, sml).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn level_points(g1: &str, g2: &str) -> Result<String, JsError> {
    level_points_json(g1, g2).map_err(|e| JsError::new(&e))
}
