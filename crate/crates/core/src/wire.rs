//! JSON encodings shared by the command line and the browser demo.
//!
//! Polynomials are `{"coeffs": ["p/q", ...]}` in ascending degree, rational
//! functions `{"num": Poly, "den": Poly}`, families `{"a": [...], "f": [...]}`,
//! number fields `{"minpoly": Poly, "root_index": i}`, field elements
//! `{"rep": Poly}` and bivariate polynomials `{"coeffs": [[...], ...]}` with
//! `coeffs[i][j]` multiplying `X^i Y^j`. Object keys come out sorted, so
//! equal values always serialize to equal bytes.

use serde_json::{json, Value};
use thiserror::Error;

use crate::abctools::{AbcReport, DistinctRootBound};
use crate::algnum::{CBall, HeightValue, NFElem, NumberField};
use crate::exactalg::{parse_rat, BiPoly, Poly, Rat, RatFunc};
use crate::gcdlab::{CorollaryReport, GcdCell, GcdReport, Independence};
use crate::lrs::{Classification, FamilyIssue, HankelReport, LrsVerdict, ParametricFamily};
use crate::powers::{PowerScan, PowerVerdict};
use crate::skolem::{SmlStructure, SurveyReport, ZeroReport};
use crate::torsion::{CensusReport, LevelCurveSolution, LevelPoint, TorsionSearch};

/// Malformed input, located by a JSON path such as `$.a[1].num.coeffs[0]`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{path}: {message}")]
pub struct WireError {
    pub path: String,
    pub message: String,
}

fn err<T>(path: &str, message: impl Into<String>) -> Result<T, WireError> {
    Err(WireError {
        path: path.to_string(),
        message: message.into(),
    })
}

fn field<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value, WireError> {
    match v {
        Value::Object(m) => match m.get(key) {
            Some(x) => Ok(x),
            None => err(path, format!("missing field \"{key}\"")),
        },
        _ => err(path, "expected an object"),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, WireError> {
    v.as_array().map_or_else(|| err(path, "expected an array"), Ok)
}

/// Parses JSON text, reporting syntax errors at the root path.
pub fn parse_json(text: &str) -> Result<Value, WireError> {
    serde_json::from_str(text).map_err(|e| WireError {
        path: "$".into(),
        message: e.to_string(),
    })
}

pub fn rat_from(v: &Value, path: &str) -> Result<Rat, WireError> {
    match v {
        Value::String(s) => parse_rat(s).or_else(|e| err(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Rat::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) if n.is_u64() => Ok(Rat::from_integer(n.as_u64().unwrap().into())),
        _ => err(path, "expected a rational string \"p/q\" or an integer"),
    }
}

pub fn poly_from(v: &Value, path: &str) -> Result<Poly<Rat>, WireError> {
    let cpath = format!("{path}.coeffs");
    let cs = array(field(v, path, "coeffs")?, &cpath)?;
    let coeffs = cs
        .iter()
        .enumerate()
        .map(|(i, c)| rat_from(c, &format!("{cpath}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// `{"num", "den"}`, or a bare polynomial.
pub fn ratfunc_from(v: &Value, path: &str) -> Result<RatFunc, WireError> {
    if v.get("coeffs").is_some() {
        return Ok(RatFunc::from_poly(poly_from(v, path)?));
    }
    let num = poly_from(field(v, path, "num")?, &format!("{path}.num"))?;
    let den = poly_from(field(v, path, "den")?, &format!("{path}.den"))?;
    RatFunc::new(num, den).or_else(|e| err(&format!("{path}.den"), e.to_string()))
}

pub fn ratfunc_list_from(v: &Value, path: &str) -> Result<Vec<RatFunc>, WireError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| ratfunc_from(x, &format!("{path}[{i}]")))
        .collect()
}

/// A list of polynomials: a bare array or `{"polys": [...]}`.
pub fn poly_list_from(v: &Value, path: &str) -> Result<Vec<Poly<Rat>>, WireError> {
    let (v, path) = match v.get("polys") {
        Some(p) => (p, format!("{path}.polys")),
        None => (v, path.to_string()),
    };
    array(v, &path)?
        .iter()
        .enumerate()
        .map(|(i, x)| poly_from(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn family_from(v: &Value, path: &str) -> Result<ParametricFamily, WireError> {
    let a = ratfunc_list_from(field(v, path, "a")?, &format!("{path}.a"))?;
    let f = ratfunc_list_from(field(v, path, "f")?, &format!("{path}.f"))?;
    ParametricFamily::new(a, f).or_else(|e| err(path, e.to_string()))
}

pub fn number_field_from(v: &Value, path: &str) -> Result<NumberField, WireError> {
    let m = poly_from(field(v, path, "minpoly")?, &format!("{path}.minpoly"))?;
    let idx = match v.get("root_index") {
        None => 0,
        Some(x) => match x.as_u64() {
            Some(i) => i as usize,
            None => return err(&format!("{path}.root_index"), "expected a nonnegative integer"),
        },
    };
    NumberField::new(&m, idx).or_else(|e| err(path, e.to_string()))
}

/// A specialization point: a rational (string or integer), or
/// `{"field": NumberField, "rep": Poly}`, or the field keys inline next to
/// `"rep"`. A missing `"rep"` means the generator.
pub fn alpha_from(v: &Value, path: &str) -> Result<NFElem, WireError> {
    if v.is_string() || v.is_number() {
        return Ok(NumberField::rationals().from_rat(rat_from(v, path)?));
    }
    let k = match v.get("field") {
        Some(f) => number_field_from(f, &format!("{path}.field"))?,
        None if v.get("minpoly").is_some() => number_field_from(v, path)?,
        None => NumberField::rationals(),
    };
    match v.get("rep") {
        Some(r) => Ok(k.elem(poly_from(r, &format!("{path}.rep"))?)),
        None => Ok(k.gen()),
    }
}

pub fn bipoly_from(v: &Value, path: &str) -> Result<BiPoly, WireError> {
    let cpath = format!("{path}.coeffs");
    let rows = array(field(v, path, "coeffs")?, &cpath)?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{cpath}[{i}]");
        let r = array(row, &rpath)?
            .iter()
            .enumerate()
            .map(|(j, c)| rat_from(c, &format!("{rpath}[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(r);
    }
    Ok(BiPoly::new(out))
}

pub fn rat_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn poly_json(p: &Poly<Rat>) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rat_json).collect::<Vec<_>>() })
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({ "num": poly_json(r.num()), "den": poly_json(r.den()) })
}

pub fn family_json(fam: &ParametricFamily) -> Value {
    json!({
        "a": fam.a().iter().map(ratfunc_json).collect::<Vec<_>>(),
        "f": fam.f().iter().map(ratfunc_json).collect::<Vec<_>>(),
    })
}

pub fn number_field_json(k: &NumberField) -> Value {
    json!({ "minpoly": poly_json(k.minpoly()), "root_index": k.root_index() })
}

pub fn nfelem_json(e: &NFElem) -> Value {
    json!({ "rep": poly_json(e.rep()) })
}

/// Element with its field and an approximate value at the distinguished
/// embedding.
pub fn alpha_json(e: &NFElem) -> Value {
    let (re, im) = e.to_complex(e.field().root_index());
    json!({
        "field": number_field_json(e.field()),
        "rep": poly_json(e.rep()),
        "approx": [re, im],
    })
}

pub fn bipoly_json(p: &BiPoly) -> Value {
    json!({
        "coeffs": p.rows().iter().map(|r| r.iter().map(rat_json).collect::<Vec<_>>()).collect::<Vec<_>>()
    })
}

pub fn height_json(h: &HeightValue) -> Value {
    json!({ "value": h.value, "error_bound": h.error_bound, "exact": h.exact })
}

pub fn ball_json(b: &CBall) -> Value {
    json!({
        "re": b.re.to_string(),
        "im": b.im.to_string(),
        "rad": b.rad.to_string(),
        "prec": b.prec,
    })
}

pub fn issue_json(i: &FamilyIssue) -> Value {
    json!({ "violation": i.is_violation(), "description": i.describe() })
}

pub fn classification_json(c: &Classification) -> Value {
    json!({
        "in_exceptional_set": c.in_exceptional_set,
        "degenerate_pairs": c.degenerate_pairs.iter().map(|(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
        "merged": c.merged,
        "dominant_count": c.dominant_count,
        "dominant_indices": c.dominant_indices,
    })
}

pub fn zero_report_json(z: &ZeroReport) -> Value {
    json!({
        "zeros": z.zeros,
        "searched_bound": z.searched_bound,
        "classification": classification_json(&z.classification),
        "bound_formula": z.bound_formula,
    })
}

pub fn sml_json(s: &SmlStructure) -> Value {
    json!({
        "modulus": s.modulus,
        "zero_progressions": s.zero_progressions,
        "sporadic_zeros": s.sporadic_zeros,
        "searched_bound": s.searched_bound,
        "complete": s.complete,
    })
}

pub fn hankel_json<T>(h: &HankelReport<T>, enc: impl Fn(&T) -> Value) -> Value {
    json!({
        "h_max": h.h_max,
        "dets": h.dets.iter().map(&enc).collect::<Vec<_>>(),
        "detected_order": h.detected_order,
        "recurrence_coeffs": h.recurrence_coeffs.as_ref().map(|v| v.iter().map(&enc).collect::<Vec<_>>()),
    })
}

pub fn verdict_json(v: &LrsVerdict) -> Value {
    match v {
        LrsVerdict::Consistent => json!({ "verdict": "CONSISTENT" }),
        LrsVerdict::Refuted { witness } => json!({ "verdict": "REFUTED", "witness": witness }),
    }
}

pub fn abc_json(r: &AbcReport) -> Value {
    json!({
        "m": r.m,
        "max_deg": r.max_deg,
        "rad_deg": r.rad_deg,
        "bound": rat_json(&r.bound),
        "holds": r.holds,
        "subsum_checked": r.subsum_checked,
    })
}

pub fn distinct_root_json(r: &DistinctRootBound) -> Value {
    json!({ "n": r.n, "bound": rat_json(&r.bound), "actual": r.actual, "holds": r.holds })
}

pub fn gcd_cell_json(c: &GcdCell) -> Value {
    json!({
        "m": c.m,
        "n": c.n,
        "u": rat_json(&c.u),
        "v": rat_json(&c.v),
        "gcd": poly_json(&c.gcd),
        "deg": c.gcd.degree().unwrap_or(0),
        "mult": c.mult,
    })
}

pub fn gcd_report_json(r: &GcdReport) -> Value {
    json!({
        "cells": r.cells.iter().map(gcd_cell_json).collect::<Vec<_>>(),
        "h_emp": poly_json(&r.h_emp),
        "mult_cap": r.mult_cap,
        "mult_ok": r.mult_ok,
        "stable": r.stable,
    })
}

pub fn corollary_json(r: &CorollaryReport) -> Value {
    json!({
        "d": r.d,
        "h_emp": poly_json(&r.h_emp),
        "big_h": poly_json(&r.big_h),
        "cells": r.cells.iter().map(|(m, n, g)| json!({ "m": m, "n": n, "gcd": poly_json(g) })).collect::<Vec<_>>(),
        "all_divide": r.all_divide,
    })
}

pub fn independence_json(i: &Independence) -> Value {
    match i {
        Independence::Independent => json!({ "independent": true }),
        Independence::Dependent { witness, constant } => json!({
            "independent": false,
            "witness": witness,
            "constant": rat_json(constant),
        }),
    }
}

pub fn level_point_json(p: &LevelPoint) -> Value {
    json!({
        "re": p.re,
        "im": p.im,
        "ball": ball_json(&p.ball),
        "minpoly": p.minpoly.as_ref().map(poly_json),
        "re_minpoly": poly_json(&p.re_minpoly),
        "im_sq_minpoly": poly_json(&p.im_sq_minpoly),
        "residual": p.residual,
    })
}

pub fn level_json(s: &LevelCurveSolution) -> Value {
    json!({
        "points": s.points.iter().map(level_point_json).collect::<Vec<_>>(),
        "count": s.count,
        "infinite_flag": s.infinite_flag,
        "bound": s.bound,
        "shear": s.shear,
    })
}

pub fn census_json(c: &CensusReport) -> Value {
    json!({
        "points": c.points.iter().map(|p| {
            let mut v = level_point_json(&p.point);
            v["triple"] = json!([p.triple.0, p.triple.1, p.triple.2]);
            v
        }).collect::<Vec<_>>(),
        "count": c.count,
        "infinite_triples": c.infinite_triples.iter().map(|t| json!([t.0, t.1, t.2])).collect::<Vec<_>>(),
        "skipped_triples": c.skipped_triples.iter().map(|t| json!([t.0, t.1, t.2])).collect::<Vec<_>>(),
        "d": c.d,
        "k": c.k,
        "bound": c.bound,
    })
}

pub fn torsion_search_json(s: &TorsionSearch) -> Value {
    json!({
        "pairs": s.pairs.iter().map(|p| json!({ "a": p.a, "r": p.r, "b": p.b, "s": p.s })).collect::<Vec<_>>(),
        "count": s.count,
        "max_order": s.max_order,
        "bound": s.bound,
        "within_bound": s.within_bound,
    })
}

pub fn power_verdict_json(v: &PowerVerdict) -> Value {
    match v {
        PowerVerdict::Yes(r) => json!({ "verdict": "YES", "root": nfelem_json(r) }),
        PowerVerdict::No => json!({ "verdict": "NO" }),
        PowerVerdict::Unknown => json!({ "verdict": "UNKNOWN" }),
    }
}

pub fn power_scan_json(s: &PowerScan) -> Value {
    json!({
        "m": s.m,
        "window": s.window,
        "full_residues": s.full_residues,
        "exceptional_ns": s.exceptional_ns,
        "counterexamples": s.counterexamples.iter().map(|(r, n)| json!({ "residue": r, "n": n })).collect::<Vec<_>>(),
        "quarantined": s.quarantined,
        "undecided_ns": s.undecided_ns,
    })
}

pub fn survey_json(r: &SurveyReport) -> Value {
    let recs: Vec<Value> = r
        .records
        .iter()
        .map(|x| {
            json!({
                "n": x.n,
                "deg": x.deg,
                "factor_degrees": x.factor_degrees,
                "min_deg": x.min_deg(),
                "max_deg": x.max_deg(),
                "max_root_height": x.max_root_height.as_ref().map(height_json),
                "exceptional_roots": x.exceptional_roots.iter().map(rat_json).collect::<Vec<_>>(),
                "skipped": x.skipped,
            })
        })
        .collect();
    json!({ "records": recs, "max_height": r.max_height().map(height_json) })
}

/// Columns `n,deg,factor_degrees,min_deg,max_root_height`; factor degrees
/// are `;`-separated and missing values are empty.
pub fn survey_csv(r: &SurveyReport) -> String {
    let mut out = String::from("n,deg,factor_degrees,min_deg,max_root_height\n");
    let opt = |x: Option<usize>| x.map(|d| d.to_string()).unwrap_or_default();
    for x in &r.records {
        let degs: Vec<String> = x.factor_degrees.iter().map(usize::to_string).collect();
        let h = x
            .max_root_height
            .as_ref()
            .map(|h| format!("{:.12}", h.value))
            .unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{}\n", x.n, opt(x.deg), degs.join(";"), opt(x.min_deg()), h));
    }
    out
}

/// Deterministic pretty printing with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn poly_round_trip() {
        let p = Poly::from_coeffs(vec![rat(-1, 2), int(0), int(3)]);
        let v = poly_json(&p);
        assert_eq!(v, json!({ "coeffs": ["-1/2", "0", "3"] }));
        assert_eq!(poly_from(&v, "$").unwrap(), p);
    }

    #[test]
    fn errors_name_the_path() {
        let v = parse_json(r#"{"a": [{"coeffs": ["1"]}], "f": [{"num": {"coeffs": ["1", "x"]}, "den": {"coeffs": ["1"]}}]}"#).unwrap();
        let e = family_from(&v, "$").unwrap_err();
        assert_eq!(e.path, "$.f[0].num.coeffs[1]");
        let e = family_from(&json!({ "a": [] }), "$").unwrap_err();
        assert_eq!(e.message, "missing field \"f\"");
    }

    #[test]
    fn alpha_forms() {
        assert_eq!(alpha_from(&json!("-1/2"), "$").unwrap().as_rat(), Some(rat(-1, 2)));
        assert_eq!(alpha_from(&json!(2), "$").unwrap().as_rat(), Some(int(2)));
        let a = alpha_from(&json!({ "minpoly": { "coeffs": ["1", "0", "1"] }, "root_index": 1 }), "$").unwrap();
        assert_eq!(a.field().degree(), 2);
        assert_eq!(a.rep(), &Poly::x());
        let b = alpha_from(&alpha_json(&a), "$").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ratfunc_and_bivariate() {
        let r = RatFunc::new(Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[0, 2])).unwrap();
        assert_eq!(ratfunc_from(&ratfunc_json(&r), "$").unwrap(), r);
        let b = BiPoly::from_terms(&[(1, 0, int(1)), (0, 1, int(1)), (0, 0, int(1))]);
        assert_eq!(bipoly_from(&bipoly_json(&b), "$").unwrap(), b);
        assert!(ratfunc_from(&json!({ "num": { "coeffs": ["1"] }, "den": { "coeffs": [] } }), "$").is_err());
    }
}
