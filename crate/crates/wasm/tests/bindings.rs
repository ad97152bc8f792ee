use serde_json::Value;

use paramrec_wasm::{expand_json, level_points_json, zeros_json};

const BENCH: &str = r#"{"a": [{"num": {"coeffs": ["1"]}, "den": {"coeffs": ["1"]}}, {"num": {"coeffs": ["-1"]}, "den": {"coeffs": ["1"]}}],
 "f": [{"num": {"coeffs": ["0", "1"]}, "den": {"coeffs": ["1"]}}, {"num": {"coeffs": ["1", "1"]}, "den": {"coeffs": ["1"]}}]}"#;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn expand_reports_roots() {
    // x^n - (x+1)^n has n - 1 distinct roots, all on Re(x) = -1/2
    let v = parse(&expand_json(BENCH, 2, 7).unwrap());
    for t in v["terms"].as_array().unwrap() {
        let n = t["n"].as_u64().unwrap();
        let roots = t["roots"].as_array().unwrap();
        assert_eq!(roots.len() as u64, n - 1);
        for r in roots {
            assert!((r[0].as_f64().unwrap() + 0.5).abs() < 1e-9);
        }
    }
}

#[test]
fn zeros_at_minus_half() {
    let v = parse(&zeros_json(BENCH, "\"-1/2\"", 50, true).unwrap());
    let zeros: Vec<u64> = v["zero_report"]["zeros"].as_array().unwrap().iter().map(|z| z.as_u64().unwrap()).collect();
    assert_eq!(zeros, (0..=50).step_by(2).collect::<Vec<_>>());
    assert_eq!(v["sml"]["modulus"], 2);
}

#[test]
fn level_points_of_z_and_z_minus_one() {
    let v = parse(&level_points_json(r#"{"coeffs": ["0", "1"]}"#, r#"{"coeffs": ["-1", "1"]}"#).unwrap());
    assert_eq!(v["count"], 2);
}

#[test]
fn errors_carry_paths() {
    let e = expand_json(r#"{"a": [], "f": 3}"#, 0, 1).unwrap_err();
    assert!(e.starts_with("family:"), "{e}");
    assert!(expand_json(BENCH, 3, 1).is_err());
}
