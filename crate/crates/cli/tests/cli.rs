use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use serde_json::Value;

use paramrec_cli::{run, Cli};

fn report(args: &[&str]) -> Value {
    let cli = Cli::try_parse_from(std::iter::once("paramrec").chain(args.iter().copied())).unwrap();
    run(&cli).unwrap().report
}

fn exit_code(args: &[&str]) -> i32 {
    let out = Command::new(env!("CARGO_BIN_EXE_paramrec")).args(args).output().unwrap();
    out.status.code().unwrap()
}

fn stderr_of(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_paramrec")).args(args).output().unwrap();
    String::from_utf8(out.stderr).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from("tests/out");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn report_embeds_version_and_config() {
    let r = report(&["--seed", "7", "expand", "--family", "tests/data/bench_family.json", "--n-range", "2:3"]);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["config"]["seed"], 7);
    assert_eq!(r["config"]["command"]["expand"]["n_range"]["start"], 2);
    // X^2 - (X+1)^2 = -1 - 2X
    assert_eq!(r["result"]["terms"][0]["value"]["num"]["coeffs"], serde_json::json!(["-1", "-2"]));
}

#[test]
fn level_curve_count() {
    let r = report(&["torsion", "--level-curve", "tests/data/z.json", "tests/data/z_minus_1.json"]);
    assert_eq!(r["result"]["count"], 2);
    assert_eq!(r["result"]["infinite_flag"], false);
    assert_eq!(r["result"]["points"][0]["minpoly"]["coeffs"], serde_json::json!(["1", "-1", "1"]));
}

#[test]
fn abc_benchmark_holds() {
    let r = report(&["abc", "--family", "tests/data/bench_family.json", "--n-range", "5:60"]);
    assert_eq!(r["result"]["all_hold"], true);
    assert_eq!(r["result"]["lines"].as_array().unwrap().len(), 56);
}

#[test]
fn skolem_reports_even_zeros() {
    let r = report(&[
        "skolem", "--family", "tests/data/bench_family.json", "--alpha", "tests/data/alpha_neg_half.json", "--N", "20", "--sml",
    ]);
    let zeros: Vec<u64> = serde_json::from_value(r["result"]["zero_report"]["zeros"].clone()).unwrap();
    assert_eq!(zeros, (0..=20).step_by(2).collect::<Vec<_>>());
    assert_eq!(r["result"]["sml"]["zero_progressions"], serde_json::json!([0]));
}

#[test]
fn seeded_samples_depend_on_seed() {
    let args = |seed: &'static str| {
        vec![
            "--seed", seed, "gcdlab", "--f", "tests/data/f_x.json", "--g", "tests/data/g_x1.json", "--window", "2",
            "--group", "2,3", "--random-uv", "3",
        ]
    };
    let a = report(&args("0"));
    let b = report(&args("0"));
    let c = report(&args("1"));
    assert_eq!(a, b);
    assert_ne!(a["result"]["uv"], c["result"]["uv"]);
}

#[test]
fn csv_outputs() {
    let csv = scratch("heights.csv");
    let out = scratch("heights.json");
    let code = paramrec_cli::main_with([
        "paramrec", "--out", out.to_str().unwrap(), "heights", "--family", "tests/data/bench_family.json", "--ns", "6:7",
        "--degrees", "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,deg,factor_degrees,min_deg,max_root_height");
    assert!(lines[1].starts_with("6,5,1;2;2,1,"), "{}", lines[1]);
    assert!(lines[2].starts_with("7,6,6,6,"), "{}", lines[2]);

    let grid = scratch("grid.csv");
    let code = paramrec_cli::main_with([
        "paramrec", "--out", out.to_str().unwrap(), "gcdlab", "--f", "tests/data/f_x.json", "--g", "tests/data/g_x1.json",
        "--window", "6", "--csv", grid.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&grid).unwrap();
    assert!(text.lines().any(|l| l == "3,6,1,1,2,1"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["expand", "--family", "tests/data/bench_family.json", "--n-range", "0:1"]), 0);
    assert_eq!(exit_code(&["expand", "--family", "tests/data/missing.json"]), 1);
    assert_eq!(exit_code(&["expand", "--n-range", "3:1", "--family", "tests/data/bench_family.json"]), 1);
    assert_eq!(exit_code(&["frobnicate"]), 1);
    // x and x are dependent
    assert_eq!(exit_code(&["gcdlab", "--f", "tests/data/f_x.json", "--g", "tests/data/f_x.json"]), 2);
    assert_eq!(exit_code(&["torsion", "--bivariate", "tests/data/xy_minus_1.json"]), 2);
    assert_eq!(exit_code(&["torsion", "--census", "tests/data/census3.json", "--bivariate", "tests/data/xy_minus_1.json"]), 1);
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn malformed_input_names_path_and_field() {
    let bad = scratch("bad_family.json");
    std::fs::write(&bad, r#"{"a": [{"coeffs": ["1"]}, {"coeffs": ["1/0"]}], "f": []}"#).unwrap();
    let msg = stderr_of(&["expand", "--family", bad.to_str().unwrap()]);
    assert!(msg.contains("bad_family.json") && msg.contains("$.a[1].coeffs[0]"), "{msg}");
    std::fs::write(&bad, r#"{"f": []}"#).unwrap();
    let msg = stderr_of(&["expand", "--family", bad.to_str().unwrap()]);
    assert!(msg.contains("missing field \"a\""), "{msg}");
}

#[test]
fn help_documents_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_paramrec")).args(["gcdlab", "--help"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    for flag in ["--window", "--group", "--uv-samples", "--random-uv", "--csv", "--seed", "--out"] {
        assert!(text.contains(flag), "missing {flag}");
    }
}
