//! `paramrec` command line: JSON in, JSON (and CSV) out.
//!
//! Every report is `{"version", "config", "result"}` where `config` echoes
//! the fully resolved arguments. Exit status is 0 on success, 1 on malformed
//! input and 2 when an input violates a hypothesis of the computation.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use paramrec::abctools::{distinct_root_lower_bound, nonvanishing_window, verify_mason_stothers, AbcError};
use paramrec::algnum::weil_height;
use paramrec::exactalg::{parse_rat, Poly, Rat, RatFunc};
use paramrec::gcdlab::{corollary_check, empirical_h, GcdLabError, GcdReport, RationalGroup};
use paramrec::lrs::{
    classify, hankel_numeric, hankel_symbolic_range, is_lrs_functional, LrsError, ParametricFamily,
};
use paramrec::powers::{power_structure_scan, power_verdict_cyclotomic, PowersError};
use paramrec::skolem::{
    find_zeros, min_factor_degree_survey, sml_structure, zero_height_survey, SkolemError, SurveyLimits,
};
use paramrec::torsion::{
    bivariate_rou_solutions, level_curve_points, triple_dominance_census, TorsionError, DEFAULT_MAX_ORDER,
};
use paramrec::wire::{self, WireError};

#[derive(Parser, Debug, Serialize)]
#[command(name = "paramrec", version, about = "Exact experiments on parametric linear recurrence sequences")]
pub struct Cli {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized samplers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Validate a family, specialize it at a point and classify the sequence.
    Analyze(AnalyzeArgs),
    /// Expand F_n as rational functions.
    Expand(ExpandArgs),
    /// Exact zero search and zero-set structure of a specialization.
    Skolem(SkolemArgs),
    /// Hankel determinants and recurrence-order tests.
    Hankel(HankelArgs),
    /// Mason-Stothers checks and distinct-root bounds.
    Abc(AbcArgs),
    /// Gcd experiments for power products minus constants.
    Gcdlab(GcdlabArgs),
    /// Level-curve intersections, triple census and torsion-point search.
    Torsion(TorsionArgs),
    /// Perfect-power structure of a specialized sequence.
    Powers(PowersArgs),
    /// Heights and factor degrees of F_n, or the height of one element.
    Heights(HeightsArgs),
}

/// Inclusive range `a:b`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct NRange {
    pub start: u64,
    pub end: u64,
}

impl NRange {
    fn values(&self) -> Vec<u64> {
        (self.start..=self.end).collect()
    }
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let (a, b) = s.split_once(':').ok_or("expected a:b")?;
    let start: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let end: u64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if start > end {
        return Err("range start exceeds end".into());
    }
    Ok(NRange { start, end })
}

#[derive(Args, Debug, Serialize)]
pub struct AnalyzeArgs {
    /// Family JSON {"a": [...], "f": [...]}.
    #[arg(long)]
    pub family: PathBuf,
    /// Specialization point JSON.
    #[arg(long)]
    pub alpha: PathBuf,
    /// Zero search bound.
    #[arg(long = "N", default_value_t = 100)]
    pub n: u64,
    /// Constant C for rendering the zero bound.
    #[arg(long = "C")]
    pub c: Option<f64>,
}

#[derive(Args, Debug, Serialize)]
pub struct ExpandArgs {
    #[arg(long)]
    pub family: PathBuf,
    /// Indices to expand, inclusive.
    #[arg(long, value_parser = parse_range, default_value = "0:5")]
    pub n_range: NRange,
}

#[derive(Args, Debug, Serialize)]
pub struct SkolemArgs {
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub alpha: PathBuf,
    /// Search zeros for 0 <= n <= N.
    #[arg(long = "N", default_value_t = 1000)]
    pub n: u64,
    /// Constant C for rendering the zero bound.
    #[arg(long = "C")]
    pub c: Option<f64>,
    /// Also report the residue-class structure of the zero set.
    #[arg(long)]
    pub sml: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct HankelArgs {
    /// JSON list of terms: rationals, or rational functions.
    #[arg(long, conflicts_with = "family")]
    pub terms: Option<PathBuf>,
    /// Use F_0, F_1, ... of this family as terms.
    #[arg(long)]
    pub family: Option<PathBuf>,
    /// Largest Hankel size.
    #[arg(long, default_value_t = 5)]
    pub h_max: usize,
    /// Test the hypothesis "recurrence of order at most K" (symbolic terms).
    #[arg(long = "order")]
    pub order: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct AbcArgs {
    /// JSON list of polynomials summing to zero.
    #[arg(long, conflicts_with = "family")]
    pub polys: Option<PathBuf>,
    /// Check every F_n of this family in --n-range.
    #[arg(long)]
    pub family: Option<PathBuf>,
    #[arg(long, value_parser = parse_range, default_value = "1:20")]
    pub n_range: NRange,
}

#[derive(Args, Debug, Serialize)]
pub struct GcdlabArgs {
    /// JSON list of rational functions f_1, ..., f_k.
    #[arg(long)]
    pub f: PathBuf,
    /// JSON list of rational functions g_1, ..., g_l.
    #[arg(long)]
    pub g: PathBuf,
    /// Exponent window: exponents range over 0..=M, excluding the all-zero vector.
    #[arg(long, default_value_t = 6)]
    pub window: u32,
    /// Comma-separated rational generators of the group, e.g. "2,3/5".
    #[arg(long, default_value = "")]
    pub group: String,
    /// JSON list of [u, v] pairs from the division group; default [[1, 1]].
    #[arg(long)]
    pub uv_samples: Option<PathBuf>,
    /// Additional seeded random (u, v) pairs from the division group.
    #[arg(long, default_value_t = 0)]
    pub random_uv: usize,
    /// Polynomial F for the corollary check (needs --corollary-g).
    #[arg(long, requires = "corollary_g")]
    pub corollary_f: Option<PathBuf>,
    #[arg(long, requires = "corollary_f")]
    pub corollary_g: Option<PathBuf>,
    /// Write the grid degrees as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct TorsionArgs {
    /// Two rational-function files g1.json g2.json.
    #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
    pub level_curve: Option<Vec<PathBuf>>,
    /// Bivariate polynomial file for the torsion-point search.
    #[arg(long)]
    pub bivariate: Option<PathBuf>,
    /// JSON list of rational functions f_1, ..., f_k for the triple census.
    #[arg(long)]
    pub census: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct PowersArgs {
    #[arg(long, requires = "alpha")]
    pub family: Option<PathBuf>,
    #[arg(long)]
    pub alpha: Option<PathBuf>,
    /// Decide a single element instead of scanning a family.
    #[arg(long, conflicts_with = "family")]
    pub element: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long = "N", default_value_t = 500)]
    pub n: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct HeightsArgs {
    #[arg(long)]
    pub family: Option<PathBuf>,
    /// Weil height of one element instead of a survey.
    #[arg(long, conflicts_with = "family")]
    pub element: Option<PathBuf>,
    #[arg(long, value_parser = parse_range, default_value = "1:20")]
    pub ns: NRange,
    /// Factor degrees only, without root heights.
    #[arg(long)]
    pub degrees: bool,
    /// Skip F_n of degree above this.
    #[arg(long, default_value_t = SurveyLimits::default().max_degree)]
    pub max_degree: usize,
    /// Write the survey as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Failure with its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn malformed(message: impl Into<String>) -> CliError {
    CliError { code: 1, message: message.into() }
}

fn violation(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

impl From<WireError> for CliError {
    fn from(e: WireError) -> Self {
        malformed(e.to_string())
    }
}

impl From<LrsError> for CliError {
    fn from(e: LrsError) -> Self {
        match e {
            LrsError::InvalidFamily(_) | LrsError::PoleError { .. } | LrsError::ExceptionalPoint(_) => {
                violation(e.to_string())
            }
            _ => malformed(e.to_string()),
        }
    }
}

impl From<SkolemError> for CliError {
    fn from(e: SkolemError) -> Self {
        match e {
            SkolemError::NotPolynomial => violation(e.to_string()),
            SkolemError::Lrs(l) => l.into(),
            _ => malformed(e.to_string()),
        }
    }
}

impl From<AbcError> for CliError {
    fn from(e: AbcError) -> Self {
        violation(e.to_string())
    }
}

impl From<GcdLabError> for CliError {
    fn from(e: GcdLabError) -> Self {
        match e {
            GcdLabError::DependentInput(_) | GcdLabError::NotInDivisionGroup(_) => violation(e.to_string()),
            _ => malformed(e.to_string()),
        }
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        match e {
            TorsionError::DegenerateInput(_) | TorsionError::DegenerateFactor { .. } => violation(e.to_string()),
            _ => malformed(e.to_string()),
        }
    }
}

impl From<PowersError> for CliError {
    fn from(e: PowersError) -> Self {
        match e {
            PowersError::NotCyclotomic => violation(e.to_string()),
            PowersError::InvalidArgument(_) => malformed(e.to_string()),
        }
    }
}

/// Report plus any side files (CSV) to write.
#[derive(Debug, Clone)]
pub struct Output {
    pub report: Value,
    pub files: Vec<(PathBuf, String)>,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    wire::parse_json(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

/// Parses a file with `parse`, prefixing errors with the file name.
fn load<T>(path: &Path, parse: impl Fn(&Value, &str) -> Result<T, WireError>) -> Result<T, CliError> {
    let v = read_json(path)?;
    parse(&v, "$").map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<ParametricFamily, CliError> {
    let (a, f) = load(path, |v, p| {
        let a = v.get("a").ok_or_else(|| WireError { path: p.into(), message: "missing field \"a\"".into() })?;
        let f = v.get("f").ok_or_else(|| WireError { path: p.into(), message: "missing field \"f\"".into() })?;
        Ok((wire::ratfunc_list_from(a, "$.a")?, wire::ratfunc_list_from(f, "$.f")?))
    })?;
    Ok(ParametricFamily::new(a, f)?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let (result, files) = match &cli.command {
        Command::Analyze(a) => (analyze(a)?, Vec::new()),
        Command::Expand(a) => (expand(a)?, Vec::new()),
        Command::Skolem(a) => (skolem(a)?, Vec::new()),
        Command::Hankel(a) => (hankel(a)?, Vec::new()),
        Command::Abc(a) => (abc(a)?, Vec::new()),
        Command::Gcdlab(a) => gcdlab(a, cli.seed)?,
        Command::Torsion(a) => (torsion(a)?, Vec::new()),
        Command::Powers(a) => (powers(a)?, Vec::new()),
        Command::Heights(a) => heights(a)?,
    };
    let config = serde_json::to_value(cli).expect("arguments serialize");
    Ok(Output {
        report: json!({
            "version": env!("CARGO_PKG_VERSION"),
            "config": config,
            "result": result,
        }),
        files,
    })
}

/// Parses arguments, runs, writes outputs; returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli).and_then(|out| write_output(&cli, &out)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

fn write_output(cli: &Cli, out: &Output) -> Result<(), CliError> {
    let text = wire::to_pretty(&out.report);
    let io = |p: &Path, e: std::io::Error| malformed(format!("{}: {e}", p.display()));
    match &cli.out {
        Some(p) => fs::write(p, text).map_err(|e| io(p, e))?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(malformed(format!("stdout: {e}"))),
                _ => {}
            }
        }
    }
    for (p, body) in &out.files {
        fs::write(p, body).map_err(|e| io(p, e))?;
    }
    Ok(())
}

fn analyze(a: &AnalyzeArgs) -> Result<Value, CliError> {
    let fam = load_family(&a.family)?;
    let alpha = load(&a.alpha, wire::alpha_from)?;
    let issues: Vec<Value> = fam.validate().iter().map(wire::issue_json).collect();
    let spec = fam.specialize(&alpha)?;
    let class = classify(&spec)?;
    let zeros = find_zeros(&spec, a.n, a.c)?;
    Ok(json!({
        "family": wire::family_json(&fam),
        "issues": issues,
        "alpha": wire::alpha_json(&alpha),
        "lrs": {
            "order": spec.order(),
            "mu": spec.mu().iter().map(wire::nfelem_json).collect::<Vec<_>>(),
            "lambda": spec.lambda().iter().map(wire::nfelem_json).collect::<Vec<_>>(),
            "recurrence_coeffs": spec.recurrence_coeffs().iter().map(wire::nfelem_json).collect::<Vec<_>>(),
            "origins": spec.origins(),
            "cancelled": spec.cancelled(),
        },
        "classification": wire::classification_json(&class),
        "zeros": wire::zero_report_json(&zeros),
    }))
}

fn expand(a: &ExpandArgs) -> Result<Value, CliError> {
    let fam = load_family(&a.family)?;
    let terms: Vec<Value> = a
        .n_range
        .values()
        .into_iter()
        .map(|n| {
            let f = fam.expand(n);
            json!({ "n": n, "degree": f.degree(), "value": wire::ratfunc_json(&f) })
        })
        .collect();
    Ok(json!({ "terms": terms }))
}

fn skolem(a: &SkolemArgs) -> Result<Value, CliError> {
    let fam = load_family(&a.family)?;
    let alpha = load(&a.alpha, wire::alpha_from)?;
    let spec = fam.specialize(&alpha)?;
    let zeros = find_zeros(&spec, a.n, a.c)?;
    let sml = if a.sml {
        Some(wire::sml_json(&sml_structure(&spec, a.n)?))
    } else {
        None
    };
    Ok(json!({ "zero_report": wire::zero_report_json(&zeros), "sml": sml }))
}

/// Terms as rationals when every entry is a rational, else as functions.
enum Terms {
    Numeric(Vec<Rat>),
    Symbolic(Vec<RatFunc>),
}

fn load_terms(path: &Path) -> Result<Terms, CliError> {
    load(path, |v, p| {
        let arr = v.as_array().ok_or_else(|| WireError { path: p.into(), message: "expected an array".into() })?;
        if arr.iter().all(|x| x.is_string() || x.is_number()) {
            let r = arr
                .iter()
                .enumerate()
                .map(|(i, x)| wire::rat_from(x, &format!("{p}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Terms::Numeric(r))
        } else {
            Ok(Terms::Symbolic(wire::ratfunc_list_from(v, p)?))
        }
    })
}

fn hankel(a: &HankelArgs) -> Result<Value, CliError> {
    if a.h_max == 0 {
        return Err(malformed("--h-max must be positive"));
    }
    let needed = 2 * a.h_max - 1;
    let terms = match (&a.terms, &a.family) {
        (Some(p), None) => load_terms(p)?,
        (None, Some(p)) => Terms::Symbolic(load_family(p)?.expand_range(needed)),
        _ => return Err(malformed("give exactly one of --terms, --family")),
    };
    match terms {
        Terms::Numeric(t) => {
            let rep = hankel_numeric(&t, a.h_max)?;
            Ok(json!({ "mode": "numeric", "report": wire::hankel_json(&rep, wire::rat_json) }))
        }
        Terms::Symbolic(t) => {
            let dets = hankel_symbolic_range(&t, a.h_max)?;
            let verdict = match a.order {
                Some(k) => Some(wire::verdict_json(&is_lrs_functional(&t, k, a.h_max)?)),
                None => None,
            };
            Ok(json!({
                "mode": "symbolic",
                "h_max": a.h_max,
                "dets": dets.iter().map(wire::ratfunc_json).collect::<Vec<_>>(),
                "verdict": verdict,
            }))
        }
    }
}

fn abc(a: &AbcArgs) -> Result<Value, CliError> {
    match (&a.polys, &a.family) {
        (Some(p), None) => {
            let gs = load(p, wire::poly_list_from)?;
            Ok(wire::abc_json(&verify_mason_stothers(&gs)?))
        }
        (None, Some(p)) => {
            let fam = load_family(p)?;
            if !fam.is_polynomial() {
                return Err(violation("family must be polynomial"));
            }
            let mut all_hold = true;
            let mut lines = Vec::new();
            for n in a.n_range.values() {
                let roots = match distinct_root_lower_bound(&fam, n) {
                    Ok(r) => {
                        all_hold &= r.holds;
                        wire::distinct_root_json(&r)
                    }
                    Err(e) => json!({ "skipped": e.to_string() }),
                };
                let ms = match family_sum(&fam, n) {
                    Some(gs) => match verify_mason_stothers(&gs) {
                        Ok(r) => {
                            all_hold &= r.holds;
                            wire::abc_json(&r)
                        }
                        Err(e) => json!({ "skipped": e.to_string() }),
                    },
                    None => json!({ "skipped": "F_n vanishes identically" }),
                };
                lines.push(json!({ "n": n, "distinct_roots": roots, "mason_stothers": ms }));
            }
            Ok(json!({
                "lines": lines,
                "all_hold": all_hold,
                "zero_ns": nonvanishing_window(&fam, a.n_range.end),
            }))
        }
        _ => Err(malformed("give exactly one of --polys, --family")),
    }
}

/// `a_1 f_1^n + ... + a_k f_k^n - F_n = 0` as a list of summands.
fn family_sum(fam: &ParametricFamily, n: u64) -> Option<Vec<Poly<Rat>>> {
    let fnp = fam.expand(n).as_poly()?.clone();
    if fnp.is_zero() {
        return None;
    }
    let mut gs: Vec<Poly<Rat>> = fam
        .a()
        .iter()
        .zip(fam.f())
        .map(|(a, f)| a.num().mul_ref(&f.num().pow(n)))
        .collect();
    gs.push(fnp.neg_ref());
    Some(gs)
}

fn parse_group(s: &str) -> Result<RationalGroup, CliError> {
    let gens = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| parse_rat(x).map_err(|e| malformed(format!("--group: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalGroup::new(gens)?)
}

fn load_uv(path: &Path) -> Result<Vec<(Rat, Rat)>, CliError> {
    load(path, |v, p| {
        let arr = v.as_array().ok_or_else(|| WireError { path: p.into(), message: "expected an array".into() })?;
        arr.iter()
            .enumerate()
            .map(|(i, pair)| {
                let q = format!("{p}[{i}]");
                match pair.as_array().map(Vec::as_slice) {
                    Some([u, v]) => Ok((wire::rat_from(u, &format!("{q}[0]"))?, wire::rat_from(v, &format!("{q}[1]"))?)),
                    _ => Err(WireError { path: q, message: "expected a pair [u, v]".into() }),
                }
            })
            .collect()
    })
}

fn gcd_csv(r: &GcdReport) -> String {
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
    let mut out = String::from("m,n,u,v,deg,mult\n");
    for c in &r.cells {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            join(&c.m),
            join(&c.n),
            c.u,
            c.v,
            c.gcd.degree().unwrap_or(0),
            c.mult
        ));
    }
    out
}

fn gcdlab(a: &GcdlabArgs, seed: u64) -> Result<(Value, Vec<(PathBuf, String)>), CliError> {
    let fs = load(&a.f, wire::ratfunc_list_from)?;
    let gs = load(&a.g, wire::ratfunc_list_from)?;
    let group = parse_group(&a.group)?;
    let one = Rat::from_integer(1.into());
    let mut uv = match &a.uv_samples {
        Some(p) => load_uv(p)?,
        None => vec![(one.clone(), one)],
    };
    if a.random_uv > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let us = group.sample_div(&mut rng, a.random_uv);
        let vs = group.sample_div(&mut rng, a.random_uv);
        uv.extend(us.into_iter().zip(vs));
    }
    let rep = empirical_h(&fs, &gs, &group, a.window, &uv)?;
    let corollary = match (&a.corollary_f, &a.corollary_g) {
        (Some(pf), Some(pg)) => {
            let big_f = load(pf, wire::poly_from)?;
            let big_g = load(pg, wire::poly_from)?;
            Some(wire::corollary_json(&corollary_check(&fs, &gs, &big_f, &big_g, &group, a.window)?))
        }
        _ => None,
    };
    let files = a.csv.iter().map(|p| (p.clone(), gcd_csv(&rep))).collect();
    let result = json!({
        "group": group.generators().iter().map(wire::rat_json).collect::<Vec<_>>(),
        "uv": uv.iter().map(|(u, v)| json!([wire::rat_json(u), wire::rat_json(v)])).collect::<Vec<_>>(),
        "report": wire::gcd_report_json(&rep),
        "corollary": corollary,
    });
    Ok((result, files))
}

fn torsion(a: &TorsionArgs) -> Result<Value, CliError> {
    let modes = a.level_curve.is_some() as u8 + a.bivariate.is_some() as u8 + a.census.is_some() as u8;
    if modes != 1 {
        return Err(malformed("give exactly one of --level-curve, --bivariate, --census"));
    }
    if let Some(paths) = &a.level_curve {
        let g1 = load(&paths[0], wire::ratfunc_from)?;
        let g2 = load(&paths[1], wire::ratfunc_from)?;
        return Ok(wire::level_json(&level_curve_points(&g1, &g2)?));
    }
    if let Some(p) = &a.bivariate {
        let poly = load(p, wire::bipoly_from)?;
        return Ok(wire::torsion_search_json(&bivariate_rou_solutions(&poly, a.max_order)?));
    }
    let fs = load(a.census.as_ref().unwrap(), wire::ratfunc_list_from)?;
    Ok(wire::census_json(&triple_dominance_census(&fs)?))
}

fn powers(a: &PowersArgs) -> Result<Value, CliError> {
    if let Some(p) = &a.element {
        let u = load(p, wire::alpha_from)?;
        return Ok(wire::power_verdict_json(&power_verdict_cyclotomic(&u, a.m)?));
    }
    let (Some(fp), Some(ap)) = (&a.family, &a.alpha) else {
        return Err(malformed("give --family with --alpha, or --element"));
    };
    let fam = load_family(fp)?;
    let alpha = load(ap, wire::alpha_from)?;
    let spec = fam.specialize(&alpha)?;
    Ok(wire::power_scan_json(&power_structure_scan(&spec, a.m, a.n)?))
}

fn heights(a: &HeightsArgs) -> Result<(Value, Vec<(PathBuf, String)>), CliError> {
    if let Some(p) = &a.element {
        let u = load(p, wire::alpha_from)?;
        let h = weil_height(&u).map_err(|e| malformed(e.to_string()))?;
        return Ok((json!({ "element": wire::alpha_json(&u), "height": wire::height_json(&h) }), Vec::new()));
    }
    let Some(fp) = &a.family else {
        return Err(malformed("give --family or --element"));
    };
    let fam = load_family(fp)?;
    let limits = SurveyLimits {
        max_degree: a.max_degree,
        ..SurveyLimits::default()
    };
    let ns = a.ns.values();
    let rep = if a.degrees {
        min_factor_degree_survey(&fam, &ns, limits)?
    } else {
        zero_height_survey(&fam, &ns, limits)?
    };
    let files = a.csv.iter().map(|p| (p.clone(), wire::survey_csv(&rep))).collect();
    Ok((wire::survey_json(&rep), files))
}
