use crate::algnum::{NumberField, NFElem};
use crate::exactalg::modp::{is_zero_poly, Fp, PPoly};
use crate::exactalg::{lcm_u64, Poly, Rat};
use crate::lrs::{classify, Classification, SpecializedLRS};

use super::SkolemError;

/// Zeros of `u_n` for `0 <= n <= searched_bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroReport {
    pub zeros: Vec<u64>,
    pub searched_bound: u64,
    pub classification: Classification,
    pub bound_formula: String,
}

/// `u_{nh+j}` for each residue `j < h`, as sequences in `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub modulus: u64,
    pub subsequences: Vec<SpecializedLRS>,
}

/// Zero set of `u_n` as residue classes mod `modulus` on which the sequence
/// vanishes identically, plus isolated zeros found up to `searched_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmlStructure {
    pub modulus: u64,
    pub zero_progressions: Vec<u64>,
    pub sporadic_zeros: Vec<u64>,
    pub searched_bound: u64,
    /// Every surviving class is non-degenerate with at most two dominant roots.
    pub complete: bool,
}

/// Exact zero search by running the recurrence up to `n = bound`.
pub fn find_zeros(spec: &SpecializedLRS, bound: u64, c: Option<f64>) -> Result<ZeroReport, SkolemError> {
    if bound < 1 {
        return Err(SkolemError::InvalidArgument("search bound must be at least 1".into()));
    }
    let zeros = zero_indices(spec, bound);
    Ok(ZeroReport {
        zeros,
        searched_bound: bound,
        classification: classify(spec)?,
        bound_formula: render_zero_bound(spec.field(), c),
    })
}

/// Primes for the modular prefilter of the zero search.
const FILTER_PRIMES: [u64; 6] = [2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549];

fn zero_indices(spec: &SpecializedLRS, bound: u64) -> Vec<u64> {
    if spec.order() == 0 {
        return (0..=bound).collect();
    }
    let images: Vec<ModImage> = FILTER_PRIMES.iter().filter_map(|&p| ModImage::new(spec, p)).take(2).collect();
    if images.len() < 2 {
        return spec
            .terms(bound as usize + 1)
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_zero())
            .map(|(n, _)| n as u64)
            .collect();
    }
    let candidates = images
        .into_iter()
        .map(|im| im.zero_set(bound))
        .reduce(|a, b| a.into_iter().filter(|n| b.binary_search(n).is_ok()).collect())
        .unwrap_or_default();
    candidates.into_iter().filter(|&n| spec.term(n).is_zero()).collect()
}

/// `u_n` reduced modulo a prime `p` at which every coefficient and the
/// defining polynomial are `p`-integral. An exact zero stays zero mod `p`.
struct ModImage {
    fp: Fp,
    modulus: PPoly,
    mu: Vec<PPoly>,
    lambda: Vec<PPoly>,
}

impl ModImage {
    fn new(spec: &SpecializedLRS, p: u64) -> Option<Self> {
        let fp = Fp::new(p);
        let red = |q: &Poly<Rat>| -> Option<PPoly> {
            q.coeffs()
                .iter()
                .map(|c| {
                    let d = fp.reduce_int(c.denom());
                    (d != 0).then(|| fp.reduce_int(c.numer()) * fp.inv(d) % p)
                })
                .collect()
        };
        let modulus = red(spec.field().minpoly())?;
        if modulus.last().copied().unwrap_or(0) == 0 {
            return None;
        }
        let elems = |xs: &[NFElem]| xs.iter().map(|x| red(x.rep())).collect::<Option<Vec<_>>>();
        Some(ModImage { fp, mu: elems(spec.mu())?, lambda: elems(spec.lambda())?, modulus })
    }

    /// Indices `n <= bound` with `u_n = 0 mod p`, ascending.
    fn zero_set(&self, bound: u64) -> Vec<u64> {
        let mut cur = self.mu.clone();
        let mut out = Vec::new();
        for n in 0..=bound {
            let sum = cur.iter().fold(PPoly::new(), |a, t| self.fp.add(&a, t));
            if is_zero_poly(&self.fp.rem(&sum, &self.modulus)) {
                out.push(n);
            }
            for (c, l) in cur.iter_mut().zip(&self.lambda) {
                *c = self.fp.rem(&self.fp.mul(c, l), &self.modulus);
            }
        }
        out
    }
}

/// Degree of the Galois closure of the field when it is evident (the field
/// is `Q`, quadratic or cyclotomic), else the interval `[deg, deg!]`.
fn galois_degree(k: &NumberField) -> Result<u64, (u64, u64)> {
    let d = k.degree() as u64;
    if d <= 2 || k.cyclotomic_order().is_some() {
        return Ok(d);
    }
    let fact = (1..=d).try_fold(1u64, |a, b| a.checked_mul(b)).unwrap_or(u64::MAX);
    Err((d, fact))
}

/// Text of the zero bound `n <= exp(C D^4)`, `D` the degree of the Galois
/// closure of the field; the constant `C` is never invented.
pub fn render_zero_bound(k: &NumberField, c: Option<f64>) -> String {
    match (galois_degree(k), c) {
        (Ok(d), Some(c)) => {
            let e = c * (d as f64).powi(4);
            format!("n <= exp({c} * {d}^4) = exp({e}) ~ {:.6e}", e.exp())
        }
        (Ok(d), None) => format!("n <= exp(C * {d}^4), C not supplied"),
        (Err((lo, hi)), Some(c)) => format!("n <= exp({c} * D^4), {lo} <= D <= {hi}"),
        (Err((lo, hi)), None) => format!("n <= exp(C * D^4), {lo} <= D <= {hi}, C not supplied"),
    }
}

/// Splits `u_n` along residues mod `h`, the lcm of the orders of all
/// root-of-unity ratios `lambda_i / lambda_j`. Each subsequence
/// `u_{nh+j} = sum (mu_i lambda_i^j) (lambda_i^h)^n` has equal roots merged
/// and is checked to be non-degenerate.
pub fn decompose_degenerate(spec: &SpecializedLRS) -> Result<Decomposition, SkolemError> {
    let cls = classify(spec)?;
    let h = cls.degenerate_pairs.iter().fold(1u64, |acc, p| lcm_u64(acc, p.2));
    if h == 1 {
        return Ok(Decomposition { modulus: 1, subsequences: vec![spec.clone()] });
    }
    let k = spec.field();
    let lam_h: Vec<NFElem> = spec.lambda().iter().map(|l| pow(l, h)).collect();
    let mut subsequences = Vec::with_capacity(h as usize);
    for j in 0..h {
        let mu: Vec<NFElem> = spec
            .mu()
            .iter()
            .zip(spec.lambda())
            .map(|(m, l)| m.mul(&pow(l, j)))
            .collect();
        let sub = SpecializedLRS::merged(k, mu, lam_h.clone())?;
        let c = classify(&sub)?;
        assert!(c.degenerate_pairs.is_empty(), "residue class {j} is still degenerate");
        subsequences.push(sub);
    }
    Ok(Decomposition { modulus: h, subsequences })
}

fn pow(x: &NFElem, e: u64) -> NFElem {
    crate::exactalg::Scalar::pow_u(x, e)
}

/// Zero structure of `u_n` for `n <= bound`: classes on which every merged
/// coefficient cancels are progressions; other classes are searched.
pub fn sml_structure(spec: &SpecializedLRS, bound: u64) -> Result<SmlStructure, SkolemError> {
    if bound < 1 {
        return Err(SkolemError::InvalidArgument("search bound must be at least 1".into()));
    }
    let dec = decompose_degenerate(spec)?;
    let h = dec.modulus;
    let mut zero_progressions = Vec::new();
    let mut sporadic_zeros = Vec::new();
    let mut complete = true;
    for (j, sub) in dec.subsequences.iter().enumerate() {
        let j = j as u64;
        if sub.order() == 0 {
            zero_progressions.push(j);
            continue;
        }
        if j <= bound {
            let m = (bound - j) / h;
            sporadic_zeros.extend(zero_indices(sub, m).into_iter().map(|n| n * h + j));
        }
        complete &= classify(sub)?.dominant_count <= 2;
    }
    sporadic_zeros.sort_unstable();
    Ok(SmlStructure { modulus: h, zero_progressions, sporadic_zeros, searched_bound: bound, complete })
}
