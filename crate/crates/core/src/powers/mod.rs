//! Perfect powers among sequence terms: exact tests over Q, sound
//! partial verdicts in cyclotomic fields, and residue-class scans.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algnum::{NFElem, NumberField};
use crate::exactalg::{Poly, Rat};
use crate::lrs::SpecializedLRS;

/// Largest denominator accepted when rounding reconstructed coefficients.
pub const MAX_DENOMINATOR: i64 = 1_000_000;

/// Root-choice combinations tried before a reconstruction gives up.
pub const MAX_COMBINATIONS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowersError {
    #[error("element does not live in a cyclotomic field")]
    NotCyclotomic,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// `r` with `r^m = u`, if one exists in Q. `m >= 1`.
pub fn is_perfect_power_rat(u: &Rat, m: u32) -> Option<Rat> {
    assert!(m >= 1, "exponent must be positive");
    if u.is_zero() {
        return Some(Rat::zero());
    }
    if u.is_negative() && m % 2 == 0 {
        return None;
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let r = x.nth_root(m);
        (num_traits::pow(r.clone(), m as usize) == *x).then_some(r)
    };
    // the denominator is positive; the numerator's sign survives odd roots
    Some(Rat::new(root(u.numer())?, root(u.denom())?))
}

#[derive(Clone, Debug, PartialEq)]
pub enum PowerVerdict {
    Yes(NFElem),
    No,
    Unknown,
}

/// Whether `u` is an `m`-th power in its field, which must be Q or
/// cyclotomic.
///
/// `No` comes only from the norm test (`N(u)` not an `m`-th power in Q) or
/// from the exact test over Q; `Yes` only from an exactly verified root.
pub fn power_verdict_cyclotomic(u: &NFElem, m: u32) -> Result<PowerVerdict, PowersError> {
    if m == 0 {
        return Err(PowersError::InvalidArgument("m must be positive".into()));
    }
    let k = u.field();
    if k.degree() > 1 && k.cyclotomic_order().is_none() {
        return Err(PowersError::NotCyclotomic);
    }
    let verdict = verdict_inner(u, m);
    if let PowerVerdict::Yes(r) = &verdict {
        assert_eq!(r.pow(m as i64).as_ref(), Ok(u), "power verdict root does not reproduce u");
    }
    Ok(verdict)
}

fn verdict_inner(u: &NFElem, m: u32) -> PowerVerdict {
    let k = u.field();
    if let Some(q) = u.as_rat() {
        if let Some(r) = is_perfect_power_rat(&q, m) {
            return PowerVerdict::Yes(k.from_rat(r));
        }
        if k.degree() == 1 {
            return PowerVerdict::No;
        }
    }
    if is_perfect_power_rat(&u.norm(), m).is_none() {
        return PowerVerdict::No;
    }
    match reconstruct_root(u, m) {
        Some(r) => PowerVerdict::Yes(r),
        None => PowerVerdict::Unknown,
    }
}

/// Searches for `rho` in the field with `rho^m = u` from numeric `m`-th
/// roots of all conjugates of `u`, solving the Vandermonde system in the
/// power basis and rounding to small-denominator rationals.
fn reconstruct_root(u: &NFElem, m: u32) -> Option<NFElem> {
    let k = u.field();
    let d = k.degree();
    let combos = (m as usize).checked_pow(d as u32)?;
    if combos > MAX_COMBINATIONS {
        return None;
    }
    let j0 = k.root_index();
    // the designated embedding varies slowest, so its principal root wins
    let order: Vec<usize> = std::iter::once(j0).chain((0..d).filter(|&j| j != j0)).collect();
    let ts: Vec<Complex64> = order.iter().map(|&j| embed(&k.gen(), j)).collect();
    let roots: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&j| {
            let w = embed(u, j);
            let p = w.powf(1.0 / m as f64);
            (0..m)
                .map(|s| p * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s as f64 / m as f64))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; d];
    for _ in 0..combos {
        let w: Vec<Complex64> = choice.iter().zip(&roots).map(|(&c, r)| r[c]).collect();
        if let Some(rho) = solve_vandermonde(&ts, &w).and_then(|c| round_coeffs(k, &c)) {
            if rho.pow(m as i64).ok().as_ref() == Some(u) {
                return Some(rho);
            }
        }
        for c in choice.iter_mut().rev() {
            *c += 1;
            if *c < m as usize {
                break;
            }
            *c = 0;
        }
    }
    None
}

fn embed(e: &NFElem, j: usize) -> Complex64 {
    let (re, im) = e.to_complex(j);
    // -0 would put a negative real on the far side of the branch cut
    Complex64::new(re, im + 0.0)
}

/// `c` with `sum_i c_i t_j^i = w_j` for all `j`, by elimination with
/// partial pivoting.
fn solve_vandermonde(ts: &[Complex64], w: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = ts.len();
    let mut a: Vec<Vec<Complex64>> = ts
        .iter()
        .zip(w)
        .map(|(t, wj)| {
            let mut row: Vec<Complex64> = (0..n).map(|i| t.powu(i as u32)).collect();
            row.push(*wj);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))?;
        if a[piv][col].norm() < 1e-12 {
            return None;
        }
        a.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                for c in col..=n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some((0..n).map(|i| a[i][n] / a[i][i]).collect())
}

fn round_coeffs(k: &NumberField, c: &[Complex64]) -> Option<NFElem> {
    let mut coeffs = Vec::with_capacity(c.len());
    for z in c {
        if !z.re.is_finite() || z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            return None;
        }
        coeffs.push(nearest_rational(z.re, MAX_DENOMINATOR)?);
    }
    Some(k.elem(Poly::from_coeffs(coeffs)))
}

/// Best continued-fraction approximation to `x` with denominator at most
/// `max_den`.
fn nearest_rational(x: f64, max_den: i64) -> Option<Rat> {
    if x.abs() > 1e15 {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = y - a;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    (q1 != 0).then(|| Rat::new(BigInt::from(p1), BigInt::from(q1)))
}

/// Residue-class structure of `{n <= N : u_n is an m-th power}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerScan {
    pub m: u32,
    pub window: u64,
    /// Residues `r mod m` whose every sampled `n` gave an `m`-th power.
    pub full_residues: Vec<u64>,
    /// `m`-th powers found in residues that are not full.
    pub exceptional_ns: Vec<u64>,
    /// `(r, n)`: first `n = r mod m` whose term is not an `m`-th power.
    pub counterexamples: Vec<(u64, u64)>,
    /// Residues containing an undecided term; excluded from both lists.
    pub quarantined: Vec<u64>,
    pub undecided_ns: Vec<u64>,
}

/// Classifies every term `u_0, ..., u_N` and groups the verdicts by `n mod m`.
pub fn power_structure_scan(spec: &SpecializedLRS, m: u32, window: u64) -> Result<PowerScan, PowersError> {
    if m < 2 {
        return Err(PowersError::InvalidArgument("m must be at least 2".into()));
    }
    let terms = spec.terms(window as usize + 1);
    let verdicts = terms
        .iter()
        .map(|u| power_verdict_cyclotomic(u, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mm = m as u64;
    let mut scan = PowerScan {
        m,
        window,
        full_residues: Vec::new(),
        exceptional_ns: Vec::new(),
        counterexamples: Vec::new(),
        quarantined: Vec::new(),
        undecided_ns: Vec::new(),
    };
    for r in 0..mm {
        let ns = (r..=window).step_by(m as usize);
        let mut yes = Vec::new();
        let mut first_no = None;
        let mut unknown = false;
        for n in ns {
            match &verdicts[n as usize] {
                PowerVerdict::Yes(_) => yes.push(n),
                PowerVerdict::No => {
                    first_no.get_or_insert(n);
                }
                PowerVerdict::Unknown => {
                    unknown = true;
                    scan.undecided_ns.push(n);
                }
            }
        }
        if unknown {
            scan.quarantined.push(r);
        } else if let Some(n) = first_no {
            scan.counterexamples.push((r, n));
            scan.exceptional_ns.extend(yes);
        } else if !yes.is_empty() {
            scan.full_residues.push(r);
        }
    }
    scan.exceptional_ns.sort_unstable();
    scan.undecided_ns.sort_unstable();
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn geometric(mu: i64, c: i64) -> SpecializedLRS {
        let q = NumberField::rationals();
        SpecializedLRS::new(vec![q.from_int(mu)], vec![q.from_int(c)]).unwrap()
    }

    #[test]
    fn rational_roots() {
        assert_eq!(is_perfect_power_rat(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(is_perfect_power_rat(&int(8), 2), None);
        assert_eq!(is_perfect_power_rat(&int(-32), 5), Some(int(-2)));
        assert_eq!(is_perfect_power_rat(&int(-4), 2), None);
        assert_eq!(is_perfect_power_rat(&rat(1, 4), 2), Some(rat(1, 2)));
        assert_eq!(is_perfect_power_rat(&rat(1, 8), 2), None);
    }

    #[test]
    fn cyclotomic_verdicts() {
        let k3 = NumberField::cyclotomic(3);
        assert_eq!(power_verdict_cyclotomic(&k3.from_int(4), 2).unwrap(), PowerVerdict::Yes(k3.from_int(2)));
        assert_eq!(power_verdict_cyclotomic(&k3.from_int(2), 2).unwrap(), PowerVerdict::Unknown);
        // N(3) = 9 is not a cube
        assert_eq!(power_verdict_cyclotomic(&k3.from_int(3), 3).unwrap(), PowerVerdict::No);

        let qi = NumberField::cyclotomic(4);
        let PowerVerdict::Yes(r) = power_verdict_cyclotomic(&qi.from_int(-4), 2).unwrap() else {
            panic!("-4 is a square in Q(i)");
        };
        assert_eq!(r, qi.gen().scale(&int(2)));
        // zeta_3 is a square: zeta_3 = (zeta_3^2)^2
        let z = k3.gen();
        assert!(matches!(power_verdict_cyclotomic(&z, 2).unwrap(), PowerVerdict::Yes(_)));
    }

    #[test]
    fn non_cyclotomic_field_rejected() {
        let k = NumberField::new(&Poly::from_i64s(&[-2, 0, 1]), 0).unwrap();
        assert_eq!(power_verdict_cyclotomic(&k.gen(), 2), Err(PowersError::NotCyclotomic));
    }

    #[test]
    fn scans() {
        let s = power_structure_scan(&geometric(1, 4), 2, 60).unwrap();
        assert_eq!(s.full_residues, vec![0, 1]);
        assert!(s.counterexamples.is_empty());

        let s = power_structure_scan(&geometric(1, 2), 2, 60).unwrap();
        assert_eq!(s.full_residues, vec![0]);
        assert_eq!(s.counterexamples, vec![(1, 1)]);
        assert!(s.exceptional_ns.is_empty());

        let s = power_structure_scan(&geometric(2, 3), 2, 60).unwrap();
        assert!(s.full_residues.is_empty());
        assert!(s.exceptional_ns.is_empty());
        assert_eq!(s.counterexamples, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(nearest_rational(0.333333333333, 1000), Some(rat(1, 3)));
        assert_eq!(nearest_rational(-2.5, 10), Some(rat(-5, 2)));
        assert_eq!(nearest_rational(3.0, 10), Some(int(3)));
    }
}
