use num_traits::{Signed, Zero};

use super::ball::{ln_big, CBall};
use super::roots::{isolate_roots, refine_roots, MAX_PREC};
use super::rou::rou_order_of_minpoly;
use super::{AlgNumError, NFElem};
use crate::exactalg::{Poly, Rat};

/// Approximate real value with a rigorous error bound.
#[derive(Clone, Debug, PartialEq)]
pub struct HeightValue {
    pub value: f64,
    pub error_bound: f64,
    /// Set when the value is `log` of an exactly known integer (rational
    /// inputs) or exactly zero (roots of unity).
    pub exact: bool,
}

pub const HEIGHT_TOLERANCE: f64 = 1e-9;

/// Absolute logarithmic Weil height of `u`.
pub fn weil_height(u: &NFElem) -> Result<HeightValue, AlgNumError> {
    if u.is_zero() {
        return Ok(HeightValue {
            value: 0.0,
            error_bound: 0.0,
            exact: true,
        });
    }
    height_of_minpoly(&u.min_poly())
}

/// Height shared by the roots of the irreducible polynomial `g`:
/// `log M(g~) / deg g` for the primitive integer form `g~`.
pub fn height_of_minpoly(g: &Poly<Rat>) -> Result<HeightValue, AlgNumError> {
    let n = g.degree().ok_or(AlgNumError::ZeroInput("height"))?;
    if n == 0 {
        return Err(AlgNumError::ZeroInput("height"));
    }
    if n == 1 {
        let r = -&g.coeffs()[0] / &g.coeffs()[1];
        if r.is_zero() {
            return Ok(HeightValue {
                value: 0.0,
                error_bound: 0.0,
                exact: true,
            });
        }
        let big = r.numer().abs().max(r.denom().clone());
        let value = ln_big(&big);
        return Ok(HeightValue {
            value,
            error_bound: value * 4.0 * f64::EPSILON,
            exact: true,
        });
    }
    if rou_order_of_minpoly(&g.monic()).is_some() {
        return Ok(HeightValue {
            value: 0.0,
            error_bound: 0.0,
            exact: true,
        });
    }
    let (lm, err) = log_mahler_measure(g, HEIGHT_TOLERANCE * n as f64 * 1e-3)?;
    Ok(HeightValue {
        value: lm / n as f64,
        error_bound: err / n as f64,
        exact: false,
    })
}

/// `(log M(f~), error)` for a squarefree `f`, refining root discs until the
/// error is at most `tol`.
pub fn log_mahler_measure(f: &Poly<Rat>, tol: f64) -> Result<(f64, f64), AlgNumError> {
    let (_, z) = f.to_primitive_int();
    let ln_lc = ln_big(&z.last().unwrap().abs());
    let mut roots = isolate_roots(&z)?;
    loop {
        let (sum, err) = contributions(&roots);
        let slop = 8.0 * f64::EPSILON * (ln_lc.abs() + sum.abs() + roots.len() as f64);
        let total = err + slop;
        if total <= tol {
            return Ok((ln_lc + sum, total));
        }
        let p = roots[0].prec;
        if p >= MAX_PREC {
            return Err(AlgNumError::PrecisionExceeded(MAX_PREC));
        }
        roots = refine_roots(&z, &roots, 2 * p)?;
    }
}

/// Sum of `log max(|z|, 1)` over the discs: midpoint and half-width.
fn contributions(roots: &[CBall]) -> (f64, f64) {
    let mut mid = 0.0;
    let mut half = 0.0;
    for b in roots {
        let lnc = b.ln_abs_center();
        let (lo, hi) = if b.rad.is_zero() {
            (lnc, lnc)
        } else {
            let lnr = ln_big(&b.rad) - b.prec as f64 * std::f64::consts::LN_2;
            let rel = (lnr - lnc).exp();
            let hi = lnc + rel.ln_1p();
            let lo = if rel < 1.0 {
                lnc + (-rel).ln_1p()
            } else {
                f64::NEG_INFINITY
            };
            (lo, hi)
        };
        let (lo, hi) = (lo.max(0.0), hi.max(0.0));
        mid += (lo + hi) / 2.0;
        half += (hi - lo) / 2.0;
    }
    (mid, half)
}
