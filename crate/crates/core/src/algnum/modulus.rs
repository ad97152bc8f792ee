use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ball::CBall;
use super::roots::{DEFAULT_PREC, MAX_PREC};
use super::{AlgNumError, NFElem};
use crate::exactalg::{BiPoly, Poly, Rat};

/// Certified comparison of `|u|` and `|v|` under the `j`-th embedding.
///
/// Equality is decided exactly: over the rationals and in real embeddings
/// by `u = +-v`; when the field has a conjugation map by comparing `u ubar`
/// and `v vbar` in the field; otherwise by refining `|u|^2 - |v|^2` below
/// a root separation bound of a polynomial vanishing at it.
pub fn modulus_compare(u: &NFElem, v: &NFElem, j: usize) -> Result<Ordering, AlgNumError> {
    let k = u.field();
    if !k.same_as(v.field()) {
        return Err(AlgNumError::FieldMismatch);
    }
    if j >= k.degree() {
        return Err(AlgNumError::BadRootIndex {
            index: j,
            degree: k.degree(),
        });
    }
    if let (Some(a), Some(b)) = (u.as_rat(), v.as_rat()) {
        return Ok(a.abs().cmp(&b.abs()));
    }
    if u == v || *u == v.neg() {
        return Ok(Ordering::Equal);
    }
    if k.is_real_embedding(j) {
        return separate(u, v, j, None);
    }
    if k.conjugation_at(j).is_some() {
        let uu = u.mul(&u.conj_at(j)?);
        let vv = v.mul(&v.conj_at(j)?);
        if uu == vv {
            return Ok(Ordering::Equal);
        }
        return separate(u, v, j, None);
    }
    let beta = separation_bound(u, v);
    separate(u, v, j, Some(beta))
}

/// Refines until the modulus enclosures separate, or, given a bound `beta`
/// below which `|u|^2 - |v|^2` must vanish, until equality is certified.
fn separate(u: &NFElem, v: &NFElem, j: usize, beta: Option<Rat>) -> Result<Ordering, AlgNumError> {
    let mut p = DEFAULT_PREC;
    loop {
        let a = u.ball(j, p)?;
        let b = v.ball(j, p)?;
        if let Some(o) = a.cmp_abs(&b) {
            return Ok(o);
        }
        if let Some(beta) = &beta {
            let w = norm_sq(&a).sub(&norm_sq(&b));
            if w.inside_radius(beta) {
                return Ok(Ordering::Equal);
            }
        }
        if p >= MAX_PREC {
            return Err(AlgNumError::PrecisionExceeded(MAX_PREC));
        }
        p *= 2;
    }
}

fn norm_sq(a: &CBall) -> CBall {
    a.mul(&a.conj())
}

/// Lower bound on `|w|` for every nonzero `w = u(x)u(y) - v(x)v(y)` with
/// `x, y` roots of the minimal polynomial of the field, from the polynomial
/// `P(z) = prod_{x,y} (z - w(x, y))`.
fn separation_bound(u: &NFElem, v: &NFElem) -> Rat {
    let m = u.field().minpoly();
    let n = m.degree().unwrap();
    let (a, b) = (u.rep().coeffs(), v.rep().coeffs());
    let get = |c: &[Rat], i: usize| c.get(i).cloned().unwrap_or_else(Rat::zero);
    let d = a.len().max(b.len());
    let pts: Vec<(Rat, Rat)> = (0..=(n * n) as i64)
        .map(|z0| {
            let z0 = Rat::from_integer(z0.into());
            let mut terms = Vec::new();
            for i in 0..d {
                for l in 0..d {
                    let c = get(a, i) * get(a, l) - get(b, i) * get(b, l);
                    terms.push((l, i, -c));
                }
            }
            terms.push((0, 0, z0.clone()));
            let g = BiPoly::from_terms(&terms).norm_over(m);
            let val = if g.is_zero() {
                Rat::zero()
            } else {
                m.resultant(&g).expect("nonzero operands")
            };
            (z0, val)
        })
        .collect();
    let p = Poly::interpolate(&pts);
    cauchy_lower_bound(&p)
}

/// `|c_s| / (|c_s| + max_{i>s} |c_i|)` for the primitive integer form of
/// `p` with lowest nonzero coefficient `c_s`: no nonzero root is smaller.
pub(crate) fn cauchy_lower_bound(p: &Poly<Rat>) -> Rat {
    let (_, z) = p.to_primitive_int();
    let s = z.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    let c0 = z[s].abs();
    let mx = z[s + 1..]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    Rat::new(c0.clone(), c0 + mx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;

    #[test]
    fn rational_cases() {
        let q = NumberField::rationals();
        assert_eq!(modulus_compare(&q.from_int(4), &q.from_int(2), 0).unwrap(), Ordering::Greater);
        assert_eq!(modulus_compare(&q.from_int(-3), &q.from_int(3), 0).unwrap(), Ordering::Equal);
    }

    #[test]
    fn gaussian_conjugates() {
        let qi = NumberField::new(&Poly::from_i64s(&[1, 0, 1]), 1).unwrap();
        let a = qi.one().add(&qi.gen());
        let b = qi.one().sub(&qi.gen());
        for j in 0..2 {
            assert_eq!(modulus_compare(&a, &b, j).unwrap(), Ordering::Equal);
        }
        let c = qi.from_int(2);
        assert_eq!(modulus_compare(&a, &c, 0).unwrap(), Ordering::Less);
    }

    #[test]
    fn golden_roots() {
        let k = NumberField::new(&Poly::from_i64s(&[-1, -1, 1]), 1).unwrap();
        let phi = k.gen();
        let other = k.one().sub(&phi);
        assert_eq!(modulus_compare(&phi, &other, 1).unwrap(), Ordering::Greater);
        assert_eq!(modulus_compare(&phi, &other, 0).unwrap(), Ordering::Less);
    }

    #[test]
    fn equality_without_conjugation_map() {
        // t^4 = 2 at t = +-i 2^(1/4): |1 + t| = |1 - t| although the field
        // carries no known conjugation map, so the separation bound decides
        let k = NumberField::new(&Poly::from_i64s(&[-2, 0, 0, 0, 1]), 0).unwrap();
        let j = (0..4).find(|&j| !k.is_real_embedding(j)).unwrap();
        assert!(k.conjugation_at(j).is_none());
        let t = k.gen();
        let a = k.one().add(&t);
        let b = k.one().sub(&t);
        assert_eq!(modulus_compare(&a, &b, j).unwrap(), Ordering::Equal);
        // at the real embeddings they differ
        let r = (0..4).find(|&j| k.is_real_embedding(j)).unwrap();
        assert_ne!(modulus_compare(&a, &b, r).unwrap(), Ordering::Equal);
        assert_eq!(modulus_compare(&t.mul(&t), &t, j).unwrap(), Ordering::Greater);
    }

    #[test]
    fn separation_polynomial_bound_is_positive() {
        let k = NumberField::new(&Poly::from_i64s(&[-2, 0, 0, 1]), 0).unwrap();
        let t = k.gen();
        let beta = separation_bound(&t.add(&k.one()), &t);
        assert!(beta > Rat::zero());
    }
}
