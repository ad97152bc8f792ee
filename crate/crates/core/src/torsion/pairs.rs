use num_integer::Integer;
use num_traits::Zero;

use crate::exactalg::{gcd_free_basis, Poly, Rat};

/// Finds `(g, m1, m2)` with `g1 = g^m1` and `g2 = g^m2`, if one exists.
///
/// Both inputs are split over a common coprime basis; the exponent vectors
/// must be multiples of one primitive vector, and the leading constants
/// must be matching powers of a single rational. Among all solutions the
/// one with coprime `m1, m2` is returned (so `g` has a rational constant).
pub fn exceptional_pair_poly(g1: &Poly<Rat>, g2: &Poly<Rat>) -> Option<(Poly<Rat>, u32, u32)> {
    if g1.degree().unwrap_or(0) == 0 || g2.degree().unwrap_or(0) == 0 {
        return None;
    }
    let (basis, exps) = gcd_free_basis(&[g1.clone(), g2.clone()]).ok()?;
    let (e1, e2) = (&exps[0], &exps[1]);
    let m1 = e1.iter().fold(0usize, |a, &b| a.gcd(&b));
    let m2 = e2.iter().fold(0usize, |a, &b| a.gcd(&b));
    let prim: Vec<usize> = e1.iter().map(|e| e / m1).collect();
    if e2.iter().zip(&prim).any(|(e, p)| *e != p * m2) {
        return None;
    }
    let big = m1.gcd(&m2);
    let (p, q) = (m1 / big, m2 / big);
    // the basis is monic, so the leading coefficients are the constants
    let r = common_root(g1.lc().unwrap(), g2.lc().unwrap(), p as i64, q as i64)?;
    let mut g = Poly::constant(r);
    for (b, e) in basis.iter().zip(&prim) {
        g = g.mul_ref(&b.pow((e * big) as u64));
    }
    let (p, q) = (p as u32, q as u32);
    (g.pow(p as u64) == *g1 && g.pow(q as u64) == *g2).then_some((g, p, q))
}

fn pow_rat(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Rational `r` with `r^p = c1` and `r^q = c2` for coprime `p, q`.
fn common_root(c1: &Rat, c2: &Rat, p: i64, q: i64) -> Option<Rat> {
    if c1.is_zero() || c2.is_zero() {
        return None;
    }
    let e = p.extended_gcd(&q);
    debug_assert_eq!(e.gcd, 1);
    let r = pow_rat(c1, e.x) * pow_rat(c2, e.y);
    (pow_rat(&r, p) == *c1 && pow_rat(&r, q) == *c2).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    #[test]
    fn shared_power_detected() {
        let x = p(&[0, 1]);
        let x1 = p(&[1, 1]);
        let g = x.mul_ref(&x1);
        let (h, m1, m2) = exceptional_pair_poly(&g.pow(2), &g.pow(3)).unwrap();
        assert_eq!((h, m1, m2), (g, 2, 3));
        assert!(exceptional_pair_poly(&x, &x1).is_none());
    }

    #[test]
    fn leading_constants_are_matched() {
        let (h, m1, m2) = exceptional_pair_poly(&p(&[0, 0, 4]), &p(&[0, 0, 0, 8])).unwrap();
        assert_eq!((h, m1, m2), (p(&[0, 2]), 2, 3));
        assert!(exceptional_pair_poly(&p(&[0, 0, 2]), &p(&[0, 0, 0, 2])).is_none());
        // -x and x^2 share g = -x
        let (h, m1, m2) = exceptional_pair_poly(&p(&[0, -1]), &p(&[0, 0, 1])).unwrap();
        assert_eq!((h, m1, m2), (p(&[0, -1]), 1, 2));
    }

    #[test]
    fn non_coprime_exponents_give_larger_base() {
        let (h, m1, m2) = exceptional_pair_poly(&p(&[0, 0, 1]), &p(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!((h, m1, m2), (p(&[0, 0, 1]), 1, 2));
    }
}
