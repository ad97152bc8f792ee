//! Integer polynomials as bare coefficient vectors (ascending degree).
//!
//! Used internally for content/primitive-part work: gcd, resultants and
//! factorization all run on primitive integer forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> isize {
    p.len() as isize - 1
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> ZPoly {
    let mut c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|a| a / &c).collect()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut r: ZPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            x + b.get(i).cloned().unwrap_or_default()
        })
        .collect();
    trim(&mut r);
    r
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut r: ZPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            x - b.get(i).cloned().unwrap_or_default()
        })
        .collect();
    trim(&mut r);
    r
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    let mut r: ZPoly = a.iter().map(|x| x * c).collect();
    trim(&mut r);
    r
}



/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = degree(b);
    assert!(db >= 0, "pseudo-division by zero");
    let mut r = a.to_vec();
    if degree(&r) < db {
        return r;
    }
    let lb = b.last().unwrap().clone();
    let db = db as usize;
    let mut e = degree(&r) - db as isize + 1;
    while degree(&r) >= db as isize {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb, e as usize);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Exact quotient `a / b` over the integers, if it exists.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = degree(b);
    assert!(db >= 0, "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    let da = degree(a);
    if da < db {
        return None;
    }
    let db = db as usize;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); (da as usize) - db + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[i + j] -= &c * bc;
        }
        q[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Gcd by the primitive polynomial remainder sequence; primitive with
/// positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// Resultant by the subresultant PRS, convention `lc(a)^deg(b) * prod b(roots of a)`.
pub(crate) fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    if a.is_empty() || b.is_empty() {
        return BigInt::zero();
    }
    let (da, db) = (degree(a), degree(b));
    if da == 0 {
        return num_traits::pow(a[0].clone(), db as usize);
    }
    if db == 0 {
        return num_traits::pow(b[0].clone(), da as usize);
    }
    let ca = content(a);
    let cb = content(b);
    let mut t = num_traits::pow(ca.clone(), db as usize) * num_traits::pow(cb.clone(), da as usize);
    let mut x: ZPoly = a.iter().map(|c| c / &ca).collect();
    let mut y: ZPoly = b.iter().map(|c| c / &cb).collect();
    let mut s = BigInt::one();
    if da < db {
        std::mem::swap(&mut x, &mut y);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let dx = degree(&x);
        let dy = degree(&y);
        let delta = (dx - dy) as usize;
        if dx % 2 == 1 && dy % 2 == 1 {
            s = -s;
        }
        let r = prem(&x, &y);
        if r.is_empty() {
            return BigInt::zero();
        }
        x = y;
        let div = &g * num_traits::pow(h.clone(), delta);
        y = r.iter().map(|c| c / &div).collect();
        g = x.last().unwrap().clone();
        // h <- h^(1 - delta) * g^delta
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if degree(&y) == 0 {
            let dx = degree(&x) as usize;
            let ly = y[0].clone();
            // h <- h^(1 - dx) * lc(y)^dx
            let hn = if dx == 0 {
                h
            } else {
                num_traits::pow(ly, dx) / num_traits::pow(h, dx - 1)
            };
            t *= s * hn;
            return t;
        }
    }
}

/// Symmetric residue of `x` modulo `m` (in `(-m/2, m/2]`).
pub(crate) fn symmetric_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let mut r = x.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}


#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn prem_matches_definition() {
        // (2x^2 + 1) by (3x + 1): 9*(2x^2+1) = (6x - 2)(3x+1) + 11
        assert_eq!(prem(&z(&[1, 0, 2]), &z(&[1, 3])), z(&[11]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[1, 1]), &z(&[-2, 0, 3]));
        assert_eq!(div_exact(&a, &z(&[1, 1])), Some(z(&[-2, 0, 3])));
        assert_eq!(div_exact(&a, &z(&[1, 2])), None);
    }

    #[test]
    fn resultant_small_cases() {
        assert_eq!(resultant(&z(&[-2, 1]), &z(&[-3, 1])), BigInt::from(-1));
        assert_eq!(resultant(&z(&[1, 0, 1]), &z(&[-2, 0, 1])), BigInt::from(9));
        assert_eq!(resultant(&z(&[1, 0, 1]), &z(&[1])), BigInt::from(1));
        // shared root
        assert_eq!(resultant(&z(&[-1, 0, 1]), &z(&[0, -1, 1])), BigInt::zero());
    }
}
