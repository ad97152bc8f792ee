//! Certified isolation of all complex roots of a squarefree integer
//! polynomial: Aberth iteration in fixed point, then inclusion discs of
//! radius `n |W_i|` built from the Weierstrass corrections `W_i`, evaluated
//! exactly. Pairwise disjoint discs contain exactly one root each.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, Zero};

use super::ball::{isqrt_ceil, ln_big, CBall};
use super::AlgNumError;

pub const DEFAULT_PREC: u32 = 128;
pub const MAX_PREC: u32 = 8192;

type C = (BigInt, BigInt);

fn cmul(a: &C, b: &C, p: u32) -> C {
    (
        (&a.0 * &b.0 - &a.1 * &b.1) >> p,
        (&a.0 * &b.1 + &a.1 * &b.0) >> p,
    )
}

fn cdiv(a: &C, b: &C, p: u32) -> Option<C> {
    let den = &b.0 * &b.0 + &b.1 * &b.1;
    if den.is_zero() {
        return None;
    }
    let re = &a.0 * &b.0 + &a.1 * &b.1;
    let im = &a.1 * &b.0 - &a.0 * &b.1;
    Some(((re << p) / &den, (im << p) / &den))
}

fn l1(a: &C) -> BigInt {
    a.0.abs() + a.1.abs()
}

fn horner(cs: &[BigInt], z: &C, p: u32) -> C {
    let mut acc: C = (cs.last().unwrap().clone(), BigInt::zero());
    for c in cs.iter().rev().skip(1) {
        acc = cmul(&acc, z, p);
        acc.0 += c;
    }
    acc
}

fn initial_points(f: &[BigInt], p: u32) -> Vec<C> {
    let n = f.len() - 1;
    let lc = f[n].abs();
    let c0 = f[0].abs();
    let ln_r = if c0.is_zero() {
        0.0
    } else {
        ((ln_big(&c0) - ln_big(&lc)) / n as f64).clamp(-600.0, 600.0)
    };
    let r = ln_r.exp();
    (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7;
            let to_fx = |x: f64| {
                // p >= 64 always; keep 50 significant bits
                let m = BigInt::from_f64(x * (1u64 << 50) as f64).unwrap_or_default();
                if p >= 50 {
                    m << (p - 50)
                } else {
                    m >> (50 - p)
                }
            };
            (to_fx(r * th.cos()), to_fx(r * th.sin()))
        })
        .collect()
}

fn aberth(f: &[BigInt], zs: &mut [C], p: u32, max_iter: usize) {
    let n = f.len() - 1;
    let cf: Vec<BigInt> = f.iter().map(|c| c << p).collect();
    let df: Vec<BigInt> = (1..=n).map(|k| (&f[k] * BigInt::from(k)) << p).collect();
    let one: C = (BigInt::one() << p, BigInt::zero());
    let nudge = BigInt::one() << (p / 2);
    let small = BigInt::one() << (p / 2);
    let mut best: Option<BigInt> = None;
    let mut stalls = 0;
    for _ in 0..max_iter {
        let mut maxcorr = BigInt::zero();
        for i in 0..n {
            let fz = horner(&cf, &zs[i], p);
            if fz.0.is_zero() && fz.1.is_zero() {
                continue;
            }
            let dz = horner(&df, &zs[i], p);
            let Some(ratio) = cdiv(&fz, &dz, p) else {
                zs[i].0 += &nudge;
                maxcorr = maxcorr.max(nudge.clone());
                continue;
            };
            let mut s: C = (BigInt::zero(), BigInt::zero());
            for j in 0..n {
                if j == i {
                    continue;
                }
                let d = (&zs[i].0 - &zs[j].0, &zs[i].1 - &zs[j].1);
                match cdiv(&one, &d, p) {
                    Some(q) => {
                        s.0 += q.0;
                        s.1 += q.1;
                    }
                    None => {
                        zs[i].1 += &nudge;
                    }
                }
            }
            let rs = cmul(&ratio, &s, p);
            let den = (&one.0 - rs.0, &one.1 - rs.1);
            let w = cdiv(&ratio, &den, p).unwrap_or(ratio);
            zs[i].0 -= &w.0;
            zs[i].1 -= &w.1;
            maxcorr = maxcorr.max(l1(&w));
        }
        if maxcorr <= BigInt::from(256) {
            return;
        }
        if maxcorr < small {
            match &best {
                Some(b) if &maxcorr * 2 > *b => {
                    stalls += 1;
                    if stalls >= 4 {
                        return;
                    }
                }
                _ => {
                    stalls = 0;
                    best = Some(maxcorr);
                }
            }
        }
    }
}

/// Inclusion radii `R_i` (units of `2^-p`) if the discs are pairwise disjoint.
fn certify(f: &[BigInt], zs: &[C], p: u32) -> Option<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = &f[n];
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        // F = 2^(pn) f(z_i), exact
        let (a, b) = &zs[i];
        let mut acc: C = (lc.clone(), BigInt::zero());
        for k in (0..n).rev() {
            let re = &acc.0 * a - &acc.1 * b;
            let im = &acc.0 * b + &acc.1 * a;
            acc = (re + (&f[k] << (p as usize * (n - k))), im);
        }
        let mut den = lc * lc;
        for j in 0..n {
            if j == i {
                continue;
            }
            let dre = a - &zs[j].0;
            let dim = b - &zs[j].1;
            let d2 = &dre * &dre + &dim * &dim;
            if d2.is_zero() {
                return None;
            }
            den *= d2;
        }
        let q = (&acc.0 * &acc.0 + &acc.1 * &acc.1) * BigInt::from(n * n);
        let ratio = (&q + &den - 1u32) / &den;
        radii.push(isqrt_ceil(&ratio) + 1);
    }
    for i in 0..n {
        for j in i + 1..n {
            let dre = &zs[i].0 - &zs[j].0;
            let dim = &zs[i].1 - &zs[j].1;
            let r = &radii[i] + &radii[j];
            if &r * &r >= &dre * &dre + &dim * &dim {
                return None;
            }
        }
    }
    Some(radii)
}

/// Disjoint discs made symmetric under conjugation (real roots get real
/// centers, conjugate pairs mirrored centers), sorted by center.
fn canonicalize(zs: &[C], radii: &[BigInt], p: u32) -> Option<Vec<CBall>> {
    let n = zs.len();
    let balls: Vec<CBall> = zs
        .iter()
        .zip(radii)
        .map(|((re, im), r)| CBall {
            re: re.clone(),
            im: im.clone(),
            rad: r.clone(),
            prec: p,
        })
        .collect();
    let mut out: Vec<Option<CBall>> = vec![None; n];
    for i in 0..n {
        let c = balls[i].conj();
        let real = (0..n).all(|k| k == i || c.disjoint(&balls[k]));
        if real {
            out[i] = Some(CBall {
                im: BigInt::zero(),
                ..balls[i].clone()
            });
        } else if balls[i].im.abs() <= balls[i].rad {
            return None;
        }
    }
    for i in 0..n {
        if out[i].is_some() || !balls[i].im.is_positive() {
            continue;
        }
        let c = balls[i].conj();
        let partners: Vec<usize> = (0..n)
            .filter(|&k| k != i && !c.disjoint(&balls[k]))
            .collect();
        if partners.len() != 1 {
            return None;
        }
        let k = partners[0];
        if out[k].is_some() || !balls[k].im.is_negative() {
            return None;
        }
        out[i] = Some(balls[i].clone());
        out[k] = Some(c);
    }
    let mut out: Vec<CBall> = out.into_iter().collect::<Option<Vec<_>>>()?;
    for i in 0..n {
        for j in i + 1..n {
            if !out[i].disjoint(&out[j]) {
                return None;
            }
        }
    }
    out.sort_by(cmp_centers);
    Some(out)
}

fn cmp_centers(a: &CBall, b: &CBall) -> Ordering {
    a.re.cmp(&b.re).then(a.im.cmp(&b.im))
}

/// All roots of the squarefree integer polynomial `f` (ascending
/// coefficients, degree >= 1), as disjoint certified discs ordered by real
/// part, then imaginary part.
pub fn isolate_roots(f: &[BigInt]) -> Result<Vec<CBall>, AlgNumError> {
    let n = f.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut p = DEFAULT_PREC;
    let mut zs = initial_points(f, p);
    let mut iters = 200 + 20 * n;
    loop {
        aberth(f, &mut zs, p, iters);
        if let Some(balls) = certify(f, &zs, p).and_then(|r| canonicalize(&zs, &r, p)) {
            return Ok(balls);
        }
        if p >= MAX_PREC {
            return Err(AlgNumError::PrecisionExceeded(MAX_PREC));
        }
        for z in zs.iter_mut() {
            z.0 <<= p;
            z.1 <<= p;
        }
        p *= 2;
        iters = 50 + 5 * n;
    }
}

/// Certified discs for the distinct complex roots of a nonzero rational
/// polynomial (its squarefree part is isolated).
pub fn isolate_roots_of(f: &crate::exactalg::Poly<crate::exactalg::Rat>) -> Result<Vec<CBall>, AlgNumError> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let sq = f.radical()?;
    isolate_roots(&sq.to_primitive_int().1)
}

/// Refines previously isolated roots to at least `target` bits, keeping
/// their order: the i-th output disc lies inside the i-th input disc.
pub fn refine_roots(f: &[BigInt], old: &[CBall], target: u32) -> Result<Vec<CBall>, AlgNumError> {
    if old.is_empty() {
        return Ok(Vec::new());
    }
    let n = f.len() - 1;
    let mut p = target.max(old[0].prec);
    let mut zs: Vec<C> = old
        .iter()
        .map(|b| {
            let l = b.lift(p);
            (l.re, l.im)
        })
        .collect();
    loop {
        if p > MAX_PREC {
            return Err(AlgNumError::PrecisionExceeded(MAX_PREC));
        }
        aberth(f, &mut zs, p, 50 + 5 * n);
        if let Some(balls) = certify(f, &zs, p).and_then(|r| canonicalize(&zs, &r, p)) {
            let matched: Option<Vec<CBall>> = old
                .iter()
                .map(|o| balls.iter().find(|b| b.inside(o)).cloned())
                .collect();
            if let Some(m) = matched {
                return Ok(m);
            }
        }
        for z in zs.iter_mut() {
            z.0 <<= p;
            z.1 <<= p;
        }
        p *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quadratic_real_roots() {
        let r = isolate_roots(&z(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|b| b.im.is_zero()));
        assert!((r[0].re_f64() + 2f64.sqrt()).abs() < 1e-30_f64.max(r[0].rad_f64() * 2.0));
        assert!((r[1].re_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn gaussian_pair_is_symmetric() {
        let r = isolate_roots(&z(&[1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].re, r[1].re);
        assert_eq!(r[0].im, -r[1].im.clone());
        assert!(r[0].im.is_negative());
        assert!((r[1].im_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cyclotomic_59_isolates() {
        let f: Vec<BigInt> = vec![BigInt::one(); 59];
        let r = isolate_roots(&f).unwrap();
        assert_eq!(r.len(), 58);
        for b in &r {
            let m = b.re_f64().hypot(b.im_f64());
            assert!((m - 1.0).abs() < 1e-20_f64.max(4.0 * b.rad_f64()) + 1e-15);
        }
    }

    #[test]
    fn wide_coefficient_range() {
        // (x - 1/1000)(x - 1000)(x^2 + 1) scaled to integers
        let f = z(&[1000, -1000001, 2000, -1000001, 1000]);
        let r = isolate_roots(&f).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r[0].re.is_zero() && r[1].re.is_zero());
        assert!((r[2].re_f64() - 0.001).abs() < 1e-12);
        assert!((r[3].re_f64() - 1000.0).abs() < 1e-9);
    }

    #[test]
    fn refinement_keeps_order() {
        let f = z(&[-1, -1, 1]);
        let r = isolate_roots(&f).unwrap();
        let s = refine_roots(&f, &r, 512).unwrap();
        assert_eq!(s.len(), 2);
        for (a, b) in s.iter().zip(&r) {
            assert!(a.inside(b));
            assert!(a.prec >= 512);
        }
    }
}
