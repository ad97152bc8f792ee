use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::TorsionError;
use crate::algnum::{eval_ball, isqrt_ceil, CBall, NFElem, NumberField, MAX_PREC};
use crate::exactalg::{det_bareiss, irreducible_factors, BiPoly, Poly, Rat, RatFunc};

/// Shears `s = x + lambda u` tried before giving up.
pub const MAX_SHEAR: i64 = 32;

const START_PREC: u32 = 128;
const RESIDUAL_TOL: f64 = 1e-20;

/// One point of `|g1| = |g2| = 1`, with `z = x + i y`.
#[derive(Clone, Debug)]
pub struct LevelPoint {
    pub re: f64,
    pub im: f64,
    pub ball: CBall,
    /// Minimal polynomial of `z` over Q, when the factor containing `z`
    /// was singled out.
    pub minpoly: Option<Poly<Rat>>,
    pub re_minpoly: Poly<Rat>,
    /// Minimal polynomial of `y^2`.
    pub im_sq_minpoly: Poly<Rat>,
    /// Upper bound on `max(||g1(z)| - 1|, ||g2(z)| - 1|)`.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct LevelCurveSolution {
    pub points: Vec<LevelPoint>,
    pub count: usize,
    pub infinite_flag: bool,
    /// `(deg g1 + deg g2)^2`.
    pub bound: usize,
    pub shear: Option<i64>,
}

/// All `z` with `|g1(z)| = |g2(z)| = 1`.
///
/// With `z = x + iy` and `u = y^2` both conditions are polynomial in
/// `(x, u)`. After the shear `s = x + lambda u` every solution has its own
/// `s`, a root of `Res_u`; the other coordinate is read off the first
/// subresultant, exactly, in `Q[s]/(r)` for each irreducible factor `r`.
pub fn level_curve_points(g1: &RatFunc, g2: &RatFunc) -> Result<LevelCurveSolution, TorsionError> {
    if g1.is_constant() || g2.is_constant() {
        return Err(TorsionError::DegenerateInput("constant rational function".into()));
    }
    let bound = (g1.degree() + g2.degree()).pow(2);
    let a = in_u(&modulus_gap(g1));
    let b = in_u(&modulus_gap(g2));
    for lambda in 1..=MAX_SHEAR {
        let (sa, sb) = (shear(&a, lambda), shear(&b, lambda));
        let res = sa.resultant_y(&sb);
        if res.is_zero() {
            return Ok(LevelCurveSolution {
                points: Vec::new(),
                count: 0,
                infinite_flag: true,
                bound,
                shear: Some(lambda),
            });
        }
        if res.is_constant() {
            return Ok(empty(bound, lambda));
        }
        let rad = res.radical()?;
        let Some((s0, s1)) = solve_u(&sa, &sb, &rad) else {
            continue;
        };
        let mut points = Vec::new();
        for r in irreducible_factors(&rad) {
            let k = NumberField::new(&r, 0)?;
            let s = k.gen();
            let u = s.eval_poly(&s0).neg().div(&s.eval_poly(&s1))?;
            let x = s.sub(&u.scale(&Rat::from_integer(lambda.into())));
            for j in (0..k.degree()).filter(|&j| k.is_real_embedding(j)) {
                points.extend(points_at(&x, &u, j, g1, g2)?);
            }
        }
        points.sort_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
        let count = points.len();
        assert!(count <= bound, "level-curve count {count} exceeds {bound}");
        return Ok(LevelCurveSolution {
            points,
            count,
            infinite_flag: false,
            bound,
            shear: Some(lambda),
        });
    }
    Err(TorsionError::NoSeparatingShear(MAX_SHEAR))
}

fn empty(bound: usize, lambda: i64) -> LevelCurveSolution {
    LevelCurveSolution {
        points: Vec::new(),
        count: 0,
        infinite_flag: false,
        bound,
        shear: Some(lambda),
    }
}

/// Real and imaginary parts of `p(x + iy)` as polynomials in `(x, y)`.
fn complex_parts(p: &Poly<Rat>) -> (BiPoly, BiPoly) {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut binom = BigInt::one();
        for j in 0..=k {
            let t = c * Rat::from_integer(binom.clone());
            let t = if (j / 2) % 2 == 1 { -t } else { t };
            if j % 2 == 0 {
                re.push((k - j, j, t));
            } else {
                im.push((k - j, j, t));
            }
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    (BiPoly::from_terms(&re), BiPoly::from_terms(&im))
}

fn abs_sq(p: &Poly<Rat>) -> BiPoly {
    let (re, im) = complex_parts(p);
    re.mul(&re).add(&im.mul(&im))
}

/// `|num|^2 - |den|^2` in `(x, y)`.
fn modulus_gap(g: &RatFunc) -> BiPoly {
    abs_sq(g.num()).sub(&abs_sq(g.den()))
}

/// Rewrites a polynomial even in `y` in terms of `u = y^2`.
fn in_u(p: &BiPoly) -> BiPoly {
    let terms: Vec<(usize, usize, Rat)> = p
        .terms()
        .into_iter()
        .map(|(i, j, c)| {
            assert!(j % 2 == 0, "modulus polynomials are even in y");
            (i, j / 2, c)
        })
        .collect();
    BiPoly::from_terms(&terms)
}

/// `p(s - lambda u, u)`.
fn shear(p: &BiPoly, lambda: i64) -> BiPoly {
    let lin = BiPoly::from_terms(&[(1, 0, Rat::one()), (0, 1, Rat::from_integer((-lambda).into()))]);
    let mut pows = vec![BiPoly::from_terms(&[(0, 0, Rat::one())])];
    let mut out = BiPoly::zero();
    for (i, j, c) in p.terms() {
        while pows.len() <= i {
            let next = pows.last().unwrap().mul(&lin);
            pows.push(next);
        }
        out = out.add(&pows[i].mul(&BiPoly::from_terms(&[(0, j, c)])));
    }
    out
}

/// `(c0, c1)` in `Q[s]` with the common root in `u` equal to `-c0/c1`
/// at every root of `rad`, or `None` when the shear does not separate.
fn solve_u(a: &BiPoly, b: &BiPoly, rad: &Poly<Rat>) -> Option<(Poly<Rat>, Poly<Rat>)> {
    let (ac, bc) = (a.y_coeffs(), b.y_coeffs());
    let coprime = |p: &Poly<Rat>| rad.gcd(p).is_constant();
    if !coprime(ac.last()?) || !coprime(bc.last()?) {
        return None;
    }
    let (m, n) = (ac.len() - 1, bc.len() - 1);
    let (c0, c1) = if m == 1 {
        (ac[0].clone(), ac[1].clone())
    } else if n == 1 {
        (bc[0].clone(), bc[1].clone())
    } else if m == 0 || n == 0 {
        return None;
    } else {
        let da = a.deg_x().max(0) as usize;
        let db = b.deg_x().max(0) as usize;
        let deg = (n - 1) * da + (m - 1) * db;
        let mut p0 = Vec::with_capacity(deg + 1);
        let mut p1 = Vec::with_capacity(deg + 1);
        for s in 0..=deg as i64 {
            let s = Rat::from_integer(s.into());
            let av: Vec<Rat> = ac.iter().map(|q| q.eval(&s)).collect();
            let bv: Vec<Rat> = bc.iter().map(|q| q.eval(&s)).collect();
            let (v0, v1) = first_subresultant(&av, &bv);
            p0.push((s.clone(), v0));
            p1.push((s, v1));
        }
        (Poly::interpolate(&p0), Poly::interpolate(&p1))
    };
    coprime(&c1).then_some((c0, c1))
}

/// Coefficients `(S_0, S_1)` of the first subresultant `S_1 u + S_0` of
/// two polynomials with ascending coefficients `a` (degree m) and `b`
/// (degree n), both at least 2.
pub(crate) fn first_subresultant(a: &[Rat], b: &[Rat]) -> (Rat, Rat) {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let width = m + n - 1;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m + n - 2);
    let push = |rows: &mut Vec<Vec<Rat>>, p: &[Rat], shift: usize| {
        let mut row = vec![Rat::zero(); width];
        for (i, c) in p.iter().enumerate() {
            // column c holds the coefficient of u^(width - 1 - c)
            row[width - 1 - (i + shift)] = c.clone();
        }
        rows.push(row);
    };
    for k in 0..n - 1 {
        push(&mut rows, a, k);
    }
    for k in 0..m - 1 {
        push(&mut rows, b, k);
    }
    let minor = |pow: usize| {
        let col = width - 1 - pow;
        let mat: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| {
                let mut v = r[..width - 2].to_vec();
                v.push(r[col].clone());
                v
            })
            .collect();
        det_bareiss(mat)
    };
    (minor(0), minor(1))
}

/// Sign of a real algebraic number at a real embedding.
fn real_sign(e: &NFElem, j: usize) -> Result<i8, TorsionError> {
    if e.is_zero() {
        return Ok(0);
    }
    let mut p = START_PREC;
    loop {
        let (lo, hi) = e.ball(j, p)?.re_interval();
        if lo.is_positive() {
            return Ok(1);
        }
        if hi.is_negative() {
            return Ok(-1);
        }
        if p >= MAX_PREC {
            return Err(crate::algnum::AlgNumError::PrecisionExceeded(MAX_PREC).into());
        }
        p *= 2;
    }
}

/// Enclosure of `sqrt(u)` from a real enclosure of `u > 0`.
fn sqrt_ball(u: &CBall) -> (BigInt, BigInt) {
    let p = u.prec;
    let lo = (&u.re - &u.rad - u.im.abs()).max(BigInt::zero());
    let hi = &u.re + &u.rad + u.im.abs();
    let ylo = (lo << p).sqrt();
    let yhi = isqrt_ceil(&(hi << p));
    let center = (&ylo + &yhi) >> 1u32;
    let rad = (&yhi - &ylo) / 2 + 1;
    (center, rad)
}

fn residual(g: &RatFunc, z: &CBall) -> Option<f64> {
    let p = z.prec;
    let (nlo, nhi) = eval_ball(g.num(), z, p).abs_bounds();
    let (dlo, dhi) = eval_ball(g.den(), z, p).abs_bounds();
    if dlo.is_zero() {
        return None;
    }
    let over = crate::algnum::ratio_f64(&(&nhi - &dlo), &dlo);
    let under = crate::algnum::ratio_f64(&(&dhi - &nlo), &dhi);
    Some(over.max(under).max(0.0))
}

fn points_at(x: &NFElem, u: &NFElem, j: usize, g1: &RatFunc, g2: &RatFunc) -> Result<Vec<LevelPoint>, TorsionError> {
    let sign = real_sign(u, j)?;
    if sign < 0 {
        return Ok(Vec::new());
    }
    let re_minpoly = x.min_poly();
    let im_sq_minpoly = u.min_poly();
    let mut prec = START_PREC;
    let mut balls = loop {
        let xb = x.ball(j, prec)?;
        let xrad = &xb.rad + xb.im.abs();
        let zs: Vec<CBall> = if sign == 0 {
            vec![CBall { re: xb.re.clone(), im: BigInt::zero(), rad: xrad, prec }]
        } else {
            let (yc, yr) = sqrt_ball(&u.ball(j, prec)?);
            vec![
                CBall { re: xb.re.clone(), im: -&yc, rad: &xrad + &yr, prec },
                CBall { re: xb.re.clone(), im: yc, rad: xrad + yr, prec },
            ]
        };
        let res: Option<Vec<f64>> = zs
            .iter()
            .map(|z| Some(residual(g1, z)?.max(residual(g2, z)?)))
            .collect();
        match res {
            Some(r) if r.iter().all(|v| *v < RESIDUAL_TOL) => break zs.into_iter().zip(r).collect::<Vec<_>>(),
            _ if prec >= MAX_PREC => {
                return Err(crate::algnum::AlgNumError::PrecisionExceeded(MAX_PREC).into())
            }
            _ => prec *= 2,
        }
    };
    let cands = if sign == 0 {
        vec![re_minpoly.clone()]
    } else {
        z_candidates(x, u)
    };
    Ok(balls
        .drain(..)
        .map(|(ball, residual)| LevelPoint {
            re: ball.re_f64(),
            im: ball.im_f64(),
            minpoly: pick_factor(&cands, &ball),
            re_minpoly: re_minpoly.clone(),
            im_sq_minpoly: im_sq_minpoly.clone(),
            residual,
            ball,
        })
        .collect())
}

/// Irreducible factors of `prod (Z^2 - 2 X Z + X^2 + U)` over the
/// conjugates of the defining root: one of them vanishes at `X + i sqrt(U)`.
fn z_candidates(x: &NFElem, u: &NFElem) -> Vec<Poly<Rat>> {
    let k = x.field();
    let mut terms = vec![(0, 2, Rat::one())];
    let two_x = x.rep().scale(&Rat::from_integer((-2).into()));
    for (i, c) in two_x.coeffs().iter().enumerate() {
        terms.push((i, 1, c.clone()));
    }
    let c0 = x.mul(x).add(u);
    for (i, c) in c0.rep().coeffs().iter().enumerate() {
        terms.push((i, 0, c.clone()));
    }
    let n = BiPoly::from_terms(&terms).norm_over(&k.minpoly().monic());
    irreducible_factors(&n)
}

/// The unique candidate whose value at `ball` may vanish.
fn pick_factor(cands: &[Poly<Rat>], ball: &CBall) -> Option<Poly<Rat>> {
    let mut hit = cands
        .iter()
        .filter(|f| eval_ball(f, ball, ball.prec).contains_zero());
    let first = hit.next()?;
    hit.next().is_none().then(|| first.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_i64s(n), Poly::from_i64s(d)).unwrap()
    }

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_i64s(c))
    }

    #[test]
    fn subresultant_of_two_quadratics() {
        // (u-1)(u-2) and (u-1)(u-3): S_1 = -(u - 1)
        let a = [rat(2, 1), rat(-3, 1), rat(1, 1)];
        let b = [rat(3, 1), rat(-4, 1), rat(1, 1)];
        assert_eq!(first_subresultant(&a, &b), (rat(1, 1), rat(-1, 1)));
    }

    #[test]
    fn complex_parts_of_a_square() {
        // (x + iy)^2 = x^2 - y^2 + 2ixy
        let (re, im) = complex_parts(&Poly::from_i64s(&[0, 0, 1]));
        assert_eq!(re, BiPoly::from_terms(&[(2, 0, rat(1, 1)), (0, 2, rat(-1, 1))]));
        assert_eq!(im, BiPoly::from_terms(&[(1, 1, rat(2, 1))]));
    }

    #[test]
    fn two_unit_circles() {
        let sol = level_curve_points(&poly(&[0, 1]), &poly(&[-1, 1])).unwrap();
        assert!(!sol.infinite_flag);
        assert_eq!(sol.count, 2);
        assert_eq!(sol.bound, 4);
        for p in &sol.points {
            assert!((p.re - 0.5).abs() < 1e-15);
            assert!((p.im.abs() - 3f64.sqrt() / 2.0).abs() < 1e-15);
            assert!(p.residual < 1e-20);
            assert_eq!(p.minpoly, Some(Poly::from_i64s(&[1, -1, 1])));
            assert_eq!(p.re_minpoly, Poly::from_rat(rat(-1, 2)).add_ref(&Poly::x()));
        }
        assert!(sol.points[0].im < 0.0 && sol.points[1].im > 0.0);
    }

    #[test]
    fn identical_circles_are_infinite() {
        let sol = level_curve_points(&poly(&[0, 1]), &poly(&[0, 1])).unwrap();
        assert!(sol.infinite_flag);
    }

    #[test]
    fn line_meets_circle() {
        let sol = level_curve_points(&rf(&[1, 1], &[0, 1]), &rf(&[1, 2], &[0, 1])).unwrap();
        assert_eq!(sol.count, 2);
        let want = 1.0 / (2.0 * 3f64.sqrt());
        for p in &sol.points {
            assert!((p.re + 0.5).abs() < 1e-15);
            assert!((p.im.abs() - want).abs() < 1e-15);
            // z^2 + z + 1/3 = 0
            assert_eq!(p.minpoly, Some(Poly::from_coeffs(vec![rat(1, 3), rat(1, 1), rat(1, 1)])));
            assert_eq!(p.im_sq_minpoly, Poly::from_coeffs(vec![rat(-1, 12), rat(1, 1)]));
        }
    }

    #[test]
    fn disjoint_circles() {
        // |z| = 1 and |z - 3| = 1 never meet
        let sol = level_curve_points(&poly(&[0, 1]), &poly(&[-3, 1])).unwrap();
        assert_eq!(sol.count, 0);
        assert!(!sol.infinite_flag);
    }

    #[test]
    fn tangent_circles() {
        // |z| = 1 and |z - 2| = 1 touch at z = 1
        let sol = level_curve_points(&poly(&[0, 1]), &poly(&[-2, 1])).unwrap();
        assert_eq!(sol.count, 1);
        assert_eq!(sol.points[0].minpoly, Some(Poly::from_i64s(&[-1, 1])));
    }

    #[test]
    fn constant_input_rejected() {
        assert!(matches!(
            level_curve_points(&poly(&[3]), &poly(&[0, 1])),
            Err(TorsionError::DegenerateInput(_))
        ));
    }
}
