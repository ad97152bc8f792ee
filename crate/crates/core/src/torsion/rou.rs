use num_integer::Integer;
use num_traits::Zero;

use super::TorsionError;
use crate::algnum::NFElem;
use crate::exactalg::modp::{is_zero_poly, Fp};
use crate::exactalg::{
    cyclotomic, gcd_u64, lcm_u64, orders_with_phi_at_most, BiPoly, Poly, Rat,
};

/// Order bound used by the CLI when none is given.
pub const DEFAULT_MAX_ORDER: u64 = 60;

/// `(n, m)` for every `n` with `Phi_n^m` exactly dividing `p`, `m >= 1`.
///
/// `Phi_n` is irreducible over Q, so a partial common factor cannot occur
/// and one exact division per candidate order decides it.
pub fn rou_roots(p: &Poly<Rat>) -> Vec<(u64, usize)> {
    rou_roots_upto(p, u64::MAX)
}

pub(crate) fn rou_roots_upto(p: &Poly<Rat>, max_order: u64) -> Vec<(u64, usize)> {
    assert!(!p.is_zero(), "rou_roots of the zero polynomial");
    let d = p.degree().unwrap() as u64;
    if d == 0 {
        return Vec::new();
    }
    // Phi_n is monic over Z, so Phi_n | p forces Phi_n | p mod any prime
    let fp = Fp::new(2_147_483_647);
    let pz = fp.from_z(&p.to_primitive_int().1);
    orders_with_phi_at_most(d)
        .into_iter()
        .take_while(|&n| n <= max_order)
        .filter_map(|n| {
            let phi = cyclotomic(n);
            if !is_zero_poly(&fp.rem(&pz, &fp.from_z(&phi.to_primitive_int().1))) {
                return None;
            }
            let m = p.multiplicity_of(&phi);
            (m > 0).then_some((n, m))
        })
        .collect()
}

/// Coefficient-wise complex conjugate under the distinguished embedding of
/// the coefficient field.
pub fn conjugate_poly(f: &Poly<NFElem>) -> Result<Poly<NFElem>, TorsionError> {
    let cs = f
        .coeffs()
        .iter()
        .map(|c| c.conj())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(cs))
}

/// The pair `(zeta_a^r, zeta_b^s)` with `zeta_n = exp(2 pi i / n)`,
/// `gcd(r, a) = gcd(s, b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RouPair {
    pub a: u64,
    pub r: u64,
    pub b: u64,
    pub s: u64,
}

#[derive(Clone, Debug)]
pub struct TorsionSearch {
    pub pairs: Vec<RouPair>,
    pub count: usize,
    pub max_order: u64,
    /// `44 d^2` with `d` the larger partial degree.
    pub bound: u64,
    pub within_bound: bool,
}

/// All zeros `(zeta, xi)` of `P` with both coordinates roots of unity of
/// order at most `max_order`.
///
/// Rejects `P` with a factor `X^r Y^s - u` or `X^r - u Y^s`, `u` a root of
/// unity; such curves carry infinitely many torsion points.
pub fn bivariate_rou_solutions(p: &BiPoly, max_order: u64) -> Result<TorsionSearch, TorsionError> {
    if p.is_zero() {
        return Err(TorsionError::DegenerateInput("zero polynomial".into()));
    }
    if max_order == 0 {
        return Err(TorsionError::DegenerateInput("max_order must be positive".into()));
    }
    screen_monomial_factors(p)?;
    let terms = p.terms();
    let mut pairs = Vec::new();
    for a in 1..=max_order {
        let na = p.norm_over(&cyclotomic(a));
        if na.is_zero() {
            // P(zeta_a, Y) = 0 identically means X - zeta_a divides P,
            // which the screen has ruled out
            unreachable!("screen missed a factor X - u");
        }
        if na.is_constant() {
            continue;
        }
        for (b, _) in rou_roots_upto(&na, max_order) {
            let l = lcm_u64(a, b);
            let phi_l = cyclotomic(l);
            for r in units(a) {
                for s in units(b) {
                    let ex = (r * (l / a), s * (l / b));
                    if vanishes(&terms, ex, l, &phi_l) {
                        pairs.push(RouPair { a, r, b, s });
                    }
                }
            }
        }
    }
    pairs.sort_unstable();
    let d = p.deg_x().max(p.deg_y()).max(0) as u64;
    let bound = 44 * d * d;
    let count = pairs.len();
    Ok(TorsionSearch {
        pairs,
        count,
        max_order,
        bound,
        within_bound: count as u64 <= bound,
    })
}

fn units(n: u64) -> impl Iterator<Item = u64> {
    (0..n).filter(move |&k| gcd_u64(k, n) == 1)
}

/// Whether `sum c_ij t^(i ex.0 + j ex.1)` vanishes in `Q[t]/Phi_l`.
fn vanishes(terms: &[(usize, usize, Rat)], ex: (u64, u64), l: u64, phi_l: &Poly<Rat>) -> bool {
    let mut acc = vec![Rat::zero(); l as usize];
    for (i, j, c) in terms {
        let e = ((*i as u64 % l) * ex.0 + (*j as u64 % l) * ex.1) % l;
        acc[e as usize] += c;
    }
    Poly::from_coeffs(acc).rem(phi_l).is_zero()
}

/// Checks every primitive direction `(r, s)` joining two monomials of `P`.
/// On the curve `X^r Y^s = u` (or `X^r = u Y^s`) monomials collapse along
/// lines of that direction; `P` vanishes there iff `u` is a common root of
/// the per-line polynomials.
fn screen_monomial_factors(p: &BiPoly) -> Result<(), TorsionError> {
    let terms = p.terms();
    let mut dirs: Vec<(i64, i64)> = Vec::new();
    for (k, (i1, j1, _)) in terms.iter().enumerate() {
        for (i2, j2, _) in &terms[k + 1..] {
            let (mut di, mut dj) = (*i2 as i64 - *i1 as i64, *j2 as i64 - *j1 as i64);
            let g = di.gcd(&dj);
            di /= g;
            dj /= g;
            if di < 0 || (di == 0 && dj < 0) {
                di = -di;
                dj = -dj;
            }
            dirs.push((di, dj));
        }
    }
    dirs.sort_unstable();
    dirs.dedup();
    for (r, s) in dirs {
        let mut lines: Vec<(i64, Vec<(i64, Rat)>)> = Vec::new();
        for (i, j, c) in &terms {
            let (i, j) = (*i as i64, *j as i64);
            let ell = i * s - j * r;
            // position along the line
            let k = if r != 0 { Integer::div_floor(&i, &r) } else { Integer::div_floor(&j, &s) };
            match lines.iter_mut().find(|(l, _)| *l == ell) {
                Some((_, v)) => v.push((k, c.clone())),
                None => lines.push((ell, vec![(k, c.clone())])),
            }
        }
        let mut g = Poly::zero();
        for (_, v) in &lines {
            let k0 = v.iter().map(|(k, _)| *k).min().unwrap();
            let mut cs = Vec::new();
            for (k, c) in v {
                let e = (k - k0) as usize;
                if cs.len() <= e {
                    cs.resize(e + 1, Rat::zero());
                }
                cs[e] += c;
            }
            g = g.gcd(&Poly::from_coeffs(cs));
            if g.is_constant() {
                break;
            }
        }
        if g.is_constant() {
            continue;
        }
        if let Some(&(n, _)) = rou_roots(&g).first() {
            return Err(TorsionError::DegenerateFactor {
                form: render_form(r, s, n),
            });
        }
    }
    Ok(())
}

fn render_form(r: i64, s: i64, order: u64) -> String {
    let mono = |v: &str, e: i64| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let form = if s > 0 {
        format!("{}{} - u", mono("X", r), mono("Y", s))
    } else if r == 0 {
        format!("1 - u{}", mono("Y", -s))
    } else if s == 0 {
        format!("{} - u", mono("X", r))
    } else {
        format!("{} - u{}", mono("X", r), mono("Y", -s))
    };
    format!("{form} with u a root of unity of order {order}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;
    use crate::exactalg::{int, poly_from_roots};

    fn bp(t: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(&t.iter().map(|(i, j, c)| (*i, *j, int(*c))).collect::<Vec<_>>())
    }

    #[test]
    fn cyclotomic_roots() {
        let p = Poly::from_i64s(&[1, 1, 1]).mul_ref(&Poly::from_i64s(&[-2, 1]));
        assert_eq!(rou_roots(&p), vec![(3, 1)]);
        assert_eq!(rou_roots(&Poly::from_i64s(&[-1, 0, 0, 0, 1])), vec![(1, 1), (2, 1), (4, 1)]);
        assert!(rou_roots(&Poly::from_i64s(&[-1, -1, 1])).is_empty());
        let sq = Poly::from_i64s(&[1, 1]).pow(3).mul_ref(&poly_from_roots(&[int(1)]));
        assert_eq!(rou_roots(&sq), vec![(1, 1), (2, 3)]);
    }

    #[test]
    fn conjugates() {
        let qi = NumberField::new(&Poly::from_i64s(&[1, 0, 1]), 1).unwrap();
        let f = Poly::from_coeffs(vec![qi.one(), qi.gen()]);
        let g = conjugate_poly(&f).unwrap();
        assert_eq!(g, Poly::from_coeffs(vec![qi.one(), qi.gen().neg()]));

        let q = NumberField::rationals();
        let f = Poly::from_coeffs(vec![q.from_int(3), q.from_int(-1)]);
        assert_eq!(conjugate_poly(&f).unwrap(), f);

        let k = NumberField::cyclotomic(3);
        let z = k.gen();
        let z2 = z.mul(&z);
        let f = Poly::from_coeffs(vec![z2.clone(), k.zero(), z.clone()]);
        assert_eq!(conjugate_poly(&f).unwrap(), Poly::from_coeffs(vec![z, k.zero(), z2]));
    }

    #[test]
    fn conjugation_unavailable() {
        let k = NumberField::new(&Poly::from_i64s(&[-2, 0, 0, 0, 1]), 0).unwrap();
        let j = (0..4).find(|&j| !k.is_real_embedding(j)).unwrap();
        let k = k.with_root_index(j).unwrap();
        let f = Poly::from_coeffs(vec![k.gen()]);
        assert!(conjugate_poly(&f).is_err());
    }

    #[test]
    fn line_through_sixth_roots() {
        let s = bivariate_rou_solutions(&bp(&[(1, 0, 1), (0, 1, 1), (0, 0, -1)]), 60).unwrap();
        assert_eq!(
            s.pairs,
            vec![RouPair { a: 6, r: 1, b: 6, s: 5 }, RouPair { a: 6, r: 5, b: 6, s: 1 }]
        );
        assert_eq!(s.bound, 44);
    }

    #[test]
    fn line_through_cube_roots() {
        let s = bivariate_rou_solutions(&bp(&[(1, 0, 1), (0, 1, 1), (0, 0, 1)]), 60).unwrap();
        assert_eq!(
            s.pairs,
            vec![RouPair { a: 3, r: 1, b: 3, s: 2 }, RouPair { a: 3, r: 2, b: 3, s: 1 }]
        );
        assert!(s.within_bound);
    }

    #[test]
    fn degenerate_forms_rejected() {
        for p in [
            bp(&[(1, 1, 1), (0, 0, -1)]),
            bp(&[(2, 0, 1), (0, 3, 1)]),
            bp(&[(1, 0, 1), (0, 0, 1)]).mul(&bp(&[(1, 0, 1), (0, 1, 1), (0, 0, 5)])),
            bp(&[(2, 2, 1), (0, 0, -1)]),
        ] {
            assert!(
                matches!(bivariate_rou_solutions(&p, 12), Err(TorsionError::DegenerateFactor { .. })),
                "{p:?}"
            );
        }
        // X Y - 2 is a monomial difference but 2 is not a root of unity
        assert!(bivariate_rou_solutions(&bp(&[(1, 1, 1), (0, 0, -2)]), 12).is_ok());
    }

    #[test]
    fn form_rendering() {
        assert_eq!(render_form(1, 1, 1), "XY - u with u a root of unity of order 1");
        assert_eq!(render_form(2, -3, 2), "X^2 - uY^3 with u a root of unity of order 2");
    }
}
