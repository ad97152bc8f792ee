use num_traits::Zero;

use crate::exactalg::{Poly, Rat, RatFunc};

use super::{mult_indep_mod_group, GcdLabError, Independence, RationalGroup};

/// One grid cell: `gcd(prod f_i^{m_i} - u, prod g_j^{n_j} - v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdCell {
    pub m: Vec<u32>,
    pub n: Vec<u32>,
    pub u: Rat,
    pub v: Rat,
    pub gcd: Poly<Rat>,
    /// Largest root multiplicity of `gcd`.
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdReport {
    pub cells: Vec<GcdCell>,
    /// Lcm of all observed gcds.
    pub h_emp: Poly<Rat>,
    pub mult_cap: usize,
    /// Every observed multiplicity is within `mult_cap`.
    pub mult_ok: bool,
    /// The last quarter of the grid added no new root to `h_emp`.
    pub stable: bool,
}

/// `prod_i f_i^{e_i}`.
fn power_product(fs: &[RatFunc], e: &[u32]) -> RatFunc {
    fs.iter()
        .zip(e)
        .fold(RatFunc::one(), |acc, (f, &k)| acc.mul(&f.pow(k as i64).expect("nonzero")))
}

fn check_exponents(fs: &[RatFunc], e: &[u32]) -> Result<(), GcdLabError> {
    if fs.len() != e.len() || e.iter().all(|&k| k == 0) {
        return Err(GcdLabError::InvalidArgument(
            "exponent vector must match the functions and be nonzero".into(),
        ));
    }
    Ok(())
}

/// Monic gcd of the numerators of `prod f_i^{m_i} - u` and `prod g_j^{n_j} - v`.
pub fn gcd_pair(
    fs: &[RatFunc],
    gs: &[RatFunc],
    m: &[u32],
    n: &[u32],
    u: &Rat,
    v: &Rat,
) -> Result<Poly<Rat>, GcdLabError> {
    check_exponents(fs, m)?;
    check_exponents(gs, n)?;
    if u.is_zero() || v.is_zero() {
        return Err(GcdLabError::ZeroInput);
    }
    let a = power_product(fs, m).sub(&RatFunc::constant(u.clone()));
    let b = power_product(gs, n).sub(&RatFunc::constant(v.clone()));
    Ok(a.num().gcd(b.num()))
}

/// `2 min(sum deg f_i, sum deg g_j)`: no root of any grid gcd is more
/// repeated than this.
pub fn mult_cap(fs: &[RatFunc], gs: &[RatFunc]) -> usize {
    let s = |v: &[RatFunc]| v.iter().map(RatFunc::degree).sum::<usize>();
    2 * s(fs).min(s(gs))
}

fn max_multiplicity(p: &Poly<Rat>) -> usize {
    if p.is_constant() {
        0
    } else {
        p.max_multiplicity()
    }
}

/// Nonzero vectors in `{0..=w}^len`, ordered by largest entry, then
/// lexicographically, so that later cells are larger.
fn exponent_vectors(len: usize, w: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=w).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&k| k > 0));
    out.sort_by_key(|v| (v.iter().copied().max().unwrap(), v.clone()));
    out
}

/// Lower approximation of the polynomial `h` dividing every
/// `gcd(prod f_i^{m_i} - u, prod g_j^{n_j} - v)`: the lcm of those gcds over
/// exponent vectors with entries `<= window` and the sampled `(u, v)`.
pub fn empirical_h(
    fs: &[RatFunc],
    gs: &[RatFunc],
    group: &RationalGroup,
    window: u32,
    uv: &[(Rat, Rat)],
) -> Result<GcdReport, GcdLabError> {
    let all: Vec<RatFunc> = fs.iter().chain(gs).cloned().collect();
    if let Independence::Dependent { witness, .. } = mult_indep_mod_group(&all, group)? {
        return Err(GcdLabError::DependentInput(witness));
    }
    for (u, v) in uv {
        if !group.contains_div(u)? || !group.contains_div(v)? {
            return Err(GcdLabError::NotInDivisionGroup(format!("({u}, {v})")));
        }
    }
    let cap = mult_cap(fs, gs);
    let ms = exponent_vectors(fs.len(), window);
    let ns = exponent_vectors(gs.len(), window);
    let mut cells = Vec::new();
    let mut h = Poly::one();
    let total = ms.len() * ns.len() * uv.len();
    let tail_start = total - total / 4;
    let mut last_change = 0;
    let mut idx = 0;
    // cells in shell order of max(|m|_inf, |n|_inf)
    let mut grid: Vec<(&Vec<u32>, &Vec<u32>)> = ms.iter().flat_map(|m| ns.iter().map(move |n| (m, n))).collect();
    grid.sort_by_key(|(m, n)| {
        let a = m.iter().copied().max().unwrap();
        let b = n.iter().copied().max().unwrap();
        (a.max(b), (*m).clone(), (*n).clone())
    });
    for (m, n) in grid {
        for (u, v) in uv {
            let g = gcd_pair(fs, gs, m, n, u, v)?;
            let new_h = h.lcm(&g);
            if new_h.radical().ok() != h.radical().ok() {
                last_change = idx;
            }
            h = new_h;
            cells.push(GcdCell {
                m: m.clone(),
                n: n.clone(),
                u: u.clone(),
                v: v.clone(),
                mult: max_multiplicity(&g),
                gcd: g,
            });
            idx += 1;
        }
    }
    let mult_ok = cells.iter().all(|c| c.mult <= cap);
    Ok(GcdReport {
        cells,
        h_emp: h,
        mult_cap: cap,
        mult_ok,
        stable: last_change < tail_start,
    })
}

/// `h^(d^2)`.
pub fn corollary_h(h: &Poly<Rat>, d: u32) -> Poly<Rat> {
    h.pow((d * d) as u64)
}

/// Data for the polynomial version: `F(prod f^m)` against `G(prod g^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub d: u32,
    pub h_emp: Poly<Rat>,
    pub big_h: Poly<Rat>,
    /// `(m, n, gcd)` for every window cell.
    pub cells: Vec<(Vec<u32>, Vec<u32>, Poly<Rat>)>,
    pub all_divide: bool,
}

/// `p(r)` for a polynomial `p` and rational function `r`.
fn compose(p: &Poly<Rat>, r: &RatFunc) -> RatFunc {
    p.coeffs()
        .iter()
        .rev()
        .fold(RatFunc::zero(), |acc, c| acc.mul(r).add(&RatFunc::constant(c.clone())))
}

/// Rational roots of `p`, which must split into linear factors over `Q`.
fn split_roots(p: &Poly<Rat>) -> Result<Vec<Rat>, GcdLabError> {
    let fl = crate::exactalg::factor_over_q(p)?;
    fl.factors
        .iter()
        .map(|(g, _)| {
            if g.degree() == Some(1) {
                Ok(-&g.coeffs()[0] / &g.coeffs()[1])
            } else {
                Err(GcdLabError::InvalidArgument(format!(
                    "{} does not split over Q",
                    p.render("Y")
                )))
            }
        })
        .collect()
}

/// For `F, G` with all roots in the division group, checks that
/// `gcd(F(prod f_i^{m_i}), G(prod g_j^{n_j}))` divides `h_emp^(d^2)`, where
/// `h_emp` is built from the root pairs of `F` and `G` and `d` bounds both
/// degrees.
pub fn corollary_check(
    fs: &[RatFunc],
    gs: &[RatFunc],
    big_f: &Poly<Rat>,
    big_g: &Poly<Rat>,
    group: &RationalGroup,
    window: u32,
) -> Result<CorollaryReport, GcdLabError> {
    let rf = split_roots(big_f)?;
    let rg = split_roots(big_g)?;
    let uv: Vec<(Rat, Rat)> = rf
        .iter()
        .flat_map(|a| rg.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let rep = empirical_h(fs, gs, group, window, &uv)?;
    let d = big_f.degree().unwrap_or(0).max(big_g.degree().unwrap_or(0)).max(1) as u32;
    let big_h = corollary_h(&rep.h_emp, d);
    let mut cells = Vec::new();
    for m in exponent_vectors(fs.len(), window) {
        for n in exponent_vectors(gs.len(), window) {
            let a = compose(big_f, &power_product(fs, &m));
            let b = compose(big_g, &power_product(gs, &n));
            cells.push((m.clone(), n, a.num().gcd(b.num())));
        }
    }
    let all_divide = cells.iter().all(|(_, _, g)| g.divides(&big_h));
    Ok(CorollaryReport { d, h_emp: rep.h_emp, big_h, cells, all_divide })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_i64s(c))
    }

    #[test]
    fn gcd_pairs() {
        let (f, g) = (vec![rf(&[0, 1])], vec![rf(&[1, 1])]);
        let one = int(1);
        assert_eq!(gcd_pair(&f, &g, &[3], &[6], &one, &one).unwrap(), Poly::from_i64s(&[1, 1, 1]));
        assert_eq!(gcd_pair(&f, &g, &[1], &[1], &one, &one).unwrap(), Poly::one());
        assert_eq!(gcd_pair(&f, &g, &[2], &[2], &one, &one).unwrap(), Poly::one());
    }

    #[test]
    fn caps() {
        assert_eq!(mult_cap(&[rf(&[0, 1])], &[rf(&[1, 1])]), 2);
        assert_eq!(mult_cap(&[rf(&[0, 0, 1]), rf(&[3, 1])], &[rf(&[0, 1])]), 2);
        assert_eq!(corollary_h(&Poly::from_i64s(&[0, 1]), 3), Poly::x().pow(9));
    }

    #[test]
    fn empirical_h_for_x_and_x_plus_one() {
        let r = empirical_h(
            &[rf(&[0, 1])],
            &[rf(&[1, 1])],
            &RationalGroup::trivial(),
            12,
            &[(int(1), int(1))],
        )
        .unwrap();
        assert_eq!(r.h_emp, Poly::from_i64s(&[1, 1, 1]));
        assert!(r.stable && r.mult_ok);
        assert!(r.cells.iter().all(|c| c.gcd.divides(&r.h_emp)));
    }

    #[test]
    fn empirical_h_sees_minus_one() {
        // x^m - 1 and (x+2)^n - 1 share x = -1 for even m
        let r = empirical_h(&[rf(&[0, 1])], &[rf(&[2, 1])], &RationalGroup::trivial(), 10, &[(int(1), int(1))]).unwrap();
        assert_eq!(r.h_emp, Poly::from_i64s(&[1, 1]));
    }

    #[test]
    fn dependent_input_refused() {
        let e = empirical_h(&[rf(&[0, 1])], &[rf(&[0, 2])], &RationalGroup::new(vec![int(2)]).unwrap(), 3, &[(int(1), int(1))]);
        assert!(matches!(e, Err(GcdLabError::DependentInput(_))));
    }

    #[test]
    fn polynomial_corollary() {
        let grp = RationalGroup::new(vec![int(2)]).unwrap();
        let big_f = Poly::from_i64s(&[4, -5, 1]);
        let big_g = Poly::from_i64s(&[-1, 1]);
        let r = corollary_check(&[rf(&[0, 1])], &[rf(&[1, 1])], &big_f, &big_g, &grp, 6).unwrap();
        assert_eq!(r.d, 2);
        assert!(r.all_divide);
    }
}
