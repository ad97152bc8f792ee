//! The polynomial ABC (Mason-Stothers) inequality for vanishing sums and
//! its consequences for `F_n`: a lower bound on the number of distinct
//! roots and a check that `F_n` does not vanish identically.

use thiserror::Error;

use crate::exactalg::{Poly, Rat};
use crate::lrs::ParametricFamily;

/// Largest number of summands for which all proper subsums are checked.
pub const MAX_SUBSUM_TERMS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbcError {
    #[error("need at least 3 polynomials, got {0}")]
    TooFewTerms(usize),
    #[error("the polynomials do not sum to zero")]
    NotASum,
    #[error("the polynomials share the factor {0}")]
    CommonZero(String),
    #[error("the subsum over indices {0:?} vanishes")]
    VanishingSubsum(Vec<usize>),
    #[error("a_i f_i share the factor {0}")]
    HypothesisFailure(String),
    #[error("F_{0} vanishes identically")]
    ZeroPolynomial(u64),
    #[error("family must be polynomial")]
    NotPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcReport {
    pub m: usize,
    pub max_deg: usize,
    pub rad_deg: usize,
    /// `(m-1)(m-2)/2 * max(rad_deg - 1, 0)`.
    pub bound: Rat,
    pub holds: bool,
    /// All `2^m - 2` proper nonempty subsums were checked nonzero.
    pub subsum_checked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctRootBound {
    pub n: u64,
    /// `2/(k(k-1)) max_i(deg a_i + n deg f_i) - 2dk`.
    pub bound: Rat,
    /// Number of distinct complex roots of `F_n`.
    pub actual: usize,
    pub holds: bool,
}

fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Checks `max deg g_i <= (m-1)(m-2)/2 * max(deg rad(prod g_i) - 1, 0)` for
/// `g_1 + ... + g_m = 0` with no common factor and no vanishing proper subsum.
pub fn verify_mason_stothers(gs: &[Poly<Rat>]) -> Result<AbcReport, AbcError> {
    let m = gs.len();
    if m < 3 {
        return Err(AbcError::TooFewTerms(m));
    }
    if !gs.iter().fold(Poly::zero(), |s, g| s.add_ref(g)).is_zero() {
        return Err(AbcError::NotASum);
    }
    let subsum_checked = m <= MAX_SUBSUM_TERMS;
    if subsum_checked {
        if let Some(w) = vanishing_subsum(gs) {
            return Err(AbcError::VanishingSubsum(w));
        }
    } else if let Some(i) = gs.iter().position(Poly::is_zero) {
        return Err(AbcError::VanishingSubsum(vec![i]));
    }
    let g = gs.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    if !g.is_constant() {
        return Err(AbcError::CommonZero(g.render("x")));
    }
    let prod = gs.iter().fold(Poly::one(), |acc, p| acc.mul_ref(p));
    let rad_deg = prod.radical().expect("nonzero product").degree().unwrap();
    let max_deg = gs.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let pairs = ((m - 1) * (m - 2) / 2) as i64;
    let bound = rat_int(pairs * (rad_deg as i64 - 1).max(0));
    Ok(AbcReport {
        m,
        max_deg,
        rad_deg,
        holds: rat_int(max_deg as i64) <= bound,
        bound,
        subsum_checked,
    })
}

/// Smallest-mask proper nonempty subset with zero sum.
fn vanishing_subsum(gs: &[Poly<Rat>]) -> Option<Vec<usize>> {
    let m = gs.len();
    let full = (1u32 << m) - 1;
    (1..full).find_map(|mask| {
        let s = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Poly::zero(), |acc, i| acc.add_ref(&gs[i]));
        s.is_zero()
            .then(|| (0..m).filter(|i| mask >> i & 1 == 1).collect())
    })
}

fn poly_parts(fam: &ParametricFamily) -> Result<(Vec<Poly<Rat>>, Vec<Poly<Rat>>), AbcError> {
    let get = |v: &[crate::exactalg::RatFunc]| {
        v.iter()
            .map(|r| r.as_poly().cloned().ok_or(AbcError::NotPolynomial))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok((get(fam.a())?, get(fam.f())?))
}

/// Compares the number of distinct roots of `F_n` with the lower bound
/// derived from the ABC inequality. Requires `gcd(a_1 f_1, ..., a_k f_k) = 1`.
pub fn distinct_root_lower_bound(fam: &ParametricFamily, n: u64) -> Result<DistinctRootBound, AbcError> {
    let (a, f) = poly_parts(fam)?;
    let g = a
        .iter()
        .zip(&f)
        .fold(Poly::zero(), |acc, (ai, fi)| acc.gcd(&ai.mul_ref(fi)));
    if !g.is_constant() {
        return Err(AbcError::HypothesisFailure(g.render("x")));
    }
    let fnp = fam.expand(n).num().clone();
    if fnp.is_zero() {
        return Err(AbcError::ZeroPolynomial(n));
    }
    let actual = fnp.radical().expect("nonzero").degree().unwrap();
    let k = fam.k() as i64;
    let top = a
        .iter()
        .zip(&f)
        .map(|(ai, fi)| ai.degree().unwrap() as i64 + n as i64 * fi.degree().unwrap() as i64)
        .max()
        .unwrap();
    let bound = Rat::new(2.into(), (k * (k - 1)).into()) * rat_int(top) - rat_int(2 * fam.d() as i64 * k);
    Ok(DistinctRootBound {
        n,
        holds: rat_int(actual as i64) >= bound,
        bound,
        actual,
    })
}

/// All `1 <= n <= bound` with `F_n` identically zero.
pub fn nonvanishing_window(fam: &ParametricFamily, bound: u64) -> Vec<u64> {
    fam.expand_range(bound as usize + 1)
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, t)| t.is_zero())
        .map(|(n, _)| n as u64)
        .collect()
}

/// Whether `rad_deg <= deg` with equality exactly for squarefree inputs.
pub fn radical_consistent(p: &Poly<Rat>) -> bool {
    let r = p.radical().expect("nonzero").degree();
    let sq = p.gcd(&p.derivative()).is_constant();
    r <= p.degree() && ((r == p.degree()) == sq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    fn benchmark() -> ParametricFamily {
        ParametricFamily::from_polys(&[p(&[1]), p(&[-1])], &[p(&[0, 1]), p(&[1, 1])]).unwrap()
    }

    #[test]
    fn abc_examples() {
        let r = verify_mason_stothers(&[p(&[0, 0, 1]), p(&[1, 0, -1]), p(&[-1])]).unwrap();
        assert_eq!((r.max_deg, r.rad_deg, r.bound.clone()), (2, 3, rat_int(2)));
        assert!(r.holds && r.subsum_checked);
        assert_eq!(
            verify_mason_stothers(&[p(&[0, 1]), p(&[0, -1]), p(&[1]), p(&[-1])]),
            Err(AbcError::VanishingSubsum(vec![0, 1]))
        );
        let r = verify_mason_stothers(&[p(&[1, 2, 1]), p(&[0, -2, -1]), p(&[-1])]).unwrap();
        assert_eq!((r.max_deg, r.rad_deg), (2, 3));
        assert!(r.holds);
        assert_eq!(verify_mason_stothers(&[p(&[1]), p(&[1]), p(&[1])]), Err(AbcError::NotASum));
        assert!(matches!(
            verify_mason_stothers(&[p(&[0, 1]), p(&[0, 1]), p(&[0, -2])]),
            Err(AbcError::CommonZero(_))
        ));
    }

    #[test]
    fn distinct_roots_of_benchmark() {
        let r = distinct_root_lower_bound(&benchmark(), 10).unwrap();
        assert_eq!((r.bound.clone(), r.actual, r.holds), (rat_int(6), 9, true));
        let r = distinct_root_lower_bound(&benchmark(), 50).unwrap();
        assert_eq!((r.bound.clone(), r.actual), (rat_int(46), 49));
        let bad = ParametricFamily::from_polys(&[p(&[0, 1]), p(&[0, 1])], &[p(&[0, 1]), p(&[1, 1])]).unwrap();
        assert!(matches!(distinct_root_lower_bound(&bad, 3), Err(AbcError::HypothesisFailure(_))));
    }

    #[test]
    fn window_is_empty_for_benchmark() {
        assert!(nonvanishing_window(&benchmark(), 30).is_empty());
    }

    #[test]
    fn radical_degree_checks() {
        assert!(radical_consistent(&p(&[0, 0, 1, 1])));
        assert!(radical_consistent(&p(&[-1, 0, 1])));
    }
}
