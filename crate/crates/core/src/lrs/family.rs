use crate::algnum::NFElem;
use crate::exactalg::{Poly, Rat, RatFunc};
use crate::torsion::exceptional_pair_poly;

use super::{LrsError, SpecializedLRS};

/// `F_n(X) = sum_i a_i(X) f_i(X)^n` with `k >= 2` nonzero terms and
/// pairwise nonconstant ratios `f_i / f_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricFamily {
    a: Vec<RatFunc>,
    f: Vec<RatFunc>,
}

/// Finding reported by [`validate_family`]. Indices are 0-based.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyIssue {
    LengthMismatch { a: usize, f: usize },
    TooFewTerms(usize),
    ZeroEntry { which: char, index: usize },
    ConstantRatio { i: usize, j: usize, ratio: Rat },
    /// `f_s/f_r = g^m1` and `f_t/f_r = g^m2` (or the same for the reciprocals).
    ExceptionalTriple { r: usize, s: usize, t: usize, g: Poly<Rat>, m1: u32, m2: u32 },
    /// The ratio pair is not polynomial; no decision procedure is applied.
    Unchecked { r: usize, s: usize, t: usize },
}

impl FamilyIssue {
    pub fn is_violation(&self) -> bool {
        !matches!(self, FamilyIssue::Unchecked { .. })
    }

    /// Whether the issue makes the input unusable as a family at all.
    fn is_structural(&self) -> bool {
        matches!(
            self,
            FamilyIssue::LengthMismatch { .. }
                | FamilyIssue::TooFewTerms(_)
                | FamilyIssue::ZeroEntry { .. }
                | FamilyIssue::ConstantRatio { .. }
        )
    }

    pub fn describe(&self) -> String {
        match self {
            FamilyIssue::LengthMismatch { a, f } => format!("{a} coefficients but {f} roots"),
            FamilyIssue::TooFewTerms(k) => format!("k = {k}, need at least 2 terms"),
            FamilyIssue::ZeroEntry { which, index } => format!("{which}_{index} is zero"),
            FamilyIssue::ConstantRatio { i, j, ratio } => {
                format!("f_{i}/f_{j} is the constant {ratio}")
            }
            FamilyIssue::ExceptionalTriple { r, s, t, g, m1, m2 } => format!(
                "(f_{s}/f_{r}, f_{t}/f_{r}) = (g^{m1}, g^{m2}) up to inversion, g = {}",
                g.render("x")
            ),
            FamilyIssue::Unchecked { r, s, t } => {
                format!("(f_{s}/f_{r}, f_{t}/f_{r}) not polynomial, exceptionality unchecked")
            }
        }
    }
}

/// Checks the family hypotheses: matching lengths, `k >= 2`, nonzero
/// entries, nonconstant ratios, and for every triple `(r, s, t)` whether
/// `(f_s/f_r, f_t/f_r)` is a polynomial exceptional pair.
pub fn validate_family(a: &[RatFunc], f: &[RatFunc]) -> Vec<FamilyIssue> {
    let mut out = Vec::new();
    if a.len() != f.len() {
        out.push(FamilyIssue::LengthMismatch { a: a.len(), f: f.len() });
        return out;
    }
    let k = f.len();
    if k < 2 {
        out.push(FamilyIssue::TooFewTerms(k));
    }
    for (which, v) in [('a', a), ('f', f)] {
        for (index, x) in v.iter().enumerate() {
            if x.is_zero() {
                out.push(FamilyIssue::ZeroEntry { which, index });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 0..k {
        for j in i + 1..k {
            let q = f[i].div(&f[j]).expect("nonzero");
            if q.is_constant() {
                let ratio = q.num().coeffs()[0].clone();
                out.push(FamilyIssue::ConstantRatio { i, j, ratio });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for r in 0..k {
        for s in 0..k {
            for t in s + 1..k {
                if s == r || t == r {
                    continue;
                }
                let g1 = f[s].div(&f[r]).expect("nonzero");
                let g2 = f[t].div(&f[r]).expect("nonzero");
                match polynomial_pair(&g1, &g2) {
                    Some((p1, p2)) => {
                        if let Some((g, m1, m2)) = exceptional_pair_poly(&p1, &p2) {
                            out.push(FamilyIssue::ExceptionalTriple { r, s, t, g, m1, m2 });
                        }
                    }
                    None => out.push(FamilyIssue::Unchecked { r, s, t }),
                }
            }
        }
    }
    out
}

/// Both ratios as polynomials, directly or after inverting both.
fn polynomial_pair(g1: &RatFunc, g2: &RatFunc) -> Option<(Poly<Rat>, Poly<Rat>)> {
    let as_poly = |g: &RatFunc| g.as_poly().cloned();
    if let (Some(p1), Some(p2)) = (as_poly(g1), as_poly(g2)) {
        return Some((p1, p2));
    }
    let (i1, i2) = (g1.inv().ok()?, g2.inv().ok()?);
    Some((as_poly(&i1)?, as_poly(&i2)?))
}

impl ParametricFamily {
    /// Builds a family, rejecting structural problems (length mismatch,
    /// `k < 2`, zero entries, constant ratios). Exceptional triples are not
    /// rejected; see [`ParametricFamily::validate`].
    pub fn new(a: Vec<RatFunc>, f: Vec<RatFunc>) -> Result<Self, LrsError> {
        let issues = validate_family(&a, &f);
        if let Some(bad) = issues.iter().find(|i| i.is_structural()) {
            return Err(LrsError::InvalidFamily(bad.describe()));
        }
        Ok(ParametricFamily { a, f })
    }

    pub fn from_polys(a: &[Poly<Rat>], f: &[Poly<Rat>]) -> Result<Self, LrsError> {
        Self::new(
            a.iter().cloned().map(RatFunc::from_poly).collect(),
            f.iter().cloned().map(RatFunc::from_poly).collect(),
        )
    }

    pub fn a(&self) -> &[RatFunc] {
        &self.a
    }

    pub fn f(&self) -> &[RatFunc] {
        &self.f
    }

    pub fn k(&self) -> usize {
        self.f.len()
    }

    /// Largest degree among all `a_i`, `f_i`.
    pub fn d(&self) -> usize {
        self.a.iter().chain(&self.f).map(RatFunc::degree).max().unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.a.iter().chain(&self.f).all(RatFunc::is_polynomial)
    }

    pub fn validate(&self) -> Vec<FamilyIssue> {
        validate_family(&self.a, &self.f)
    }

    /// `F_n` exactly.
    pub fn expand(&self, n: u64) -> RatFunc {
        self.a
            .iter()
            .zip(&self.f)
            .fold(RatFunc::zero(), |acc, (a, f)| {
                acc.add(&a.mul(&f.pow(n as i64).expect("nonzero root")))
            })
    }

    /// `F_0, ..., F_{count-1}`, sharing the powers between consecutive terms.
    pub fn expand_range(&self, count: usize) -> Vec<RatFunc> {
        let mut cur: Vec<RatFunc> = self.a.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(cur.iter().fold(RatFunc::zero(), |acc, t| acc.add(t)));
            for (c, f) in cur.iter_mut().zip(&self.f) {
                *c = c.mul(f);
            }
        }
        out
    }

    /// The sequence `F_n(alpha)` as a simple recurrence over `Q(alpha)`.
    ///
    /// Equal roots are merged by summing coefficients; a merged coefficient
    /// that cancels drops the root. A vanishing `a_i(alpha)` or `f_i(alpha)`
    /// is reported as [`LrsError::ExceptionalPoint`].
    pub fn specialize(&self, alpha: &NFElem) -> Result<SpecializedLRS, LrsError> {
        let mut mu = Vec::with_capacity(self.k());
        let mut lambda = Vec::with_capacity(self.k());
        for (which, src, dst) in [('a', &self.a, &mut mu), ('f', &self.f, &mut lambda)] {
            for (index, r) in src.iter().enumerate() {
                let v = alpha
                    .eval_ratfunc(r)
                    .ok_or(LrsError::PoleError { which, index })?;
                if v.is_zero() {
                    return Err(LrsError::ExceptionalPoint(format!(
                        "{which}_{index} vanishes at the specialization point"
                    )));
                }
                dst.push(v);
            }
        }
        SpecializedLRS::merged(alpha.field(), mu, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;
    use crate::exactalg::rat;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(p(c))
    }

    fn basic() -> ParametricFamily {
        ParametricFamily::from_polys(&[p(&[1]), p(&[-1])], &[p(&[0, 1]), p(&[1, 1])]).unwrap()
    }

    #[test]
    fn expansion() {
        let fam = basic();
        assert_eq!(fam.expand(2), rf(&[-1, -2]));
        assert_eq!(fam.expand(0), RatFunc::zero());
        let all = fam.expand_range(8);
        for (n, t) in all.iter().enumerate() {
            assert_eq!(*t, fam.expand(n as u64));
        }
    }

    #[test]
    fn constant_ratio_rejected() {
        let a = vec![rf(&[1]), rf(&[-2])];
        let f = vec![rf(&[4]), rf(&[2])];
        assert!(matches!(ParametricFamily::new(a, f), Err(LrsError::InvalidFamily(_))));
        let issues = validate_family(&[rf(&[1]), rf(&[1])], &[rf(&[0, 1]), rf(&[0, 2])]);
        assert!(matches!(issues[0], FamilyIssue::ConstantRatio { i: 0, j: 1, .. }));
    }

    #[test]
    fn exceptional_triples() {
        let one = rf(&[1]);
        let f = vec![rf(&[0, 1]), rf(&[0, 0, 1]), rf(&[0, 0, 0, 1])];
        let issues = validate_family(&[one.clone(), one.clone(), one.clone()], &f);
        let found = issues.iter().find_map(|i| match i {
            FamilyIssue::ExceptionalTriple { r: 0, g, m1, m2, .. } => Some((g.clone(), *m1, *m2)),
            _ => None,
        });
        assert_eq!(found, Some((p(&[0, 1]), 1, 2)));
        let f = vec![rf(&[0, 1]), rf(&[1, 1]), rf(&[1, 2])];
        let issues = validate_family(&[one.clone(), one.clone(), one], &f);
        assert!(issues.iter().all(|i| !i.is_violation()));
    }

    #[test]
    fn specialization() {
        let fam = basic();
        let q = NumberField::rationals();
        let s = fam.specialize(&q.from_int(2)).unwrap();
        assert_eq!(s.lambda(), &[q.from_int(2), q.from_int(3)]);
        assert_eq!(s.mu(), &[q.from_int(1), q.from_int(-1)]);
        assert!(matches!(
            fam.specialize(&q.from_int(0)),
            Err(LrsError::ExceptionalPoint(_))
        ));
        let s = fam.specialize(&q.from_rat(rat(-1, 2))).unwrap();
        assert_eq!(s.lambda(), &[q.from_rat(rat(-1, 2)), q.from_rat(rat(1, 2))]);
        let pole = ParametricFamily::new(
            vec![rf(&[1]), rf(&[1])],
            vec![RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap(), rf(&[0, 1])],
        )
        .unwrap();
        assert_eq!(
            pole.specialize(&q.from_int(1)),
            Err(LrsError::PoleError { which: 'f', index: 0 })
        );
        assert_eq!(pole.d(), 1);
    }

    #[test]
    fn merged_roots() {
        // x and x^2 coincide at 1
        let fam = ParametricFamily::from_polys(&[p(&[1]), p(&[2])], &[p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        let q = NumberField::rationals();
        let s = fam.specialize(&q.from_int(1)).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.mu(), &[q.from_int(3)]);
        let fam = ParametricFamily::from_polys(&[p(&[1]), p(&[-1])], &[p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        let s = fam.specialize(&q.from_int(1)).unwrap();
        assert_eq!(s.order(), 0);
        assert_eq!(s.cancelled(), &[vec![0, 1]]);
    }
}
