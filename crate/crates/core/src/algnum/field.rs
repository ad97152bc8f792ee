use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::{rat_to_fixed, CBall};
use super::roots::{isolate_roots, refine_roots};
use super::AlgNumError;
use crate::exactalg::{
    cyclotomic, cyclotomic_index, factor_over_q, ExactDiv, FieldScalar, Poly, Rat, RatFunc, Scalar,
};

/// `Q[t]/(m(t))` for a monic irreducible `m`, together with certified
/// discs for all complex roots of `m`. `root_index` picks the embedding in
/// which `t` denotes the distinguished root; roots are indexed by the
/// order of their isolating discs (real part, then imaginary part).
#[derive(Clone)]
pub struct NumberField(Arc<FieldInner>);

struct FieldInner {
    minpoly: Poly<Rat>,
    zmin: Vec<BigInt>,
    root_index: usize,
    cyclotomic_order: Option<u64>,
    // replaced wholesale on refinement; readers keep their snapshot
    roots: RwLock<Arc<Vec<CBall>>>,
}

impl NumberField {
    pub fn new(minpoly: &Poly<Rat>, root_index: usize) -> Result<Self, AlgNumError> {
        if minpoly.degree().unwrap_or(0) == 0 {
            return Err(AlgNumError::NotIrreducible);
        }
        let fl = factor_over_q(minpoly).map_err(AlgNumError::Exact)?;
        if fl.factors.len() != 1 || fl.factors[0].1 != 1 {
            return Err(AlgNumError::NotIrreducible);
        }
        let m = minpoly.monic();
        let zmin = m.to_primitive_int().1;
        let roots = isolate_roots(&zmin)?;
        if root_index >= roots.len() {
            return Err(AlgNumError::BadRootIndex {
                index: root_index,
                degree: roots.len(),
            });
        }
        let cyclotomic_order = cyclotomic_index(&m);
        Ok(NumberField(Arc::new(FieldInner {
            minpoly: m,
            zmin,
            root_index,
            cyclotomic_order,
            roots: RwLock::new(Arc::new(roots)),
        })))
    }

    /// `Q` itself, presented as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        Self::new(&Poly::x(), 0).expect("x is irreducible")
    }

    /// `Q(zeta_m)` with `t = exp(2 pi i / m)`.
    pub fn cyclotomic(m: u64) -> Self {
        let phi = cyclotomic(m);
        let d = phi.degree().unwrap();
        // exp(2 pi i/m) has the largest real part and, for m >= 3, sits
        // after its conjugate in the disc order
        let idx = if m <= 2 { 0 } else { d - 1 };
        Self::new(&phi, idx).expect("cyclotomic polynomials are irreducible")
    }

    pub fn minpoly(&self) -> &Poly<Rat> {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.degree().unwrap()
    }

    pub fn root_index(&self) -> usize {
        self.0.root_index
    }

    pub fn cyclotomic_order(&self) -> Option<u64> {
        self.0.cyclotomic_order
    }

    pub fn is_rational_field(&self) -> bool {
        self.degree() == 1
    }

    /// Same field, different distinguished embedding.
    pub fn with_root_index(&self, root_index: usize) -> Result<Self, AlgNumError> {
        if root_index >= self.degree() {
            return Err(AlgNumError::BadRootIndex {
                index: root_index,
                degree: self.degree(),
            });
        }
        Ok(NumberField(Arc::new(FieldInner {
            minpoly: self.0.minpoly.clone(),
            zmin: self.0.zmin.clone(),
            root_index,
            cyclotomic_order: self.0.cyclotomic_order,
            roots: RwLock::new(self.roots()),
        })))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.root_index == other.0.root_index && self.0.minpoly == other.0.minpoly)
    }

    /// Snapshot of the current root discs.
    pub fn roots(&self) -> Arc<Vec<CBall>> {
        self.0.roots.read().unwrap().clone()
    }

    /// Disc around the `j`-th root with at least `prec` bits.
    pub fn root_ball(&self, j: usize, prec: u32) -> Result<CBall, AlgNumError> {
        let snap = self.roots();
        if snap[j].prec >= prec {
            return Ok(snap[j].clone());
        }
        let refined = Arc::new(refine_roots(&self.0.zmin, &snap, prec)?);
        let mut w = self.0.roots.write().unwrap();
        if w[0].prec < refined[0].prec {
            *w = refined.clone();
        }
        Ok(refined[j].clone())
    }

    /// Whether the `j`-th embedding is real. Exact: canonical discs of real
    /// roots have real centers, discs of non-real roots avoid the real axis.
    pub fn is_real_embedding(&self, j: usize) -> bool {
        self.roots()[j].im.is_zero()
    }

    /// Polynomial `g` with `conj(theta_j) = g(theta_j)` when one is known:
    /// rational field, real embedding, quadratic field, cyclotomic field.
    pub fn conjugation_at(&self, j: usize) -> Option<Poly<Rat>> {
        let m = &self.0.minpoly;
        if self.degree() == 1 || self.is_real_embedding(j) {
            return Some(Poly::x());
        }
        if let Some(order) = self.0.cyclotomic_order {
            return Some(Poly::monomial(Rat::one(), order as usize - 1).rem(m));
        }
        if self.degree() == 2 {
            let b = m.coeffs()[1].clone();
            return Some(Poly::from_coeffs(vec![-b, -Rat::one()]));
        }
        None
    }

    pub fn elem(&self, rep: Poly<Rat>) -> NFElem {
        NFElem {
            field: self.clone(),
            rep: rep.rem(&self.0.minpoly),
        }
    }

    pub fn from_rat(&self, c: Rat) -> NFElem {
        self.elem(Poly::constant(c))
    }

    pub fn from_int(&self, c: i64) -> NFElem {
        self.from_rat(Rat::from_integer(c.into()))
    }

    pub fn zero(&self) -> NFElem {
        self.from_rat(Rat::zero())
    }

    pub fn one(&self) -> NFElem {
        self.from_rat(Rat::one())
    }

    /// The generator `t`.
    pub fn gen(&self) -> NFElem {
        self.elem(Poly::x())
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({}) @ root {}", self.0.minpoly.render("t"), self.0.root_index)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Element of a number field in the power basis of its generator.
#[derive(Clone)]
pub struct NFElem {
    field: NumberField,
    rep: Poly<Rat>,
}

impl NFElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rep(&self) -> &Poly<Rat> {
        &self.rep
    }

    fn check(&self, o: &Self) {
        assert!(
            self.field.same_as(&o.field),
            "arithmetic between elements of different number fields"
        );
    }

    fn with(&self, rep: Poly<Rat>) -> Self {
        self.field.elem(rep)
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self.rep.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.rep.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        NFElem {
            field: self.field.clone(),
            rep: self.rep.add_ref(&o.rep),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        NFElem {
            field: self.field.clone(),
            rep: self.rep.sub_ref(&o.rep),
        }
    }

    pub fn neg(&self) -> Self {
        NFElem {
            field: self.field.clone(),
            rep: self.rep.neg_ref(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        self.with(self.rep.mul_ref(&o.rep))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        NFElem {
            field: self.field.clone(),
            rep: self.rep.scale(c),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgNumError> {
        if self.is_zero() {
            return Err(AlgNumError::ZeroInput("inverse"));
        }
        if let Some(c) = self.as_rat() {
            return Ok(self.field.from_rat(c.recip()));
        }
        let (g, s, _) = self.rep.xgcd(self.field.minpoly());
        debug_assert!(g.is_constant());
        Ok(self.with(s.scale(&g.coeffs()[0].recip())))
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgNumError> {
        self.check(o);
        Ok(self.mul(&o.inv()?))
    }

    /// `p(self)` for a rational polynomial `p`.
    pub fn eval_poly(&self, p: &Poly<Rat>) -> Self {
        let mut acc = self.field.zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&self.field.from_rat(c.clone()));
        }
        acc
    }

    /// `r(self)`, or `None` where the denominator of `r` vanishes.
    pub fn eval_ratfunc(&self, r: &RatFunc) -> Option<Self> {
        let d = self.eval_poly(r.den());
        if d.is_zero() {
            return None;
        }
        Some(self.eval_poly(r.num()).mul(&d.inv().ok()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgNumError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(Scalar::pow_u(&base, e.unsigned_abs()))
    }

    /// Field norm `prod_sigma sigma(self)`.
    pub fn norm(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        self.field
            .minpoly()
            .resultant(&self.rep)
            .expect("nonzero operands")
    }

    /// Monic minimal polynomial over `Q`, from the first linear dependence
    /// among `1, u, u^2, ...` in the power basis.
    pub fn min_poly(&self) -> Poly<Rat> {
        if let Some(c) = self.as_rat() {
            return Poly::from_coeffs(vec![-c, Rat::one()]);
        }
        let n = self.field.degree();
        let coords = |e: &NFElem| -> Vec<Rat> {
            (0..n)
                .map(|i| e.rep.coeff(i).cloned().unwrap_or_else(Rat::zero))
                .collect()
        };
        let mut rows: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::new();
        let mut pw = self.field.one();
        for k in 0..=n {
            let mut v = coords(&pw);
            let mut combo = vec![Rat::zero(); k + 1];
            combo[k] = Rat::one();
            for (piv, bv, bc) in &rows {
                let c = v[*piv].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(bv) {
                    *x -= &c * y;
                }
                for (x, y) in combo.iter_mut().zip(bc) {
                    *x -= &c * y;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Poly::from_coeffs(combo).monic(),
                Some(piv) => {
                    let inv = v[piv].recip();
                    v.iter_mut().for_each(|x| *x *= &inv);
                    combo.iter_mut().for_each(|x| *x *= &inv);
                    rows.push((piv, v, combo));
                }
            }
            pw = pw.mul(self);
        }
        unreachable!("minimal polynomial degree exceeds field degree")
    }

    /// Disc containing the image of `self` under the `j`-th embedding, with
    /// center rounded to `prec` bits.
    pub fn ball(&self, j: usize, prec: u32) -> Result<CBall, AlgNumError> {
        let root = self.field.root_ball(j, prec)?;
        Ok(eval_ball(&self.rep, &root, prec))
    }

    /// Image under the `j`-th embedding, approximately.
    pub fn to_complex(&self, j: usize) -> (f64, f64) {
        match self.ball(j, 64) {
            Ok(b) => (b.re_f64(), b.im_f64()),
            Err(_) => (f64::NAN, f64::NAN),
        }
    }

    /// Complex conjugate under the distinguished embedding, if the field
    /// carries a conjugation map there.
    pub fn conj(&self) -> Result<Self, AlgNumError> {
        self.conj_at(self.field.root_index())
    }

    pub fn conj_at(&self, j: usize) -> Result<Self, AlgNumError> {
        let g = self
            .field
            .conjugation_at(j)
            .ok_or(AlgNumError::ConjugationUnavailable)?;
        let gf = self.field.elem(g);
        Ok(self
            .rep
            .coeffs()
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| acc.mul(&gf).add(&self.field.from_rat(c.clone()))))
    }
}

/// Encloses `p(z)` for every `z` in `root`: exact value at the center plus
/// the majorant `sum |c_k| ((|c| + r)^k - |c|^k)`.
pub(crate) fn eval_ball(p: &Poly<Rat>, root: &CBall, prec: u32) -> CBall {
    if p.is_zero() {
        return CBall::exact_int(BigInt::zero(), BigInt::zero(), prec);
    }
    let (scale, ints) = p.to_primitive_int();
    let n = ints.len() - 1;
    let s = root.prec as usize;
    let (a, b) = (&root.re, &root.im);
    // V = 2^(s n) * prim(center), exact
    let mut vre = ints[n].clone();
    let mut vim = BigInt::zero();
    for k in (0..n).rev() {
        let re = &vre * a - &vim * b;
        let im = &vre * b + &vim * a;
        vre = re + (&ints[k] << (s * (n - k)));
        vim = im;
    }
    // E = 2^(s n) * sum |c_k| ((M + R)^k - M^k)
    let m = root.center_abs_upper();
    let mr = &m + &root.rad;
    let mut err = BigInt::zero();
    let (mut pm, mut pmr) = (BigInt::one(), BigInt::one());
    for (k, c) in ints.iter().enumerate() {
        if k > 0 {
            pm *= &m;
            pmr *= &mr;
            err += c.abs() * (&pmr - &pm) << (s * (n - k));
        }
    }
    let den = BigInt::one() << (s * n);
    let to_fixed = |x: BigInt| rat_to_fixed(&(Rat::new(x, den.clone()) * &scale), prec);
    let rad_num = (err * scale.numer().abs()) << prec;
    let rad_den = &den * scale.denom();
    let rad = (&rad_num + &rad_den - 1u32) / &rad_den;
    CBall {
        re: to_fixed(vre),
        im: to_fixed(vim),
        rad: rad + 1,
        prec,
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.render("t"))
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.render("t"))
    }
}

impl PartialEq for NFElem {
    fn eq(&self, o: &Self) -> bool {
        self.field.same_as(&o.field) && self.rep == o.rep
    }
}

impl Scalar for NFElem {
    fn is_zero_elem(&self) -> bool {
        self.rep.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul_int(&self, n: i64) -> Self {
        self.scale(&Rat::from_integer(n.into()))
    }
}

impl FieldScalar for NFElem {
    fn inv(&self) -> Self {
        NFElem::inv(self).expect("inverse of zero")
    }
}

impl ExactDiv for NFElem {
    fn exact_div(&self, rhs: &Self) -> Self {
        self.div(rhs).expect("division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    #[test]
    fn min_polys() {
        let k = NumberField::new(&p(&[-2, 0, 1]), 1).unwrap();
        assert_eq!(k.gen().min_poly(), p(&[-2, 0, 1]));
        assert_eq!(k.from_rat(rat(3, 2)).min_poly(), Poly::from_coeffs(vec![rat(-3, 2), int(1)]));
        assert_eq!(k.gen().add(&k.one()).min_poly(), p(&[-1, -2, 1]));
        // an element of a proper subfield
        let k4 = NumberField::cyclotomic(8);
        let s = k4.gen().add(&k4.gen().pow(-1).unwrap());
        assert_eq!(s.min_poly(), p(&[-2, 0, 1]));
    }

    #[test]
    fn inverse_and_norm() {
        let k = NumberField::new(&p(&[-2, 0, 1]), 0).unwrap();
        let u = k.gen().add(&k.one());
        assert_eq!(u.mul(&u.inv().unwrap()), k.one());
        assert_eq!(u.norm(), int(-1));
        assert!(NumberField::new(&p(&[-1, 0, 1]), 0).is_err());
    }

    #[test]
    fn designated_roots() {
        let k = NumberField::new(&p(&[-2, 0, 1]), 1).unwrap();
        let (re, im) = k.gen().to_complex(1);
        assert!((re - 2f64.sqrt()).abs() < 1e-12 && im == 0.0);
        let z3 = NumberField::cyclotomic(3);
        let (re, im) = z3.gen().to_complex(z3.root_index());
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
        let z12 = NumberField::cyclotomic(12);
        let (re, im) = z12.gen().to_complex(z12.root_index());
        assert!((re - 0.75f64.sqrt()).abs() < 1e-12 && (im - 0.5).abs() < 1e-12);
    }

    #[test]
    fn conjugation_maps() {
        let qi = NumberField::new(&p(&[1, 0, 1]), 1).unwrap();
        let u = qi.gen().add(&qi.one());
        assert_eq!(u.conj().unwrap(), qi.one().sub(&qi.gen()));
        let z3 = NumberField::cyclotomic(3);
        let z = z3.gen();
        assert_eq!(z.conj().unwrap(), z.mul(&z));
        let cubic = NumberField::new(&p(&[-2, 0, 0, 1]), 2).unwrap();
        assert!(cubic.is_real_embedding(2));
        assert_eq!(cubic.gen().conj().unwrap(), cubic.gen());
        let complex_root = (0..3).find(|&j| !cubic.is_real_embedding(j)).unwrap();
        assert!(cubic.gen().conj_at(complex_root).is_err());
    }

    #[test]
    fn balls_enclose_values() {
        let k = NumberField::new(&p(&[-1, -1, 1]), 1).unwrap();
        let phi = k.gen();
        let b = phi.mul(&phi).ball(1, 200).unwrap();
        let golden_sq = 1.5 + 1.25f64.sqrt();
        assert!((b.re_f64() - golden_sq).abs() < 1e-14);
        assert!(b.rad_f64() < 1e-50);
    }
}
