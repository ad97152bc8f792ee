use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{ExactDiv, FieldScalar, Scalar};
use super::Rat;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T = Rat> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero_elem) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: T, n: usize) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Scalar::neg_ref).collect(),
        }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        if e == 0 {
            return match self.coeffs.first() {
                Some(c) => Self::constant(c.one_like()),
                // 0^0 = 1 needs a context; callers never raise the zero
                // polynomial to the zeroth power over a context-carrying ring.
                None => panic!("0^0 of a polynomial without coefficient context"),
            };
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul_ref(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc.unwrap()
    }

    /// Horner evaluation. `zero` supplies the context when `self` is zero.
    pub fn eval_with(&self, x: &T, zero: &T) -> T {
        let mut acc = zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.eval_with(x, &x.zero_like())
    }

    /// Evaluate at a polynomial argument: `self(q)`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(q).add_ref(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }
}

impl<T: FieldScalar> Poly<T> {
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(l) if l.is_one_elem() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(Scalar::is_one_elem)
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < dd {
            return (Self::zero(), self.clone());
        }
        let inv_lc = d.lc().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![rem[0].zero_like(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = rem[i + dd].mul_ref(&inv_lc);
            if c.is_zero_elem() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(dc));
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn field_gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let one = match self.coeffs.first().or(other.coeffs.first()) {
            Some(c) => Self::constant(c.one_like()),
            None => return (Self::zero(), Self::zero(), Self::zero()),
        };
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub_ref(&q.mul_ref(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub_ref(&q.mul_ref(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            Some(l) => {
                let li = l.inv();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
            None => (r0, s0, t0),
        }
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.field_gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl<T: ExactDiv> Poly<T> {
    pub fn div_scalar_exact(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.exact_div(c)).collect())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<T: Scalar> $tr<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                self.$inner(rhs)
            }
        }
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_ref()
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_ref()
    }
}

/// Polynomials over a ring form a ring, which is what bivariate arithmetic
/// (`Poly<Poly<Rat>>`) needs. Zero has no coefficients, so the constants
/// produced here are the plain rational ones.
impl Scalar for Poly<Rat> {
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::constant(num_traits::One::one())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Poly::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Poly::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Poly::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Poly::neg_ref(self)
    }
    fn mul_int(&self, n: i64) -> Self {
        self.scale(&Rat::from_integer(n.into()))
    }
}

impl ExactDiv for Poly<Rat> {
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}
