use std::fmt;

use num_traits::{One, Zero};

use super::{ExactAlgError, Poly, Rat};

/// Normalized rational function: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl RatFunc {
    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let l = d.lc().unwrap().clone();
        if !l.is_one() {
            n = n.scale(&l.recip());
            d = d.monic();
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly<Rat>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn num(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rat> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<&Poly<Rat>> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `max(deg num, deg den)`; zero has degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(self.num.add_ref(&rhs.num), self.den.clone());
        }
        let num = self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den));
        Self::normalized(num, self.den.mul_ref(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::normalized(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }

    pub fn inv(&self) -> Result<Self, ExactAlgError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ExactAlgError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ExactAlgError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        if k == 0 {
            return Ok(Self::one());
        }
        // coprime stays coprime under powers
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval_with(x, &Rat::zero());
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_with(x, &Rat::zero()) / d)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<Poly<Rat>> for RatFunc {
    fn from(p: Poly<Rat>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl super::scalar::Scalar for RatFunc {
    fn is_zero_elem(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
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

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    #[test]
    fn normalization() {
        // (2x^2 - 2) / (2x - 2) = x + 1
        let r = RatFunc::new(p(&[-2, 0, 2]), p(&[-2, 2])).unwrap();
        assert_eq!(r.num(), &p(&[1, 1]));
        assert!(r.is_polynomial());
        let r = RatFunc::new(p(&[1]), p(&[0, 3])).unwrap();
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num(), &Poly::constant(Rat::new(1.into(), 3.into())));
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn arithmetic_and_powers() {
        let a = RatFunc::new(p(&[1, 1]), p(&[0, 1])).unwrap();
        let b = a.pow(-2).unwrap();
        assert_eq!(a.pow(2).unwrap().mul(&b), RatFunc::one());
        assert_eq!(a.sub(&a), RatFunc::zero());
        assert_eq!(a.eval(&Rat::from_integer(1.into())), Some(Rat::from_integer(2.into())));
        assert_eq!(a.eval(&Rat::zero()), None);
        assert_eq!(a.degree(), 1);
    }
}
