use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rat;

/// Coefficient ring for [`Poly`](super::Poly).
///
/// Elements carry their own context (a number-field element knows its field),
/// so constants are produced from an existing value rather than from nothing.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn is_zero_elem(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_int(&self, n: i64) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

pub trait FieldScalar: Scalar {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div_ref(&self, rhs: &Self) -> Self {
        self.mul_ref(&rhs.inv())
    }
}

/// Rings with exact division (used by fraction-free elimination).
pub trait ExactDiv: Scalar {
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Scalar for Rat {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: i64) -> Self {
        self * Rat::from_integer(BigInt::from(n))
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}

impl FieldScalar for Rat {
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactDiv for Rat {
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

