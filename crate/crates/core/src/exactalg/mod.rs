//! Exact arithmetic kernel: rationals, dense univariate polynomials,
//! rational functions, gcd / radical / resultant / factorization.

mod bivar;
mod cyclotomic;
mod factor;
mod linalg;
pub(crate) mod modp;
mod poly;
mod qpoly;
mod ratfunc;
mod scalar;
pub(crate) mod zpoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use bivar::BiPoly;
pub use cyclotomic::{
    cyclotomic, cyclotomic_index, divisors, euler_phi, gcd_u64, lcm_u64, orders_with_phi_at_most,
};
pub use factor::{factor_over_q, irreducible_factors, is_irreducible, FactorList};
pub use linalg::{det_bareiss, det_cofactor, solve};
pub use poly::Poly;
pub use qpoly::{cmp_polys, gcd_free_basis, poly_from_roots, sort_polys};
pub use ratfunc::RatFunc;
pub use scalar::{ExactDiv, FieldScalar, Scalar};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("zero input rejected by {0}")]
    ZeroInput(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Parses `"p/q"` or `"p"` with decimal integers.
pub fn parse_rat(s: &str) -> Result<Rat, ExactAlgError> {
    let err = || ExactAlgError::Parse(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d == BigInt::from(0) {
        return Err(err());
    }
    Ok(Rat::new(n, d))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Monic gcd of two rational polynomials.
pub fn poly_gcd(p: &Poly<Rat>, q: &Poly<Rat>) -> Poly<Rat> {
    p.gcd(q)
}

pub fn radical(p: &Poly<Rat>) -> Result<Poly<Rat>, ExactAlgError> {
    p.radical()
}

pub fn resultant(p: &Poly<Rat>, q: &Poly<Rat>) -> Result<Rat, ExactAlgError> {
    p.resultant(q)
}
