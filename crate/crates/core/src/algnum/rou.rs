use num_traits::{One, Signed};

use super::{AlgNumError, NFElem};
use crate::exactalg::{cyclotomic_index, euler_phi, orders_with_phi_at_most, Poly, Rat};

/// Multiplicative order of `u` if it is a root of unity.
pub fn is_root_of_unity(u: &NFElem) -> Result<Option<u64>, AlgNumError> {
    if u.is_zero() {
        return Err(AlgNumError::ZeroInput("is_root_of_unity"));
    }
    Ok(rou_order_of_minpoly(&u.min_poly()))
}

/// Order `n` when the monic irreducible `m` equals `Phi_n`.
pub fn rou_order_of_minpoly(m: &Poly<Rat>) -> Option<u64> {
    if !m.is_integral() || !m.coeffs()[0].abs().is_one() {
        return None;
    }
    cyclotomic_index(m)
}

/// `R(D)`: the number of roots of unity of degree at most `D` over `Q`.
pub fn count_rou_degree(d: u64) -> u64 {
    assert!(d >= 1, "degree bound must be positive");
    orders_with_phi_at_most(d).into_iter().map(euler_phi).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;

    #[test]
    fn orders() {
        let z3 = NumberField::cyclotomic(3);
        assert_eq!(is_root_of_unity(&z3.gen()).unwrap(), Some(3));
        assert_eq!(is_root_of_unity(&z3.gen().neg()).unwrap(), Some(6));
        let qi = NumberField::new(&Poly::from_i64s(&[1, 0, 1]), 0).unwrap();
        assert_eq!(is_root_of_unity(&qi.gen().neg()).unwrap(), Some(4));
        let g = NumberField::new(&Poly::from_i64s(&[-1, -1, 1]), 1).unwrap();
        assert_eq!(is_root_of_unity(&g.gen()).unwrap(), None);
        assert!(is_root_of_unity(&g.zero()).is_err());
        // (3 + 4i)/5 has modulus one but is not a root of unity
        let w = qi.gen().scale(&Rat::new(4.into(), 5.into())).add(&qi.from_rat(Rat::new(3.into(), 5.into())));
        assert_eq!(is_root_of_unity(&w).unwrap(), None);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_rou_degree(1), 2);
        assert_eq!(count_rou_degree(2), 8);
        // phi(m) <= 4: m in {1,2,3,4,5,6,8,10,12}
        assert_eq!(count_rou_degree(4), 1 + 1 + 2 + 2 + 4 + 2 + 4 + 4 + 4);
    }
}
