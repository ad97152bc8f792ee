use crate::exactalg::{det_bareiss, det_cofactor, solve, ExactDiv, FieldScalar, Poly, Rat, RatFunc};

use super::LrsError;

/// Hankel determinants `Delta_h = det(u_{i+j})_{0 <= i,j < h}` for
/// `h = 1..=h_max`, with the recurrence order they reveal.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelReport<T> {
    pub h_max: usize,
    /// `dets[h - 1] = Delta_h`.
    pub dets: Vec<T>,
    /// Last `k < h_max` with `Delta_k != 0`, all later determinants vanishing.
    pub detected_order: Option<usize>,
    /// `A_0, ..., A_{k-1}` with `u_{n+k} = sum_i A_i u_{n+i}`.
    pub recurrence_coeffs: Option<Vec<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LrsVerdict {
    /// Every tested `Delta_h` vanishes identically.
    Consistent,
    /// `Delta_witness` is a nonzero rational function.
    Refuted { witness: usize },
}

fn need_terms(len: usize, h: usize) -> Result<(), LrsError> {
    if h == 0 {
        return Err(LrsError::InvalidArgument("Hankel size must be positive".into()));
    }
    let needed = 2 * h - 1;
    if len < needed {
        return Err(LrsError::InsufficientTerms { needed, got: len });
    }
    Ok(())
}

fn hankel_matrix<T: Clone>(terms: &[T], h: usize) -> Vec<Vec<T>> {
    (0..h).map(|i| terms[i..i + h].to_vec()).collect()
}

pub fn hankel_numeric<T: FieldScalar + ExactDiv>(terms: &[T], h_max: usize) -> Result<HankelReport<T>, LrsError> {
    need_terms(terms.len(), h_max)?;
    let dets: Vec<T> = (1..=h_max).map(|h| det_bareiss(hankel_matrix(terms, h))).collect();
    let last = dets.iter().rposition(|d| !d.is_zero_elem());
    let detected_order = match last {
        Some(i) if i + 1 < h_max => Some(i + 1),
        _ => None,
    };
    let recurrence_coeffs = detected_order.map(|k| {
        let m = hankel_matrix(terms, k);
        let rhs = &terms[k..2 * k];
        solve(&m, rhs).expect("Delta_k is nonzero")
    });
    Ok(HankelReport { h_max, dets, detected_order, recurrence_coeffs })
}

/// `Delta_h(X)` for a sequence of rational functions. Denominators are
/// cleared first; small determinants use cofactor expansion, larger ones
/// fraction-free elimination over `Q[X]`.
pub fn hankel_symbolic(terms: &[RatFunc], h: usize) -> Result<RatFunc, LrsError> {
    need_terms(terms.len(), h)?;
    let used = &terms[..2 * h - 1];
    let den = used.iter().fold(Poly::one(), |l, t| l.lcm(t.den()));
    let polys: Vec<Poly<Rat>> = used
        .iter()
        .map(|t| t.num().mul_ref(&den.div_rem(t.den()).0))
        .collect();
    let m = hankel_matrix(&polys, h);
    let det = if h < 5 { det_cofactor(&m) } else { det_bareiss(m) };
    Ok(RatFunc::new(det, den.pow(h as u64)).expect("nonzero denominator"))
}

/// `Delta_1(X), ..., Delta_{h_max}(X)`.
pub fn hankel_symbolic_range(terms: &[RatFunc], h_max: usize) -> Result<Vec<RatFunc>, LrsError> {
    need_terms(terms.len(), h_max)?;
    (1..=h_max).map(|h| hankel_symbolic(terms, h)).collect()
}

/// Tests whether `terms` can satisfy a linear recurrence of order at most
/// `order` over `C(X)`: every `Delta_h` with `order < h <= h_max` must vanish.
pub fn is_lrs_functional(terms: &[RatFunc], order: usize, h_max: usize) -> Result<LrsVerdict, LrsError> {
    need_terms(terms.len(), h_max)?;
    for h in order + 1..=h_max {
        if !hankel_symbolic(terms, h)?.is_zero() {
            return Ok(LrsVerdict::Refuted { witness: h });
        }
    }
    Ok(LrsVerdict::Consistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn x_pow(e: usize) -> RatFunc {
        RatFunc::from_poly(Poly::x().pow(e as u64))
    }

    #[test]
    fn fibonacci_order_two() {
        let r = hankel_numeric(&ints(&[1, 1, 2, 3, 5, 8, 13]), 4).unwrap();
        assert_eq!(r.dets, ints(&[1, 1, 0, 0]));
        assert_eq!(r.detected_order, Some(2));
        assert_eq!(r.recurrence_coeffs, Some(ints(&[1, 1])));
    }

    #[test]
    fn small_orders() {
        let r = hankel_numeric(&ints(&[5, 5, 5, 5, 5]), 3).unwrap();
        assert_eq!(r.detected_order, Some(1));
        let r = hankel_numeric(&ints(&[1, 3, 9, 27]), 2).unwrap();
        assert_eq!(r.detected_order, Some(1));
        assert_eq!(r.recurrence_coeffs, Some(ints(&[3])));
        assert_eq!(
            hankel_numeric(&ints(&[1, 2]), 2),
            Err(LrsError::InsufficientTerms { needed: 3, got: 2 })
        );
        // nonvanishing at the window edge: nothing confirmed
        let r = hankel_numeric(&ints(&[1, 1, 2]), 2).unwrap();
        assert_eq!(r.detected_order, None);
    }

    #[test]
    fn symbolic_determinants() {
        let xs: Vec<RatFunc> = (0..5).map(x_pow).collect();
        assert!(hankel_symbolic(&xs, 2).unwrap().is_zero());
        let plus_one: Vec<RatFunc> = xs.iter().map(|t| t.add(&RatFunc::one())).collect();
        assert!(hankel_symbolic(&plus_one, 3).unwrap().is_zero());
        let t = vec![x_pow(0), x_pow(1), x_pow(3)];
        assert_eq!(hankel_symbolic(&t, 2).unwrap(), RatFunc::from_poly(Poly::from_i64s(&[0, 0, -1, 1])));
    }

    #[test]
    fn functional_recurrences() {
        let xs: Vec<RatFunc> = (0..7).map(x_pow).collect();
        assert_eq!(is_lrs_functional(&xs, 1, 4).unwrap(), LrsVerdict::Consistent);
        let dbl: Vec<RatFunc> = (0..9).map(|n| x_pow(1 << n)).collect();
        assert!(matches!(
            is_lrs_functional(&dbl, 3, 5).unwrap(),
            LrsVerdict::Refuted { witness } if witness <= 5
        ));
        let x1 = RatFunc::from_poly(Poly::from_i64s(&[1, 1]));
        let two: Vec<RatFunc> = (0..9)
            .map(|n| x_pow(n).add(&x1.pow(n as i64).unwrap()))
            .collect();
        assert_eq!(is_lrs_functional(&two, 2, 5).unwrap(), LrsVerdict::Consistent);
    }

    #[test]
    fn rational_entries() {
        // 1/(X - n) is not a finite-order recurrence in n, but (1/X)^n is
        let inv = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        let seq: Vec<RatFunc> = (0..7).map(|n| inv.pow(n).unwrap()).collect();
        assert_eq!(is_lrs_functional(&seq, 1, 4).unwrap(), LrsVerdict::Consistent);
        assert!(!hankel_symbolic(&seq, 1).unwrap().is_zero());
    }
}
