use std::cmp::Ordering;

use crate::algnum::{is_root_of_unity, modulus_compare, AlgNumError, NFElem, NumberField};
use crate::exactalg::{Poly, Scalar};

use super::LrsError;

/// `u_n = sum_i mu_i lambda_i^n` over a number field, with nonzero,
/// pairwise distinct roots `lambda_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedLRS {
    field: NumberField,
    mu: Vec<NFElem>,
    lambda: Vec<NFElem>,
    charpoly: Poly<NFElem>,
    origins: Vec<Vec<usize>>,
    cancelled: Vec<Vec<usize>>,
}

/// Degeneracy and dominance data of a specialized sequence. Indices refer
/// to the roots of the [`SpecializedLRS`], 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub in_exceptional_set: bool,
    /// `(i, j, m)`: `lambda_i / lambda_j` is a primitive `m`-th root of unity.
    pub degenerate_pairs: Vec<(usize, usize, u64)>,
    /// Groups of family indices whose roots coincided and were merged.
    pub merged: Vec<Vec<usize>>,
    pub dominant_count: usize,
    pub dominant_indices: Vec<usize>,
}

impl SpecializedLRS {
    /// Requires nonzero coefficients and nonzero, pairwise distinct roots.
    pub fn new(mu: Vec<NFElem>, lambda: Vec<NFElem>) -> Result<Self, LrsError> {
        let field = check_fields(&mu, &lambda)?;
        if mu.iter().any(NFElem::is_zero) || lambda.iter().any(NFElem::is_zero) {
            return Err(LrsError::InvalidArgument("zero coefficient or root".into()));
        }
        for i in 0..lambda.len() {
            if lambda[i + 1..].contains(&lambda[i]) {
                return Err(LrsError::InvalidArgument("repeated root".into()));
            }
        }
        let origins = (0..lambda.len()).map(|i| vec![i]).collect();
        Ok(Self::build(field, mu, lambda, origins, Vec::new()))
    }

    /// Merges equal roots by summing their coefficients and drops roots
    /// whose merged coefficient cancels.
    pub(crate) fn merged(field: &NumberField, mu: Vec<NFElem>, lambda: Vec<NFElem>) -> Result<Self, LrsError> {
        let mut groups: Vec<(NFElem, NFElem, Vec<usize>)> = Vec::new();
        for (i, (m, l)) in mu.into_iter().zip(lambda).enumerate() {
            match groups.iter_mut().find(|g| g.1 == l) {
                Some(g) => {
                    g.0 = g.0.add(&m);
                    g.2.push(i);
                }
                None => groups.push((m, l, vec![i])),
            }
        }
        let (kept, cancelled): (Vec<_>, Vec<_>) = groups.into_iter().partition(|g| !g.0.is_zero());
        let cancelled = cancelled.into_iter().map(|g| g.2).collect();
        let mut mu = Vec::new();
        let mut lambda = Vec::new();
        let mut origins = Vec::new();
        for (m, l, o) in kept {
            mu.push(m);
            lambda.push(l);
            origins.push(o);
        }
        Ok(Self::build(field.clone(), mu, lambda, origins, cancelled))
    }

    fn build(
        field: NumberField,
        mu: Vec<NFElem>,
        lambda: Vec<NFElem>,
        origins: Vec<Vec<usize>>,
        cancelled: Vec<Vec<usize>>,
    ) -> Self {
        let mut charpoly = Poly::constant(field.one());
        for l in &lambda {
            charpoly = charpoly.mul_ref(&Poly::from_coeffs(vec![l.neg(), field.one()]));
        }
        let s = SpecializedLRS { field, mu, lambda, charpoly, origins, cancelled };
        debug_assert_eq!(s.closed_form_terms(2 * s.order()), s.terms(2 * s.order()));
        s
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn mu(&self) -> &[NFElem] {
        &self.mu
    }

    pub fn lambda(&self) -> &[NFElem] {
        &self.lambda
    }

    /// `prod (Z - lambda_i)`, monic, ascending coefficients.
    pub fn charpoly(&self) -> &Poly<NFElem> {
        &self.charpoly
    }

    /// Number of roots after merging.
    pub fn order(&self) -> usize {
        self.lambda.len()
    }

    /// Family indices feeding each root.
    pub fn origins(&self) -> &[Vec<usize>] {
        &self.origins
    }

    /// Family index groups whose merged coefficient vanished.
    pub fn cancelled(&self) -> &[Vec<usize>] {
        &self.cancelled
    }

    /// `A_0, ..., A_{k-1}` with `u_{n+k} = sum_i A_i u_{n+i}`.
    pub fn recurrence_coeffs(&self) -> Vec<NFElem> {
        let c = self.charpoly.coeffs();
        c[..c.len() - 1].iter().map(NFElem::neg).collect()
    }

    /// `u_n` from the closed form.
    pub fn term(&self, n: u64) -> NFElem {
        self.mu
            .iter()
            .zip(&self.lambda)
            .fold(self.field.zero(), |acc, (m, l)| acc.add(&m.mul(&l.pow_u(n))))
    }

    pub fn closed_form_terms(&self, count: usize) -> Vec<NFElem> {
        let mut cur = self.mu.clone();
        (0..count)
            .map(|_| {
                let s = cur.iter().fold(self.field.zero(), |a, t| a.add(t));
                for (c, l) in cur.iter_mut().zip(&self.lambda) {
                    *c = c.mul(l);
                }
                s
            })
            .collect()
    }

    /// `u_0, ..., u_{count-1}` by running the recurrence from the first `k`
    /// closed-form values.
    pub fn terms(&self, count: usize) -> Vec<NFElem> {
        let k = self.order();
        let mut out = self.closed_form_terms(count.min(k));
        let a = self.recurrence_coeffs();
        while out.len() < count {
            let n = out.len() - k;
            let next = (0..k).fold(self.field.zero(), |acc, i| acc.add(&a[i].mul(&out[n + i])));
            out.push(next);
        }
        out
    }
}

fn check_fields(mu: &[NFElem], lambda: &[NFElem]) -> Result<NumberField, LrsError> {
    if mu.len() != lambda.len() {
        return Err(LrsError::InvalidArgument("coefficient and root counts differ".into()));
    }
    let field = lambda
        .first()
        .ok_or_else(|| LrsError::InvalidArgument("empty sequence".into()))?
        .field()
        .clone();
    if mu.iter().chain(lambda).any(|x| !x.field().same_as(&field)) {
        return Err(AlgNumError::FieldMismatch.into());
    }
    Ok(field)
}

/// Root-of-unity ratios between roots and the certified set of roots of
/// maximal modulus under the field's designated embedding.
pub fn classify(spec: &SpecializedLRS) -> Result<Classification, LrsError> {
    let lam = spec.lambda();
    let mut degenerate_pairs = Vec::new();
    for i in 0..lam.len() {
        for j in i + 1..lam.len() {
            let r = lam[i].div(&lam[j])?;
            if let Some(m) = is_root_of_unity(&r)? {
                degenerate_pairs.push((i, j, m));
            }
        }
    }
    let emb = spec.field().root_index();
    let mut dominant_indices: Vec<usize> = Vec::new();
    for i in 0..lam.len() {
        match dominant_indices.first() {
            None => dominant_indices.push(i),
            Some(&d) => match modulus_compare(&lam[i], &lam[d], emb)? {
                Ordering::Greater => dominant_indices = vec![i],
                Ordering::Equal => dominant_indices.push(i),
                Ordering::Less => {}
            },
        }
    }
    let merged: Vec<Vec<usize>> = spec
        .origins()
        .iter()
        .chain(spec.cancelled())
        .filter(|o| o.len() > 1)
        .cloned()
        .collect();
    Ok(Classification {
        in_exceptional_set: !degenerate_pairs.is_empty() || !merged.is_empty(),
        degenerate_pairs,
        merged,
        dominant_count: dominant_indices.len(),
        dominant_indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rat};

    fn q_seq(mu: &[Rat], lambda: &[Rat]) -> SpecializedLRS {
        let q = NumberField::rationals();
        SpecializedLRS::new(
            mu.iter().map(|m| q.from_rat(m.clone())).collect(),
            lambda.iter().map(|l| q.from_rat(l.clone())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn opposite_roots_are_degenerate() {
        let s = q_seq(&[rat(1, 1), rat(-1, 1)], &[rat(-1, 2), rat(1, 2)]);
        let c = classify(&s).unwrap();
        assert_eq!(c.degenerate_pairs, vec![(0, 1, 2)]);
        assert_eq!(c.dominant_count, 2);
        assert!(c.in_exceptional_set);
    }

    #[test]
    fn single_dominant_root() {
        let s = q_seq(&[rat(1, 1), rat(-1, 1)], &[rat(2, 1), rat(3, 1)]);
        let c = classify(&s).unwrap();
        assert!(c.degenerate_pairs.is_empty());
        assert_eq!(c.dominant_indices, vec![1]);
        assert!(!c.in_exceptional_set);
    }

    #[test]
    fn complex_conjugate_roots() {
        let k = NumberField::new(&Poly::from_i64s(&[2, -1, 1]), 0).unwrap();
        let t = k.gen();
        let tb = k.one().sub(&t);
        let s = SpecializedLRS::new(vec![k.one(), k.one()], vec![t, tb]).unwrap();
        let c = classify(&s).unwrap();
        assert_eq!(c.dominant_count, 2);
        assert!(c.degenerate_pairs.is_empty());
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let s = q_seq(&[rat(1, 1), rat(-2, 1), rat(3, 5)], &[rat(4, 1), rat(2, 1), rat(-1, 3)]);
        assert_eq!(s.terms(12), s.closed_form_terms(12));
        assert_eq!(s.term(7), s.terms(8)[7]);
    }
}
