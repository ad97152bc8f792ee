use crate::algnum::{height_of_minpoly, HeightValue, NumberField};
use crate::exactalg::{factor_over_q, Rat};
use crate::lrs::{classify, LrsError, ParametricFamily};

use super::SkolemError;

/// Size caps keeping factorizations desk-scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveyLimits {
    pub max_degree: usize,
    pub max_n: u64,
}

impl Default for SurveyLimits {
    fn default() -> Self {
        SurveyLimits { max_degree: 2000, max_n: 1000 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurveyRecord {
    pub n: u64,
    /// `None` when `F_n` vanishes identically.
    pub deg: Option<usize>,
    /// Irreducible factor degrees with multiplicity, ascending.
    pub factor_degrees: Vec<usize>,
    /// Largest height of a root of `F_n`, when heights were requested.
    pub max_root_height: Option<HeightValue>,
    /// Rational roots of `F_n` at which the family degenerates.
    pub exceptional_roots: Vec<Rat>,
    /// Reason the record was not computed (size caps).
    pub skipped: Option<String>,
}

impl SurveyRecord {
    pub fn min_deg(&self) -> Option<usize> {
        self.factor_degrees.first().copied()
    }

    pub fn max_deg(&self) -> Option<usize> {
        self.factor_degrees.last().copied()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurveyReport {
    pub records: Vec<SurveyRecord>,
}

impl SurveyReport {
    /// Largest root height over all records.
    pub fn max_height(&self) -> Option<&HeightValue> {
        self.records
            .iter()
            .filter_map(|r| r.max_root_height.as_ref())
            .max_by(|a, b| a.value.total_cmp(&b.value))
    }
}

/// Factors each `F_n` over `Q` and records the largest root height
/// `log M(g) / deg g` over its irreducible factors `g`.
pub fn zero_height_survey(
    fam: &ParametricFamily,
    ns: &[u64],
    limits: SurveyLimits,
) -> Result<SurveyReport, SkolemError> {
    survey(fam, ns, limits, true)
}

/// Irreducible factor degrees of each `F_n`, flagging rational roots that
/// are exceptional points of the family.
pub fn min_factor_degree_survey(
    fam: &ParametricFamily,
    ns: &[u64],
    limits: SurveyLimits,
) -> Result<SurveyReport, SkolemError> {
    survey(fam, ns, limits, false)
}

fn survey(
    fam: &ParametricFamily,
    ns: &[u64],
    limits: SurveyLimits,
    heights: bool,
) -> Result<SurveyReport, SkolemError> {
    if !fam.is_polynomial() {
        return Err(SkolemError::NotPolynomial);
    }
    let records = ns
        .iter()
        .map(|&n| record(fam, n, limits, heights))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SurveyReport { records })
}

fn record(fam: &ParametricFamily, n: u64, limits: SurveyLimits, heights: bool) -> Result<SurveyRecord, SkolemError> {
    let mut rec = SurveyRecord {
        n,
        deg: None,
        factor_degrees: Vec::new(),
        max_root_height: None,
        exceptional_roots: Vec::new(),
        skipped: None,
    };
    if n > limits.max_n {
        rec.skipped = Some(format!("n exceeds {}", limits.max_n));
        return Ok(rec);
    }
    let bound = fam.d().saturating_mul(n as usize + 1);
    if bound > limits.max_degree {
        rec.skipped = Some(format!("degree may exceed {}", limits.max_degree));
        return Ok(rec);
    }
    let fpoly = fam.expand(n).num().clone();
    if fpoly.is_zero() {
        return Ok(rec);
    }
    rec.deg = fpoly.degree();
    if rec.deg == Some(0) {
        return Ok(rec);
    }
    let fl = factor_over_q(&fpoly)?;
    rec.factor_degrees = fl.degrees();
    let q = NumberField::rationals();
    let mut best: Option<HeightValue> = None;
    for (g, _) in &fl.factors {
        if g.degree() == Some(1) {
            let root = -&g.coeffs()[0] / &g.coeffs()[1];
            let exceptional = match fam.specialize(&q.from_rat(root.clone())) {
                Err(LrsError::ExceptionalPoint(_)) => true,
                Err(e) => return Err(e.into()),
                Ok(s) => classify(&s)?.in_exceptional_set,
            };
            if exceptional {
                rec.exceptional_roots.push(root);
            }
        }
        if heights {
            let h = height_of_minpoly(g)?;
            if best.as_ref().map_or(true, |b| h.value > b.value) {
                best = Some(h);
            }
        }
    }
    rec.max_root_height = best;
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Poly};

    fn benchmark() -> ParametricFamily {
        ParametricFamily::from_polys(
            &[Poly::from_i64s(&[1]), Poly::from_i64s(&[-1])],
            &[Poly::from_i64s(&[0, 1]), Poly::from_i64s(&[1, 1])],
        )
        .unwrap()
    }

    #[test]
    fn factor_degrees_of_benchmark() {
        let r = min_factor_degree_survey(&benchmark(), &[2, 6, 7], SurveyLimits::default()).unwrap();
        assert_eq!(r.records[0].factor_degrees, vec![1]);
        assert_eq!(r.records[1].factor_degrees, vec![1, 2, 2]);
        assert_eq!(r.records[2].factor_degrees, vec![6]);
        // x = -1/2 makes x / (x + 1) = -1
        assert_eq!(r.records[0].exceptional_roots, vec![rat(-1, 2)]);
    }

    #[test]
    fn heights_of_x_pow_n_minus_two() {
        let fam = ParametricFamily::from_polys(
            &[Poly::from_i64s(&[1]), Poly::from_i64s(&[-2])],
            &[Poly::from_i64s(&[0, 1]), Poly::from_i64s(&[1])],
        )
        .unwrap();
        let r = zero_height_survey(&fam, &[1, 5, 12], SurveyLimits::default()).unwrap();
        for rec in &r.records {
            let h = rec.max_root_height.as_ref().unwrap();
            let want = std::f64::consts::LN_2 / rec.n as f64;
            assert!((h.value - want).abs() <= h.error_bound.max(1e-12));
        }
        assert!(r.records[0].max_root_height.as_ref().unwrap().exact);
    }

    #[test]
    fn caps_skip_records() {
        let lim = SurveyLimits { max_degree: 10, max_n: 1000 };
        let r = min_factor_degree_survey(&benchmark(), &[20], lim).unwrap();
        assert!(r.records[0].skipped.is_some());
    }
}
