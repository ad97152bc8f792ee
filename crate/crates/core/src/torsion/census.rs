use super::level::{level_curve_points, LevelPoint};
use super::TorsionError;
use crate::exactalg::RatFunc;

#[derive(Clone, Debug)]
pub struct CensusPoint {
    /// First triple `(r, s, t)` on which the point was found.
    pub triple: (usize, usize, usize),
    pub point: LevelPoint,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub points: Vec<CensusPoint>,
    pub count: usize,
    /// Triples whose level curves share a whole component.
    pub infinite_triples: Vec<(usize, usize, usize)>,
    /// Triples with a constant ratio `f_s / f_r` or `f_t / f_r`.
    pub skipped_triples: Vec<(usize, usize, usize)>,
    pub d: usize,
    pub k: usize,
    /// `2 d^2 k (k-1) (k-2) / 3`.
    pub bound: usize,
}

/// Distinct `z` with `|f_r(z)| = |f_s(z)| = |f_t(z)|` for some triple
/// `r < s < t`, found as `|f_s / f_r| = |f_t / f_r| = 1`. Common zeros of a
/// whole triple are not counted.
pub fn triple_dominance_census(f: &[RatFunc]) -> Result<CensusReport, TorsionError> {
    let k = f.len();
    if k < 3 {
        return Err(TorsionError::DegenerateInput("need at least three functions".into()));
    }
    if f.iter().any(RatFunc::is_zero) {
        return Err(TorsionError::DegenerateInput("zero function".into()));
    }
    let d = f.iter().map(RatFunc::degree).max().unwrap();
    let mut points: Vec<CensusPoint> = Vec::new();
    let mut infinite_triples = Vec::new();
    let mut skipped_triples = Vec::new();
    for r in 0..k {
        for s in r + 1..k {
            for t in s + 1..k {
                let g1 = f[s].div(&f[r])?;
                let g2 = f[t].div(&f[r])?;
                if g1.is_constant() || g2.is_constant() {
                    skipped_triples.push((r, s, t));
                    continue;
                }
                let sol = level_curve_points(&g1, &g2)?;
                if sol.infinite_flag {
                    infinite_triples.push((r, s, t));
                    continue;
                }
                for p in sol.points {
                    if !points.iter().any(|q| same_point(&q.point, &p)) {
                        points.push(CensusPoint { triple: (r, s, t), point: p });
                    }
                }
            }
        }
    }
    points.sort_by(|p, q| {
        p.point
            .re
            .total_cmp(&q.point.re)
            .then(p.point.im.total_cmp(&q.point.im))
    });
    let count = points.len();
    Ok(CensusReport {
        points,
        count,
        infinite_triples,
        skipped_triples,
        d,
        k,
        bound: 2 * d * d * k * (k - 1) * (k - 2) / 3,
    })
}

/// Same minimal polynomial data and overlapping enclosures. Distinct roots
/// of one polynomial are far further apart than the certified radii.
fn same_point(a: &LevelPoint, b: &LevelPoint) -> bool {
    a.re_minpoly == b.re_minpoly
        && a.im_sq_minpoly == b.im_sq_minpoly
        && a.minpoly == b.minpoly
        && !a.ball.disjoint(&b.ball)
}
