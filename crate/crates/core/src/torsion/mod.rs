//! Roots of unity and unit-circle conditions: cyclotomic roots, level-curve
//! intersections `|g1| = |g2| = 1`, exceptional polynomial pairs, and
//! bounded-order torsion points on plane curves.

mod census;
mod level;
mod pairs;
mod rou;

use thiserror::Error;

use crate::algnum::AlgNumError;
use crate::exactalg::ExactAlgError;

pub use census::{triple_dominance_census, CensusPoint, CensusReport};
pub use level::{level_curve_points, LevelCurveSolution, LevelPoint, MAX_SHEAR};
pub use pairs::exceptional_pair_poly;
pub use rou::{
    bivariate_rou_solutions, conjugate_poly, rou_roots, RouPair, TorsionSearch, DEFAULT_MAX_ORDER,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("polynomial has a factor of the form {form}")]
    DegenerateFactor { form: String },
    #[error("no separating shear found up to {0}")]
    NoSeparatingShear(i64),
    #[error(transparent)]
    AlgNum(#[from] AlgNumError),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}
