//! Zeros of specialized sequences: bounded search, reduction of degenerate
//! sequences to non-degenerate subsequences along residue classes, and
//! surveys of the roots of `F_n` (factor degrees, heights).

mod survey;
mod zeros;

use thiserror::Error;

use crate::algnum::AlgNumError;
use crate::exactalg::ExactAlgError;
use crate::lrs::LrsError;

pub use survey::{
    min_factor_degree_survey, zero_height_survey, SurveyLimits, SurveyRecord, SurveyReport,
};
pub use zeros::{
    decompose_degenerate, find_zeros, render_zero_bound, sml_structure, Decomposition, SmlStructure,
    ZeroReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkolemError {
    #[error("family must be polynomial (clear denominators first)")]
    NotPolynomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Lrs(#[from] LrsError),
    #[error(transparent)]
    AlgNum(#[from] AlgNumError),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}
