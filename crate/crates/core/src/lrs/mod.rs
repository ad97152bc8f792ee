//! Parametric families `F_n = sum_i a_i f_i^n`: expansion, specialization at
//! algebraic points, classification of the specialized sequence, and
//! recurrence-order detection through Hankel determinants.

mod family;
mod hankel;
mod special;

use thiserror::Error;

use crate::algnum::AlgNumError;

pub use family::{validate_family, FamilyIssue, ParametricFamily};
pub use hankel::{
    hankel_numeric, hankel_symbolic, hankel_symbolic_range, is_lrs_functional, HankelReport, LrsVerdict,
};
pub use special::{classify, Classification, SpecializedLRS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LrsError {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("{which}_{index} has a pole at the specialization point")]
    PoleError { which: char, index: usize },
    #[error("exceptional point: {0}")]
    ExceptionalPoint(String),
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    AlgNum(#[from] AlgNumError),
}
