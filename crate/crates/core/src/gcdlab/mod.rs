//! Common zeros of `prod f_i^{m_i} - u` and `prod g_j^{n_j} - v` for `u, v`
//! in the division group of a finitely generated subgroup of `Q*`.

mod group;
mod lab;

use thiserror::Error;

use crate::exactalg::ExactAlgError;

pub use group::{mult_indep_mod_group, Independence, RationalGroup};
pub use lab::{
    corollary_check, corollary_h, empirical_h, gcd_pair, mult_cap, CorollaryReport, GcdCell, GcdReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcdLabError {
    #[error("zero input")]
    ZeroInput,
    #[error("functions are multiplicatively dependent modulo the group (exponents {0:?})")]
    DependentInput(Vec<i64>),
    #[error("{0} is not in the division group")]
    NotInDivisionGroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}
