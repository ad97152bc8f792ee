//! Algebraic numbers as number-field elements with certified complex
//! embeddings: root-of-unity detection, Weil heights, modulus comparison.

mod ball;
mod field;
mod height;
mod modulus;
mod roots;
mod rou;

use thiserror::Error;

use crate::exactalg::ExactAlgError;

pub use ball::CBall;
pub(crate) use ball::{isqrt_ceil, ratio_f64};
pub(crate) use field::eval_ball;
pub use field::{NFElem, NumberField};
pub use height::{height_of_minpoly, log_mahler_measure, weil_height, HeightValue, HEIGHT_TOLERANCE};
pub use modulus::modulus_compare;
pub use roots::{isolate_roots_of, DEFAULT_PREC, MAX_PREC};
pub use rou::{count_rou_degree, is_root_of_unity, rou_order_of_minpoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgNumError {
    #[error("minimal polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("root index {index} out of range for degree {degree}")]
    BadRootIndex { index: usize, degree: usize },
    #[error("embedding precision would exceed {0} bits")]
    PrecisionExceeded(u32),
    #[error("zero input rejected by {0}")]
    ZeroInput(&'static str),
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("no complex conjugation map is available for this field")]
    ConjugationUnavailable,
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}
