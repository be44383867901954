//! Closed-form total Stiefel-Whitney classes of orthogonal representations
//! of `SL(2,q)`.

mod formulas;
mod image;
mod report;

pub use formulas::{
    default_truncation, expanded_swc, m_pi, monomials_up_to, obstruction, r_pi, sl2_parameters, top_swc_nonzero,
    total_swc, Obstruction, Parity, Sl2Parameters, TopClass,
};
pub use image::{image_exponent, ImageExponent};
pub use report::{SwcReport, SwcRingKind, TotalSwc, EXPANSION_LIMIT};

use thiserror::Error;

use crate::characters::CharacterError;
use crate::cohomology::CohomologyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwcError {
    #[error("{value} is not divisible by {divisor}")]
    NotDivisible { value: i64, divisor: i64 },
    #[error("operation needs q {expected}")]
    WrongParity { expected: &'static str },
    #[error("representation is not of SL(2,q)")]
    NotSl2,
    #[error("representation is virtual")]
    NotGenuine,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
