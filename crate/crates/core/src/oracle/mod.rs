//! Brute-force Stiefel-Whitney classes from restrictions to small subgroups,
//! and checks of the closed formulas against them.

mod restriction;
mod verify;

pub use restriction::{
    additive_form, center_profile, n_profile, oracle_swc_n, oracle_swc_q, oracle_swc_q_in, oracle_swc_z,
    quaternion_profile, swc_from_sign_count, RestrictionProfile,
};
pub use verify::{
    gen_quaternion_coherence, verify_theorem, verify_theorem_in, wu_holds, wu_rhs, wu_verify, TheoremCheck,
    TheoremContext,
};

use alloc::string::String;

use thiserror::Error;

use crate::characters::CharacterError;
use crate::cohomology::CohomologyError;
use crate::groups::GroupError;
use crate::swc::SwcError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("embedding does not lie in the group of the representation")]
    BadEmbedding,
    #[error("operation needs q {expected}")]
    WrongParity { expected: &'static str },
    #[error("representation is not of SL(2,q)")]
    NotSl2,
    #[error("inner product {0} is not an integer multiple of the group order")]
    NotIntegral(String),
    #[error("rho occurs {0} times, which is odd; the representation is not orthogonal")]
    OddRhoMultiplicity(i64),
    #[error("restriction profile does not balance: {0}")]
    Unbalanced(&'static str),
    #[error("{what}: first difference in degree {degree}: {lhs} vs {rhs}")]
    Mismatch { what: &'static str, degree: u32, lhs: String, rhs: String },
    #[error(transparent)]
    Swc(#[from] SwcError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
