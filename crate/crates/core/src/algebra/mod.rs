//! Exact arithmetic: small-integer number theory, `GF(p^r)` and `Z[zeta_m]`.

pub mod arith;
mod cyclo;
mod field;

pub use cyclo::{cyclo_make, Cyclo, CycloRing};
pub use field::{field_make, field_trace, FieldElement, FieldSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    CompositeP(u64),
    #[error("field degree must be positive")]
    ZeroDegree,
    #[error("field of order {0} is too large")]
    FieldTooLarge(u64),
    #[error("cyclotomic value is not a rational integer")]
    NotRationalInteger,
    #[error("cyclotomic rings differ (m = {0} vs m = {1})")]
    RingMismatch(u32, u32),
    #[error("value is not divisible by {0}")]
    NotDivisible(i64),
}
