//! Truncated graded rings over F2, their elements and homomorphisms.

use alloc::string::String;

mod class;
mod hom;
mod ring;
mod steenrod;

pub use class::GradedClass;
pub use hom::RingHom;
pub use ring::{Mono, Relation, Ring, MAX_GENERATORS, MAX_TRUNCATION};
pub use steenrod::{dickson, dickson_invariants, steenrod_sq, total_sq};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(usize),
    #[error("classes live in different rings")]
    RingMismatch,
    #[error("images violate relation {0}")]
    RelationViolation(usize),
    #[error("operation not supported on {0}")]
    UnsupportedRing(String),
    #[error("truncation {have} is below the required degree {need}")]
    TruncationTooLow { need: u32, have: u32 },
    #[error("truncation {0} exceeds the supported maximum")]
    TruncationTooHigh(u32),
    #[error("class is not a unit")]
    NotUnit,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("image of generator {0} has the wrong degree")]
    DegreeMismatch(usize),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("too many generators ({0})")]
    TooManyGenerators(usize),
    #[error("generators must have positive degree")]
    ZeroDegreeGenerator,
    #[error("unexpected component in degree {0}")]
    UnexpectedComponent(u32),
}
