//! Class functions, exact character tables, induction and restriction,
//! symmetrization and the orthogonally irreducible decomposition.

mod class_function;
mod constructions;
mod dixon;
mod table;
mod virtual_rep;

pub use class_function::{induce, restrict, ClassFunction, SubgroupClasses};
pub use constructions::{cuspidal, cuspidal_exponents, principal_series, principal_series_exponents};
pub use dixon::{char_table, dixon_prime};
pub use table::{fs_indicator, CharacterTable};
pub use virtual_rep::{decompose_orthogonal, oir_basis, symmetrize, Oir, VirtualRep};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groups::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("character table validation failed: {0}")]
    LiftFailure(&'static str),
    #[error("indicator sum is not -1, 0 or 1")]
    NotIndicator,
    #[error("value is not a rational integer")]
    NotInteger,
    #[error("function is not constant on class {0}")]
    NotClassFunction(usize),
    #[error("class function is not an integer combination of irreducibles")]
    NotVirtualCharacter,
    #[error("representation is not orthogonal (constituent X{})", .0 + 1)]
    NotOrthogonal(usize),
    #[error("no irreducible with index {0}")]
    UnknownIrreducible(usize),
    #[error("{construction}({exponent}): {reason}")]
    BadConstructionParams { construction: &'static str, exponent: i64, reason: &'static str },
    #[error("construction needs a table of SL(2,q)")]
    NotSl2,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
