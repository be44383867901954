//! Concrete finite groups: `SL(2,q)`, `GL(2,q)`, generalized quaternions,
//! their conjugacy classes and the standard subgroups.

mod conjugacy;
mod group;
mod quaternion;
mod subgroup;

pub use conjugacy::{conjugacy, conjugacy_in, ConjugacyData};
pub use group::{build_gl2, build_sl2, Group, GroupElem, GroupKind, DEFAULT_Q_CAP};
pub use quaternion::{find_quaternion, find_quaternions, gen_quaternion, QuaternionEmbedding};
pub use subgroup::{standard_subgroup, Subgroup, SubgroupTag};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("q = {q} exceeds the configured cap {cap}")]
    TooLarge { q: u64, cap: u64 },
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("subgroup {tag} is undefined for {group}")]
    UnsupportedTag { tag: &'static str, group: alloc::string::String },
    #[error("no quaternion subgroup exists for even q")]
    EvenQ,
    #[error("quaternion search found no subgroup")]
    NotFound,
    #[error("generalized quaternion groups need n >= 3")]
    BadQuaternionOrder,
    #[error("power map depends on the class representative (class {0})")]
    InconsistentPowerMap(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
