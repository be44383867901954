//! Exact Stiefel-Whitney classes for orthogonal representations of `SL(2,q)`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation: finite fields and cyclotomic integers, concrete matrix and
//! quaternion groups, exact character tables, finitely presented graded
//! `F2`-algebras, the closed-form total class formulas, and brute-force
//! oracles that recompute every class from restrictions to small detecting
//! subgroups.
//!
//! IO, the command line and file formats live in the `sl2swc` companion crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod characters;
pub mod cohomology;
pub mod groups;
pub mod oracle;
pub mod swc;

pub use algebra::{Cyclo, CycloRing, FieldElement, FieldSpec};
pub use characters::{CharacterTable, ClassFunction, VirtualRep};
pub use cohomology::{GradedClass, Ring, RingHom};
pub use groups::{ConjugacyData, Group, GroupElem, Subgroup, SubgroupTag};
pub use swc::{SwcReport, TotalSwc};
