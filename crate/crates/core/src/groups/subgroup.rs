use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::group::{GroupElem, GroupKind, Law};
use super::{Group, GroupError};
use crate::algebra::FieldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupTag {
    /// Scalar matrices in the group.
    Z,
    /// Upper unitriangular matrices.
    N,
    /// Diagonal matrices.
    T,
    /// Upper triangular matrices.
    B,
    /// Scalars times unitriangular matrices.
    ZN,
    /// Elliptic torus `F_q[C]^x` for the companion matrix `C` of the lowest
    /// irreducible monic quadratic; `GL(2,q)` only.
    Te,
    /// A quaternion subgroup of order 8.
    Q,
}

impl SubgroupTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SubgroupTag::Z => "Z",
            SubgroupTag::N => "N",
            SubgroupTag::T => "T",
            SubgroupTag::B => "B",
            SubgroupTag::ZN => "ZN",
            SubgroupTag::Te => "Te",
            SubgroupTag::Q => "Q",
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A subgroup given by a sorted set of parent element indices.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    elements: Vec<usize>,
    tag: SubgroupTag,
}

impl Subgroup {
    pub(crate) fn new(parent: &Arc<Group>, mut elements: Vec<usize>, tag: SubgroupTag) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { parent: Arc::clone(parent), elements, tag }
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn tag(&self) -> SubgroupTag {
        self.tag
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_subgroup(&self) -> bool {
        let g = &self.parent;
        self.contains(g.identity())
            && self.elements.iter().all(|&x| self.contains(g.inv(x)))
            && self.elements.iter().all(|&x| self.elements.iter().all(|&y| self.contains(g.mul(x, y))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&x| self.elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// The subgroup as a standalone group (same elements, same law).
    pub fn as_group(&self) -> Arc<Group> {
        let name = alloc::format!("{}<{}", self.tag, self.parent.name());
        Arc::new(self.parent.subgroup_as_group(name, &self.elements))
    }
}

fn collect(g: &Arc<Group>, pred: impl Fn(&[u32; 4]) -> bool) -> Vec<usize> {
    (0..g.order())
        .filter(|&i| match g.elem(i) {
            GroupElem::Matrix(m) => pred(m),
            GroupElem::Quaternion { .. } => false,
        })
        .collect()
}

fn elliptic_torus(g: &Arc<Group>, f: &FieldSpec) -> Vec<usize> {
    // companion matrix of t^2 + c1 t + c0: rows (0, -c0), (1, -c1)
    let (c0, c1) = f.lowest_irreducible_quadratic();
    let comp = [0, f.neg(c0), 1, f.neg(c1)];
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            if a == 0 && b == 0 {
                continue;
            }
            let m = [f.add(a, f.mul(b, comp[0])), f.mul(b, comp[1]), f.mul(b, comp[2]), f.add(a, f.mul(b, comp[3]))];
            out.push(g.index_of(&GroupElem::Matrix(m)).expect("torus lies in GL(2,q)"));
        }
    }
    out
}

/// One of the standard subgroups of `SL(2,q)` or `GL(2,q)`.
///
/// `Z` of `SL(2,q)` is trivial for even `q`. `Te` exists only in `GL(2,q)`;
/// quaternion subgroups come from [`super::find_quaternion`].
pub fn standard_subgroup(g: &Arc<Group>, tag: SubgroupTag) -> Result<Subgroup, GroupError> {
    let unsupported = || GroupError::UnsupportedTag { tag: tag.as_str(), group: g.name().to_string() };
    let f = match g.law() {
        Law::Matrix(f) => Arc::clone(f),
        Law::Quaternion(_) => return Err(unsupported()),
    };
    let is_gl = matches!(g.kind(), GroupKind::Gl2 { .. });
    let is_sl = matches!(g.kind(), GroupKind::Sl2 { .. });
    if !is_gl && !is_sl {
        return Err(unsupported());
    }
    let elements = match tag {
        SubgroupTag::Z => collect(g, |&[a, b, c, d]| b == 0 && c == 0 && a == d),
        SubgroupTag::N => collect(g, |&[a, _, c, d]| a == 1 && c == 0 && d == 1),
        SubgroupTag::T => collect(g, |&[_, b, c, _]| b == 0 && c == 0),
        SubgroupTag::B => collect(g, |&[_, _, c, _]| c == 0),
        SubgroupTag::ZN => collect(g, |&[a, _, c, d]| c == 0 && a == d),
        SubgroupTag::Te if is_gl => elliptic_torus(g, &f),
        SubgroupTag::Te | SubgroupTag::Q => return Err(unsupported()),
    };
    Ok(Subgroup::new(g, elements, tag))
}
