use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::group::{GroupElem, GroupKind, Law};
use super::{Group, GroupError, Subgroup, SubgroupTag};

/// The generalized quaternion group `Q_{2^n}` on words `a^k b^l`.
pub fn gen_quaternion(n: u32) -> Result<Arc<Group>, GroupError> {
    if !(3..=16).contains(&n) {
        return Err(GroupError::BadQuaternionOrder);
    }
    let m = 1u32 << (n - 1);
    let elems = (0..m).flat_map(|k| [GroupElem::Quaternion { k, l: 0 }, GroupElem::Quaternion { k, l: 1 }]).collect();
    Ok(Arc::new(Group::from_parts(
        format!("Q{}", 1u32 << n),
        GroupKind::GenQuaternion { n },
        Law::Quaternion(n),
        elems,
        GroupElem::Quaternion { k: 0, l: 0 },
    )))
}

/// A subgroup isomorphic to `Q_8` with chosen generators `x, y`:
/// `x^2 = y^2 = -1`, `y x y^-1 = x^-1`.
#[derive(Debug, Clone)]
pub struct QuaternionEmbedding {
    subgroup: Subgroup,
    x: usize,
    y: usize,
    /// `(element, i, j)` with element = `x^i y^j`, `0 <= i < 4`, `0 <= j < 2`.
    words: Vec<(usize, u8, u8)>,
}

impl QuaternionEmbedding {
    /// Checks the defining relations and builds the embedding.
    pub fn new(g: &Arc<Group>, x: usize, y: usize) -> Result<Self, GroupError> {
        let minus = g.minus_one().ok_or(GroupError::EvenQ)?;
        let ok = g.mul(x, x) == minus && g.mul(y, y) == minus && g.mul(g.mul(y, x), g.inv(y)) == g.inv(x);
        if !ok {
            return Err(GroupError::NotFound);
        }
        let mut words = Vec::with_capacity(8);
        let mut xi = g.identity();
        for i in 0..4u8 {
            words.push((xi, i, 0));
            words.push((g.mul(xi, y), i, 1));
            xi = g.mul(xi, x);
        }
        let subgroup = Subgroup::new(g, words.iter().map(|w| w.0).collect(), SubgroupTag::Q);
        debug_assert_eq!(subgroup.order(), 8);
        Ok(QuaternionEmbedding { subgroup, x, y, words })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn words(&self) -> &[(usize, u8, u8)] {
        &self.words
    }
}

fn check_parity(g: &Arc<Group>) -> Result<usize, GroupError> {
    match g.law() {
        Law::Matrix(f) if f.p() == 2 => Err(GroupError::EvenQ),
        _ => g.minus_one().ok_or(GroupError::NotFound),
    }
}

/// Iterates over all valid generator pairs `(x, y)` in canonical order.
fn pairs(g: &Arc<Group>, minus: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    let roots: Vec<usize> = (0..g.order()).filter(|&x| g.mul(x, x) == minus).collect();
    let roots2 = roots.clone();
    roots.into_iter().flat_map(move |x| {
        let xinv = g.inv(x);
        roots2.clone().into_iter().filter(move |&y| g.mul(g.mul(y, x), g.inv(y)) == xinv).map(move |y| (x, y))
    })
}

/// The first `Q_8` found in canonical order.
pub fn find_quaternion(g: &Arc<Group>) -> Result<QuaternionEmbedding, GroupError> {
    let minus = check_parity(g)?;
    let (x, y) = pairs(g, minus).next().ok_or(GroupError::NotFound)?;
    QuaternionEmbedding::new(g, x, y)
}

/// Up to `count` distinct embeddings of `Q_8`. Distinct subgroups are taken
/// first; when there are fewer than `count` of them the remainder are other
/// generator pairs of subgroups already found.
pub fn find_quaternions(g: &Arc<Group>, count: usize) -> Result<Vec<QuaternionEmbedding>, GroupError> {
    let minus = check_parity(g)?;
    let mut found: Vec<QuaternionEmbedding> = Vec::new();
    let mut spare: Vec<(usize, usize)> = Vec::new();
    for (x, y) in pairs(g, minus) {
        if found.len() >= count {
            break;
        }
        if found.iter().any(|e| e.subgroup.contains(x) && e.subgroup.contains(y)) {
            if spare.len() < count {
                spare.push((x, y));
            }
            continue;
        }
        found.push(QuaternionEmbedding::new(g, x, y)?);
    }
    for (x, y) in spare {
        if found.len() >= count {
            break;
        }
        found.push(QuaternionEmbedding::new(g, x, y)?);
    }
    if found.is_empty() {
        return Err(GroupError::NotFound);
    }
    Ok(found)
}
