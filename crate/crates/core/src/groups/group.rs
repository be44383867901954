use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::GroupError;
use crate::algebra::arith::prime_power;
use crate::algebra::FieldSpec;

/// Default cap on `q` for matrix group enumeration.
pub const DEFAULT_Q_CAP: u64 = 81;

/// A group element: a 2x2 matrix `[a, b, c, d]` (row-major field codes) or a
/// normal-form quaternion word `a^k b^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupElem {
    Matrix([u32; 4]),
    Quaternion { k: u32, l: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Sl2 {
        q: u32,
    },
    Gl2 {
        q: u32,
    },
    GenQuaternion {
        n: u32,
    },
    /// A subgroup materialized as a group in its own right.
    Sub {
        parent: String,
    },
}

#[derive(Debug, Clone)]
pub(crate) enum Law {
    Matrix(Arc<FieldSpec>),
    /// Generalized quaternion of order `2^n`.
    Quaternion(u32),
}

/// A finite group with its elements listed in canonical order.
#[derive(Debug)]
pub struct Group {
    name: String,
    kind: GroupKind,
    law: Law,
    elems: Vec<GroupElem>,
    keys: Vec<u64>,
    identity: usize,
    inverse: Vec<u32>,
}

impl Law {
    fn key(&self, e: &GroupElem) -> u64 {
        match (self, e) {
            (Law::Matrix(f), GroupElem::Matrix(m)) => {
                let q = f.order() as u64;
                m.iter().fold(0u64, |acc, &x| acc * q + x as u64)
            }
            (Law::Quaternion(_), GroupElem::Quaternion { k, l }) => *k as u64 * 2 + *l as u64,
            _ => panic!("element does not match the group law"),
        }
    }

    fn mul(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        match (self, x, y) {
            (Law::Matrix(f), GroupElem::Matrix([a, b, c, d]), GroupElem::Matrix([e, g, h, i])) => {
                let m = |u, v| f.mul(u, v);
                GroupElem::Matrix([
                    f.add(m(*a, *e), m(*b, *h)),
                    f.add(m(*a, *g), m(*b, *i)),
                    f.add(m(*c, *e), m(*d, *h)),
                    f.add(m(*c, *g), m(*d, *i)),
                ])
            }
            (Law::Quaternion(n), GroupElem::Quaternion { k: k1, l: l1 }, GroupElem::Quaternion { k: k2, l: l2 }) => {
                // a^k1 b^l1 a^k2 b^l2 with b a b^-1 = a^-1 and b^2 = a^{M/2}
                let m = 1u32 << (n - 1);
                let k = if *l1 == 0 { k1 + k2 } else { k1 + m - k2 % m };
                let l = l1 + l2;
                if l == 2 {
                    GroupElem::Quaternion { k: (k + m / 2) % m, l: 0 }
                } else {
                    GroupElem::Quaternion { k: k % m, l }
                }
            }
            _ => panic!("element does not match the group law"),
        }
    }
}

fn sort_elements(law: &Law, mut elems: Vec<GroupElem>) -> (Vec<GroupElem>, Vec<u64>) {
    elems.sort_by_key(|e| law.key(e));
    elems.dedup();
    let keys = elems.iter().map(|e| law.key(e)).collect();
    (elems, keys)
}

impl Group {
    pub(crate) fn from_parts(
        name: String,
        kind: GroupKind,
        law: Law,
        elems: Vec<GroupElem>,
        identity: GroupElem,
    ) -> Self {
        let (elems, keys) = sort_elements(&law, elems);
        let mut g = Group { name, kind, law, elems, keys, identity: 0, inverse: Vec::new() };
        g.identity = g.index_of(&identity).expect("identity belongs to the group");
        g.inverse = (0..g.order())
            .map(|i| {
                // x^{-1} = x^{ord(x) - 1}
                let mut prev = g.identity;
                let mut cur = i;
                while cur != g.identity {
                    prev = cur;
                    cur = g.mul(cur, i);
                }
                prev as u32
            })
            .collect();
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn field(&self) -> Option<&Arc<FieldSpec>> {
        match &self.law {
            Law::Matrix(f) => Some(f),
            Law::Quaternion(_) => None,
        }
    }

    pub(crate) fn law(&self) -> &Law {
        &self.law
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &GroupElem {
        &self.elems[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, e: &GroupElem) -> Option<usize> {
        self.keys.binary_search(&self.law.key(e)).ok()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let prod = self.law.mul(&self.elems[i], &self.elems[j]);
        self.index_of(&prod).expect("group is closed under multiplication")
    }

    /// Product of raw elements, which need not lie in this group.
    pub fn mul_elems(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        self.law.mul(x, y)
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// `x^{-1} g x`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn pow(&self, i: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(i) } else { i };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, i: usize) -> u32 {
        let mut n = 1;
        let mut cur = i;
        while cur != self.identity {
            cur = self.mul(cur, i);
            n += 1;
        }
        n
    }

    /// The central element `-1`: `-I` for matrix groups in odd
    /// characteristic, `a^{2^{n-2}}` for quaternion groups.
    pub fn minus_one(&self) -> Option<usize> {
        match &self.law {
            Law::Matrix(f) => {
                if f.p() == 2 {
                    return None;
                }
                let m1 = f.neg(1);
                self.index_of(&GroupElem::Matrix([m1, 0, 0, m1]))
            }
            Law::Quaternion(n) => self.index_of(&GroupElem::Quaternion { k: 1 << (n - 2), l: 0 }),
        }
    }

    /// The unipotent element with rows `(1 1), (0 1)`.
    pub fn n0(&self) -> Option<usize> {
        match &self.law {
            Law::Matrix(_) => self.index_of(&GroupElem::Matrix([1, 1, 0, 1])),
            Law::Quaternion(_) => None,
        }
    }

    /// The field order `q` for matrix groups.
    pub fn q(&self) -> Option<u32> {
        self.field().map(|f| f.order())
    }

    /// Materializes a subset of this group, closed under products, as a group.
    pub fn subgroup_as_group(&self, name: String, indices: &[usize]) -> Group {
        let elems = indices.iter().map(|&i| self.elems[i]).collect();
        Group::from_parts(
            name,
            GroupKind::Sub { parent: self.name.clone() },
            self.law.clone(),
            elems,
            self.elems[self.identity],
        )
    }
}

fn matrix_field(q: u64, cap: u64) -> Result<Arc<FieldSpec>, GroupError> {
    if q > cap {
        return Err(GroupError::TooLarge { q, cap });
    }
    let (p, r) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    Ok(Arc::new(FieldSpec::new(p, r)?))
}

fn det(f: &FieldSpec, [a, b, c, d]: [u32; 4]) -> u32 {
    f.sub(f.mul(a, d), f.mul(b, c))
}

fn all_matrices(f: &FieldSpec, keep: impl Fn(u32) -> bool) -> Vec<GroupElem> {
    let q = f.order();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if keep(det(f, [a, b, c, d])) {
                        out.push(GroupElem::Matrix([a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

/// `SL(2,q)` for `q <= cap`.
pub fn build_sl2(q: u64, cap: u64) -> Result<Arc<Group>, GroupError> {
    let f = matrix_field(q, cap)?;
    let elems = all_matrices(&f, |d| d == 1);
    Ok(Arc::new(Group::from_parts(
        format!("SL(2,{q})"),
        GroupKind::Sl2 { q: q as u32 },
        Law::Matrix(f),
        elems,
        GroupElem::Matrix([1, 0, 0, 1]),
    )))
}

/// `GL(2,q)` for `q <= cap`.
pub fn build_gl2(q: u64, cap: u64) -> Result<Arc<Group>, GroupError> {
    let f = matrix_field(q, cap)?;
    let elems = all_matrices(&f, |d| d != 0);
    Ok(Arc::new(Group::from_parts(
        format!("GL(2,{q})"),
        GroupKind::Gl2 { q: q as u32 },
        Law::Matrix(f),
        elems,
        GroupElem::Matrix([1, 0, 0, 1]),
    )))
}
