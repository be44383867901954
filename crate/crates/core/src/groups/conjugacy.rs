use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{Group, GroupError};
use crate::algebra::arith::lcm;
use crate::algebra::CycloRing;

/// Conjugacy classes of a group together with the power map and the
/// cyclotomic ring in which class functions take values.
#[derive(Debug)]
pub struct ConjugacyData {
    group: Arc<Group>,
    class_of: Vec<u32>,
    classes: Vec<Vec<u32>>,
    orders: Vec<u32>,
    exponent: u32,
    /// `power[c][k]` is the class of `g^k` for `g` in class `c`, `0 <= k < exponent`.
    power: Vec<Vec<u32>>,
    ring: Arc<CycloRing>,
}

/// Conjugacy data with class functions valued in `Z[zeta_e]`, `e = exp(G)`.
pub fn conjugacy(group: &Arc<Group>) -> Result<Arc<ConjugacyData>, GroupError> {
    conjugacy_with(group, None)
}

/// Same as [`conjugacy`], with values in a caller-chosen ring whose order is
/// a multiple of the exponent (used for subgroups sharing a parent's ring).
pub fn conjugacy_in(group: &Arc<Group>, ring: &Arc<CycloRing>) -> Result<Arc<ConjugacyData>, GroupError> {
    conjugacy_with(group, Some(ring))
}

fn conjugacy_with(group: &Arc<Group>, ring: Option<&Arc<CycloRing>>) -> Result<Arc<ConjugacyData>, GroupError> {
    let n = group.order();
    const UNSET: u32 = u32::MAX;
    let mut class_of = vec![UNSET; n];
    let mut raw: Vec<Vec<u32>> = Vec::new();

    // identity first, then classes in order of their least element
    let mut seeds = Vec::with_capacity(n);
    seeds.push(group.identity());
    seeds.extend((0..n).filter(|&i| i != group.identity()));
    for g in seeds {
        if class_of[g] != UNSET {
            continue;
        }
        let id = raw.len() as u32;
        let mut members = Vec::new();
        for x in 0..n {
            let y = group.conj(g, x);
            if class_of[y] == UNSET {
                class_of[y] = id;
                members.push(y as u32);
            }
        }
        members.sort_unstable();
        raw.push(members);
    }

    let orders: Vec<u32> = raw.iter().map(|c| group.element_order(c[0] as usize)).collect();
    let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as u32;

    let mut power = Vec::with_capacity(raw.len());
    for (c, members) in raw.iter().enumerate() {
        let rep = members[0] as usize;
        let mut row = Vec::with_capacity(exponent as usize);
        let mut cur = group.identity();
        for _ in 0..exponent {
            row.push(class_of[cur]);
            cur = group.mul(cur, rep);
        }
        // every member's powers must land in the same classes
        for &g in &members[1..] {
            let g = g as usize;
            let mut cur = group.identity();
            for k in 0..orders[c] as usize {
                if class_of[cur] != row[k] {
                    return Err(GroupError::InconsistentPowerMap(c));
                }
                cur = group.mul(cur, g);
            }
        }
        power.push(row);
    }

    let ring = match ring {
        Some(r) => {
            assert!(r.m() % exponent == 0, "ring order must be a multiple of the exponent");
            Arc::clone(r)
        }
        None => CycloRing::new(exponent),
    };

    Ok(Arc::new(ConjugacyData { group: Arc::clone(group), class_of, classes: raw, orders, exponent, power, ring }))
}

impl ConjugacyData {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }

    pub fn members(&self, c: usize) -> &[u32] {
        &self.classes[c]
    }

    /// Least element of the class in canonical order.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0] as usize
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn element_order(&self, c: usize) -> u32 {
        self.orders[c]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Class of `g^k`, `g` in class `c`; `k` may be negative.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.power[c][k.rem_euclid(self.exponent as i64) as usize] as usize
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    pub fn identity_class(&self) -> usize {
        0
    }

    pub fn minus_one_class(&self) -> Option<usize> {
        self.group.minus_one().map(|g| self.class_of(g))
    }

    pub fn n0_class(&self) -> Option<usize> {
        self.group.n0().map(|g| self.class_of(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_gl2, build_sl2, DEFAULT_Q_CAP};

    fn classes(q: u64) -> Arc<ConjugacyData> {
        conjugacy(&build_sl2(q, DEFAULT_Q_CAP).unwrap()).unwrap()
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes(2).num_classes(), 3);
        assert_eq!(classes(3).num_classes(), 7);
        assert_eq!(classes(4).num_classes(), 5);
        // q + 4 classes for odd q, q + 1 for even q
        assert_eq!(classes(5).num_classes(), 9);
        assert_eq!(classes(7).num_classes(), 11);
        assert_eq!(classes(8).num_classes(), 9);
        assert_eq!(classes(9).num_classes(), 13);
    }

    #[test]
    fn class_equation() {
        for q in [3u64, 4, 5] {
            let cd = classes(q);
            let order = cd.group().order();
            assert_eq!(cd.sizes().iter().sum::<usize>(), order);
            assert!(cd.sizes().iter().all(|s| order.is_multiple_of(*s)));
        }
        let gl = conjugacy(&build_gl2(3, DEFAULT_Q_CAP).unwrap()).unwrap();
        assert_eq!(gl.num_classes(), 8);
    }

    #[test]
    fn identity_class_first_and_power_map() {
        let cd = classes(5);
        assert_eq!(cd.representative(0), cd.group().identity());
        for c in 0..cd.num_classes() {
            assert_eq!(cd.power_class(c, 0), 0);
            assert_eq!(cd.power_class(c, 1), c);
            assert_eq!(cd.power_class(c, cd.element_order(c) as i64), 0);
        }
        assert_eq!(cd.exponent(), 60);
    }
}
