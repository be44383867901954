use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::ring::NormalForm;
use super::{CohomologyError, Mono, Ring};

/// An element of a truncated graded ring: a set of standard monomials.
#[derive(Clone)]
pub struct GradedClass {
    ring: Arc<Ring>,
    terms: BTreeSet<(u32, Mono)>,
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedClass {}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.name())
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (_, monos) in self.by_degree_monos() {
            for m in monos {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                f.write_str(&self.ring.format_mono(&m))?;
            }
        }
        Ok(())
    }
}

impl GradedClass {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        GradedClass { ring: Arc::clone(ring), terms: BTreeSet::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        GradedClass::monomial(ring, Mono::ONE)
    }

    /// Normal form of a single monomial.
    pub fn monomial(ring: &Arc<Ring>, m: Mono) -> Self {
        let mut c = GradedClass::zero(ring);
        c.toggle_nf(&m);
        c
    }

    /// The generator with the given name.
    pub fn generator(ring: &Arc<Ring>, name: &str) -> Result<Self, CohomologyError> {
        let i = ring.generator_index(name).ok_or_else(|| CohomologyError::UnknownGenerator(name.into()))?;
        Ok(GradedClass::monomial(ring, Mono::generator(i)))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn toggle(&mut self, deg: u32, m: Mono) {
        if !self.terms.remove(&(deg, m)) {
            self.terms.insert((deg, m));
        }
    }

    pub(crate) fn toggle_nf(&mut self, m: &Mono) {
        let ring = Arc::clone(&self.ring);
        let deg = ring.mono_degree(m);
        match ring.normal_form(m) {
            NormalForm::Zero => {}
            NormalForm::One(s) => self.toggle(deg, s),
            NormalForm::Many(list) => {
                for &s in list {
                    self.toggle(deg, s);
                }
            }
        }
    }

    /// Standard monomials with their degrees, degree ascending.
    pub fn terms(&self) -> impl Iterator<Item = &(u32, Mono)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.has_unit_constant()
    }

    fn has_unit_constant(&self) -> bool {
        self.terms.contains(&(0, Mono::ONE))
    }

    /// Constant term 1, so invertible in the truncated ring.
    pub fn is_unit(&self) -> bool {
        self.has_unit_constant()
    }

    pub fn contains(&self, m: &Mono) -> bool {
        self.terms.contains(&(self.ring.mono_degree(m), *m))
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> GradedClass {
        let terms = self.terms.range((d, Mono::ONE)..).take_while(|t| t.0 == d).copied().collect();
        GradedClass { ring: Arc::clone(&self.ring), terms }
    }

    /// Drops everything above degree `d`.
    pub fn truncate(&self, d: u32) -> GradedClass {
        let terms = self.terms.iter().take_while(|t| t.0 <= d).copied().collect();
        GradedClass { ring: Arc::clone(&self.ring), terms }
    }

    /// Lowest degree `> 0` with a nonzero component.
    pub fn lowest_positive_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0).find(|&d| d > 0)
    }

    /// Highest degree with a nonzero component.
    pub fn top_degree(&self) -> Option<u32> {
        self.terms.iter().next_back().map(|t| t.0)
    }

    /// Homogeneous of a single degree (zero counts as homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.iter().next()?.0;
        self.terms.iter().all(|t| t.0 == first).then_some(first)
    }

    /// Degrees present, ascending, with the monomials of each degree in
    /// decreasing lexicographic order.
    pub fn by_degree_monos(&self) -> Vec<(u32, Vec<Mono>)> {
        let mut out: Vec<(u32, Vec<Mono>)> = Vec::new();
        for &(d, m) in &self.terms {
            match out.last_mut() {
                Some((ld, v)) if *ld == d => v.push(m),
                _ => out.push((d, alloc::vec![m])),
            }
        }
        for (_, v) in out.iter_mut() {
            v.reverse();
        }
        out
    }

    /// Serializable form: degree and monomial strings.
    pub fn by_degree(&self) -> Vec<(u32, Vec<String>)> {
        self.by_degree_monos()
            .into_iter()
            .map(|(d, v)| (d, v.iter().map(|m| self.ring.format_mono(m)).collect()))
            .collect()
    }

    fn check_ring(&self, other: &Self) -> Result<(), CohomologyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(CohomologyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_ring(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).copied().collect();
        Ok(GradedClass { ring: Arc::clone(&self.ring), terms })
    }

    /// In-place sum.
    pub fn add_assign(&mut self, other: &Self) -> Result<(), CohomologyError> {
        self.check_ring(other)?;
        if other.terms.len() * 8 > self.terms.len() {
            self.terms = self.terms.symmetric_difference(&other.terms).copied().collect();
            return Ok(());
        }
        for t in &other.terms {
            if !self.terms.remove(t) {
                self.terms.insert(*t);
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn push_nf(&self, raw: &mut Vec<(u32, Mono)>, d: u32, m: &Mono) {
        match self.ring.normal_form(m) {
            NormalForm::Zero => {}
            NormalForm::One(s) => raw.push((d, s)),
            NormalForm::Many(list) => raw.extend(list.iter().map(|s| (d, *s))),
        }
    }

    /// The class whose terms occur an odd number of times in `raw`.
    fn collect_raw(&self, mut raw: Vec<(u32, Mono)>) -> Self {
        raw.sort_unstable();
        let mut kept: Vec<(u32, Mono)> = Vec::with_capacity(raw.len());
        for t in raw {
            if kept.last() == Some(&t) {
                kept.pop();
            } else {
                kept.push(t);
            }
        }
        GradedClass { ring: Arc::clone(&self.ring), terms: kept.into_iter().collect() }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d_max = self.ring.truncation();
        let mut raw = Vec::new();
        for &(da, a) in &self.terms {
            for &(db, b) in &other.terms {
                if da + db > d_max {
                    break;
                }
                self.push_nf(&mut raw, da + db, &a.mul(&b));
            }
        }
        self.collect_raw(raw)
    }

    /// `self^2`, which is additive in characteristic 2.
    pub fn square(&self) -> Self {
        let mut raw = Vec::new();
        for &(d, m) in &self.terms {
            if 2 * d > self.ring.truncation() {
                break;
            }
            self.push_nf(&mut raw, 2 * d, &m.square());
        }
        self.collect_raw(raw)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = GradedClass::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `u^n` for a unit `u` and any integer `n`. Since `u^(2^K) = 1` once
    /// `2^K` exceeds the truncation degree, the exponent is reduced mod `2^K`
    /// and the power is taken as a product of iterated squares.
    pub fn pow_unit(&self, n: i64) -> Result<Self, CohomologyError> {
        GradedClass::one(&self.ring).mul_unit_pow(self, n)
    }

    /// `self * u^n` for a unit `u`, multiplying by the iterated squares of
    /// `u` one at a time (cheap when `u` is sparse).
    pub fn mul_unit_pow(&self, u: &Self, n: i64) -> Result<Self, CohomologyError> {
        self.check_ring(u)?;
        if !u.is_unit() {
            return Err(CohomologyError::NotUnit);
        }
        let k = unit_period_log2(self.ring.truncation());
        let e = n.rem_euclid(1i64 << k) as u64;
        let mut acc = self.clone();
        let mut frob = u.clone();
        for j in 0..k {
            if e >> j & 1 == 1 {
                acc = acc.mul_unchecked(&frob);
            }
            if e >> (j + 1) == 0 {
                break;
            }
            frob = frob.square();
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Result<Self, CohomologyError> {
        self.pow_unit(-1)
    }

    /// The same class in a ring with the same presentation (for instance a
    /// different truncation), dropping terms above the target truncation.
    pub fn transfer(&self, target: &Arc<Ring>) -> Result<Self, CohomologyError> {
        if self.ring.generators() != target.generators()
            || self.ring.degrees() != target.degrees()
            || self.ring.relations() != target.relations()
        {
            return Err(CohomologyError::RingMismatch);
        }
        let terms = self.terms.iter().take_while(|t| t.0 <= target.truncation()).copied().collect();
        Ok(GradedClass { ring: Arc::clone(target), terms })
    }
}

/// Smallest `K` with `2^K > D`.
pub(crate) fn unit_period_log2(truncation: u32) -> u32 {
    32 - truncation.leading_zeros()
}
