use alloc::sync::Arc;
use alloc::vec::Vec;

use super::CharacterError;
use crate::algebra::Cyclo;
use crate::groups::{conjugacy_in, ConjugacyData, Subgroup};

/// A function on conjugacy classes with values in the class ring `Z[zeta_m]`.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ConjugacyData>,
    values: Vec<Cyclo>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(classes: &Arc<ConjugacyData>, values: Vec<Cyclo>) -> Self {
        assert_eq!(values.len(), classes.num_classes(), "one value per class");
        ClassFunction { classes: Arc::clone(classes), values }
    }

    pub fn zero(classes: &Arc<ConjugacyData>) -> Self {
        let z = Cyclo::zero(classes.ring());
        ClassFunction::new(classes, alloc::vec![z; classes.num_classes()])
    }

    pub fn constant(classes: &Arc<ConjugacyData>, n: i64) -> Self {
        let c = Cyclo::integer(classes.ring(), n);
        ClassFunction::new(classes, alloc::vec![c; classes.num_classes()])
    }

    /// The regular character.
    pub fn regular(classes: &Arc<ConjugacyData>) -> Self {
        let mut f = ClassFunction::zero(classes);
        f.values[0] = Cyclo::integer(classes.ring(), classes.group().order() as i64);
        f
    }

    /// Builds a class function from a function on group elements, checking
    /// that it is constant on every class.
    pub fn from_element_fn(classes: &Arc<ConjugacyData>, f: impl Fn(usize) -> Cyclo) -> Result<Self, CharacterError> {
        let mut values = Vec::with_capacity(classes.num_classes());
        for c in 0..classes.num_classes() {
            let v = f(classes.representative(c));
            for &g in &classes.members(c)[1..] {
                if f(g as usize) != v {
                    return Err(CharacterError::NotClassFunction(c));
                }
            }
            values.push(v);
        }
        Ok(ClassFunction::new(classes, values))
    }

    pub fn classes(&self) -> &Arc<ConjugacyData> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclo {
        &self.values[class]
    }

    /// Value at a group element.
    pub fn at(&self, g: usize) -> &Cyclo {
        &self.values[self.classes.class_of(g)]
    }

    /// Value at the identity, which must be a rational integer.
    pub fn degree(&self) -> i64 {
        self.values[0].to_integer().expect("value at the identity is rational")
    }

    fn check_same(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.classes, &other.classes), "class functions on different groups");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        ClassFunction::new(&self.classes, values)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        ClassFunction::new(&self.classes, values)
    }

    pub fn scale(&self, k: i64) -> Self {
        ClassFunction::new(&self.classes, self.values.iter().map(|v| v.scale(k)).collect())
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        ClassFunction::new(&self.classes, values)
    }

    /// `g -> f(g^-1)`, computed through the power map.
    pub fn dual(&self) -> Self {
        let cd = &self.classes;
        let values = (0..cd.num_classes()).map(|c| self.values[cd.inverse_class(c)].clone()).collect();
        ClassFunction::new(cd, values)
    }

    /// `g -> f(g^k)`.
    pub fn power(&self, k: i64) -> Self {
        let cd = &self.classes;
        let values = (0..cd.num_classes()).map(|c| self.values[cd.power_class(c, k)].clone()).collect();
        ClassFunction::new(cd, values)
    }

    /// `sum_g f(g)` as an element of the class ring.
    pub fn total(&self) -> Cyclo {
        let ring = self.classes.ring();
        self.values
            .iter()
            .enumerate()
            .fold(Cyclo::zero(ring), |acc, (c, v)| &acc + &v.scale(self.classes.size(c) as i64))
    }

    /// `|G|^-1 sum_g f(g) conj(h(g))`, which must be a rational integer.
    pub fn inner(&self, other: &Self) -> Result<i64, CharacterError> {
        self.check_same(other);
        let ring = self.classes.ring();
        let mut acc = Cyclo::zero(ring);
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &(a * &b.conj()).scale(self.classes.size(c) as i64);
        }
        let n = self.classes.group().order() as i64;
        let s = acc.to_integer().map_err(|_| CharacterError::NotInteger)?;
        if s % n != 0 {
            return Err(CharacterError::NotInteger);
        }
        Ok(s / n)
    }

    /// Real-valued, i.e. fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| *v == v.conj())
    }
}

/// A subgroup together with its own conjugacy data (valued in the parent's
/// ring) and the fusion of its classes into the parent's classes.
#[derive(Debug, Clone)]
pub struct SubgroupClasses {
    subgroup: Subgroup,
    classes: Arc<ConjugacyData>,
    fusion: Vec<usize>,
    parent: Arc<ConjugacyData>,
}

impl SubgroupClasses {
    pub fn new(subgroup: &Subgroup, parent: &Arc<ConjugacyData>) -> Result<Self, CharacterError> {
        assert!(Arc::ptr_eq(subgroup.parent(), parent.group()), "subgroup of a different group");
        let group = subgroup.as_group();
        let classes = conjugacy_in(&group, parent.ring())?;
        // element i of the materialized subgroup is subgroup.elements()[i]
        let fusion = (0..classes.num_classes())
            .map(|c| parent.class_of(subgroup.elements()[classes.representative(c)]))
            .collect();
        Ok(SubgroupClasses { subgroup: subgroup.clone(), classes, fusion, parent: Arc::clone(parent) })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn classes(&self) -> &Arc<ConjugacyData> {
        &self.classes
    }

    pub fn parent(&self) -> &Arc<ConjugacyData> {
        &self.parent
    }

    /// Parent class containing the given subgroup class.
    pub fn fusion(&self, c: usize) -> usize {
        self.fusion[c]
    }

    /// Index in the materialized subgroup of a parent element index.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.subgroup.elements().binary_search(&g).ok()
    }
}

/// Restriction of a class function of the parent to the subgroup.
pub fn restrict(chi: &ClassFunction, h: &SubgroupClasses) -> ClassFunction {
    assert!(Arc::ptr_eq(chi.classes(), h.parent()), "restriction from a different group");
    let values = (0..h.classes.num_classes()).map(|c| chi.value(h.fusion[c]).clone()).collect();
    ClassFunction::new(&h.classes, values)
}

/// Induction to the parent: `Ind(psi)(C) = |G| / (|H| |C|) sum_{h in H cap C} psi(h)`.
pub fn induce(psi: &ClassFunction, h: &SubgroupClasses) -> Result<ClassFunction, CharacterError> {
    assert!(Arc::ptr_eq(psi.classes(), &h.classes), "class function on a different subgroup");
    let g = &h.parent;
    let ring = g.ring();
    let mut sums = alloc::vec![Cyclo::zero(ring); g.num_classes()];
    for c in 0..h.classes.num_classes() {
        let contrib = psi.value(c).scale(h.classes.size(c) as i64);
        sums[h.fusion[c]] = &sums[h.fusion[c]] + &contrib;
    }
    let order_g = g.group().order() as i64;
    let order_h = h.subgroup.order() as i64;
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| s.scale(order_g).div_exact(order_h * g.size(c) as i64).map_err(|_| CharacterError::NotInteger))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassFunction::new(g, values))
}
