use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CohomologyError, GradedClass, Mono, Ring};

/// A degree-preserving ring homomorphism given by generator images.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Arc<Ring>,
    target: Arc<Ring>,
    images: Vec<GradedClass>,
}

impl RingHom {
    /// Checks that each image is homogeneous of its generator's degree and
    /// that the images satisfy every relation of the source.
    pub fn new(source: &Arc<Ring>, target: &Arc<Ring>, images: Vec<GradedClass>) -> Result<Self, CohomologyError> {
        if images.len() != source.generators().len() {
            return Err(CohomologyError::ImageCount { expected: source.generators().len(), got: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if **img.ring() != **target {
                return Err(CohomologyError::RingMismatch);
            }
            if let Some(d) = img.homogeneous_degree() {
                if d != source.degrees()[i] {
                    return Err(CohomologyError::DegreeMismatch(i));
                }
            } else if !img.is_zero() {
                return Err(CohomologyError::DegreeMismatch(i));
            }
        }
        let hom = RingHom { source: Arc::clone(source), target: Arc::clone(target), images };
        for (i, rel) in source.relations().iter().enumerate() {
            let mut acc = GradedClass::zero(target);
            for m in rel {
                acc.add_assign(&hom.image_of_mono(m))?;
            }
            if !acc.is_zero() {
                return Err(CohomologyError::RelationViolation(i));
            }
        }
        Ok(hom)
    }

    /// Images given by generator name; unnamed generators map to zero.
    pub fn from_named(
        source: &Arc<Ring>,
        target: &Arc<Ring>,
        named: &[(&str, GradedClass)],
    ) -> Result<Self, CohomologyError> {
        let mut images = vec![GradedClass::zero(target); source.generators().len()];
        for (name, img) in named {
            let i = source.generator_index(name).ok_or_else(|| CohomologyError::UnknownGenerator((*name).into()))?;
            images[i] = img.clone();
        }
        RingHom::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn image(&self, generator: usize) -> &GradedClass {
        &self.images[generator]
    }

    fn image_of_mono(&self, m: &Mono) -> GradedClass {
        let mut acc = GradedClass::one(&self.target);
        for (i, &e) in m.0.iter().enumerate().take(self.images.len()) {
            if e > 0 {
                acc = acc.mul(&self.images[i].pow(e as u64)).expect("same target ring");
            }
        }
        acc
    }

    pub fn apply(&self, a: &GradedClass) -> Result<GradedClass, CohomologyError> {
        if **a.ring() != *self.source {
            return Err(CohomologyError::RingMismatch);
        }
        let mut acc = GradedClass::zero(&self.target);
        for (_, m) in a.terms() {
            acc.add_assign(&self.image_of_mono(m))?;
        }
        Ok(acc)
    }

    /// `H*(Q_8) -> H*(Z)`: `x, y -> 0`, `e -> v^4`.
    pub fn quaternion_to_center(truncation: u32) -> Result<Self, CohomologyError> {
        let q = Ring::quaternion8(truncation)?;
        let z = Ring::elementary_abelian(1, truncation)?;
        let v4 = GradedClass::generator(&z, "v")?.pow(4);
        RingHom::from_named(&q, &z, &[("e", v4)])
    }

    /// `H*(Q_{2^n}) -> H*(Q_8)`: `X, Y -> 0`, `E -> e`.
    pub fn gen_quaternion_to_quaternion(n: u32, truncation: u32) -> Result<Self, CohomologyError> {
        let src = Ring::gen_quaternion(n, truncation)?;
        let q = Ring::quaternion8(truncation)?;
        let e = GradedClass::generator(&q, "e")?;
        RingHom::from_named(&src, &q, &[("E", e)])
    }

    /// `F2[e] -> H*(Z)`: `e -> v^4`.
    pub fn swc_to_center(truncation: u32) -> Result<Self, CohomologyError> {
        let s = Ring::swc_odd(truncation)?;
        let z = Ring::elementary_abelian(1, truncation)?;
        let v4 = GradedClass::generator(&z, "v")?.pow(4);
        RingHom::from_named(&s, &z, &[("e", v4)])
    }

    /// `F2[e] -> H*(SL(2,q))`, `q` odd: `e -> e`.
    pub fn swc_inclusion(truncation: u32) -> Result<Self, CohomologyError> {
        let s = Ring::swc_odd(truncation)?;
        let g = Ring::sl2_odd(truncation)?;
        let e = GradedClass::generator(&g, "e")?;
        RingHom::from_named(&s, &g, &[("e", e)])
    }

    /// `F2[d1..dr] -> F2[v1..vr]`: `d_i` to the Dickson invariants.
    pub fn dickson_expansion(r: usize, truncation: u32) -> Result<Self, CohomologyError> {
        let src = Ring::dickson_abstract(r, truncation)?;
        let target = Ring::elementary_abelian(r, truncation.max((1 << r) - 1))?;
        let d = super::dickson_invariants(&target)?;
        let target_t = Ring::elementary_abelian(r, truncation)?;
        let images = d.into_iter().map(|c| c.transfer(&target_t)).collect::<Result<Vec<_>, _>>()?;
        RingHom::new(&src, &target_t, images)
    }
}
