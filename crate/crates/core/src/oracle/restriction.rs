use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::OracleError;
use crate::algebra::{Cyclo, FieldSpec};
use crate::characters::VirtualRep;
use crate::cohomology::{GradedClass, Mono, Ring};
use crate::groups::{GroupElem, QuaternionEmbedding, SubgroupTag};
use crate::swc::{SwcRingKind, TotalSwc};

/// Multiplicities of the irreducible characters of a small subgroup in the
/// restriction of a representation.
///
/// `Z`: `[trivial, sign]`. `Q`: `[1, chi1, chi2, chi3, rho]` where
/// `chi1(x^i y^j) = (-1)^j`, `chi2 = (-1)^i`, `chi3 = (-1)^(i+j)` and `rho` is
/// the 2-dimensional irreducible. `N`: one entry per additive character
/// `lambda_a(x) = (-1)^Tr(ax)`, indexed by the field code of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionProfile {
    pub tag: SubgroupTag,
    pub multiplicities: Vec<i64>,
}

impl RestrictionProfile {
    /// The number of `S(rho) = rho + rho` blocks, for a `Q` profile.
    pub fn s_rho_blocks(&self) -> Result<i64, OracleError> {
        let n = self.multiplicities[4];
        if n % 2 != 0 {
            return Err(OracleError::OddRhoMultiplicity(n));
        }
        Ok(n / 2)
    }

    /// Whether all nontrivial additive characters occur equally often, for an
    /// `N` profile.
    pub fn is_uniform(&self) -> bool {
        self.multiplicities[1..].windows(2).all(|w| w[0] == w[1])
    }
}

fn average(sum: Cyclo, n: i64) -> Result<i64, OracleError> {
    let s = sum.to_integer().map_err(|_| OracleError::NotIntegral(alloc::format!("{sum:?}")))?;
    if s % n != 0 {
        return Err(OracleError::NotIntegral(alloc::format!("{s}/{n}")));
    }
    Ok(s / n)
}

/// Restriction to the center `{1, -1}`, computed from character values.
pub fn center_profile(pi: &VirtualRep) -> Result<RestrictionProfile, OracleError> {
    let cd = pi.table().classes();
    let g = cd.group();
    let minus = g.minus_one().ok_or(OracleError::WrongParity { expected: "odd" })?;
    let at_one = pi.value(cd.class_of(g.identity()));
    let at_minus = pi.value(cd.class_of(minus));
    let trivial = average(&at_one + &at_minus, 2)?;
    let sign = average(&at_one - &at_minus, 2)?;
    Ok(RestrictionProfile { tag: SubgroupTag::Z, multiplicities: vec![trivial, sign] })
}

/// `(1 + v)^b` in `H*(Z) = F2[v]`: the class of `b` copies of the sign
/// character plus any number of trivial ones.
pub fn swc_from_sign_count(b: i64, truncation: u32) -> Result<TotalSwc, OracleError> {
    let ring = Ring::elementary_abelian(1, truncation)?;
    let one = GradedClass::one(&ring);
    let v = GradedClass::generator(&ring, "v")?;
    let c = one.add(&v)?.pow_unit(b)?;
    Ok(TotalSwc::new(SwcRingKind::Center, c)?)
}

/// `w(res_Z pi) = (1 + v)^b` with `b` the multiplicity of the sign character,
/// truncated at `min(D, deg pi)` for genuine `pi`.
pub fn oracle_swc_z(pi: &VirtualRep, truncation: u32) -> Result<TotalSwc, OracleError> {
    let b = center_profile(pi)?.multiplicities[1];
    let w = swc_from_sign_count(b, truncation)?;
    if pi.is_genuine() {
        let c = w.class().truncate(pi.degree() as u32);
        return Ok(TotalSwc::new(SwcRingKind::Center, c)?);
    }
    Ok(w)
}

/// Restriction to a quaternion subgroup, by inner products over its eight
/// elements.
pub fn quaternion_profile(pi: &VirtualRep, emb: &QuaternionEmbedding) -> Result<RestrictionProfile, OracleError> {
    let cd = pi.table().classes();
    let g = cd.group();
    if !Arc::ptr_eq(emb.subgroup().parent(), g) {
        return Err(OracleError::BadEmbedding);
    }
    let minus = g.minus_one().ok_or(OracleError::BadEmbedding)?;
    let ring = cd.ring();
    let mut sums = vec![Cyclo::zero(ring); 5];
    for &(elem, i, j) in emb.words() {
        let v = pi.value(cd.class_of(elem));
        let signs = [1i64, 1 - 2 * (j as i64 % 2), 1 - 2 * (i as i64 % 2), 1 - 2 * ((i + j) as i64 % 2)];
        for (s, sign) in sums.iter_mut().zip(signs) {
            *s = &*s + &v.scale(sign);
        }
        let rho = if elem == g.identity() {
            2
        } else if elem == minus {
            -2
        } else {
            0
        };
        if rho != 0 {
            sums[4] = &sums[4] + &v.scale(rho);
        }
    }
    let m = sums.into_iter().map(|s| average(s, 8)).collect::<Result<Vec<_>, _>>()?;
    let linear: i64 = m[..4].iter().sum();
    if linear + 2 * m[4] != pi.degree() {
        return Err(OracleError::Unbalanced("degrees"));
    }
    let at_minus = pi.value(cd.class_of(minus)).to_integer().map_err(|_| OracleError::Unbalanced("value at -1"))?;
    if linear - 2 * m[4] != at_minus {
        return Err(OracleError::Unbalanced("value at -1"));
    }
    Ok(RestrictionProfile { tag: SubgroupTag::Q, multiplicities: m })
}

/// `(1+x)^m1 (1+y)^m2 (1+x+y)^m3 (1+e)^m4` in `H*(Q_8)`, with `m4` the number
/// of `S(rho)` blocks in the restriction.
pub fn oracle_swc_q(pi: &VirtualRep, emb: &QuaternionEmbedding, truncation: u32) -> Result<TotalSwc, OracleError> {
    oracle_swc_q_in(&Ring::quaternion8(truncation)?, pi, emb)
}

/// [`oracle_swc_q`] in a prebuilt `H*(Q_8)` (generators `x`, `y`, `e`).
pub fn oracle_swc_q_in(ring: &Arc<Ring>, pi: &VirtualRep, emb: &QuaternionEmbedding) -> Result<TotalSwc, OracleError> {
    let profile = quaternion_profile(pi, emb)?;
    let m4 = profile.s_rho_blocks()?;
    let m = &profile.multiplicities;
    let one = GradedClass::one(ring);
    let x = GradedClass::generator(ring, "x")?;
    let y = GradedClass::generator(ring, "y")?;
    let e = GradedClass::generator(ring, "e")?;
    let factors = [(x.clone(), m[1]), (y.clone(), m[2]), (x.add(&y)?, m[3]), (e, m4)];
    let mut c = one.clone();
    for (f, k) in factors {
        if k != 0 {
            c = c.mul_unit_pow(&one.add(&f)?, k)?;
        }
    }
    Ok(TotalSwc::new(SwcRingKind::Quaternion, c)?)
}

fn field_of(pi: &VirtualRep) -> Result<Arc<FieldSpec>, OracleError> {
    let f = pi.table().classes().group().field().ok_or(OracleError::NotSl2)?;
    if f.p() != 2 {
        return Err(OracleError::WrongParity { expected: "even" });
    }
    Ok(Arc::clone(f))
}

/// Restriction to the unitriangular subgroup `N = {(1 x; 0 1)}`, `q` even.
pub fn n_profile(pi: &VirtualRep) -> Result<RestrictionProfile, OracleError> {
    let f = field_of(pi)?;
    let cd = pi.table().classes();
    let g = cd.group();
    let mut values = Vec::with_capacity(f.order() as usize);
    for x in f.elements() {
        let idx = g.index_of(&GroupElem::Matrix([1, x, 0, 1])).ok_or(OracleError::NotSl2)?;
        let v = pi.value(cd.class_of(idx));
        values.push(v.to_integer().map_err(|_| OracleError::NotIntegral(alloc::format!("{v:?}")))?);
    }
    let q = f.order() as i64;
    let mut mult = Vec::with_capacity(q as usize);
    for a in f.elements() {
        let s: i64 = f.elements().zip(&values).map(|(x, &v)| if f.trace(f.mul(a, x)) == 0 { v } else { -v }).sum();
        if s % q != 0 {
            return Err(OracleError::NotIntegral(alloc::format!("{s}/{q}")));
        }
        mult.push(s / q);
    }
    Ok(RestrictionProfile { tag: SubgroupTag::N, multiplicities: mult })
}

/// The class in `H^1(N) = F2 v1 + ... + F2 vr` of `lambda_a`, where `v_i` is
/// the `i`-th coordinate in the basis `1, t, ..., t^(r-1)`:
/// `sum_i Tr(a t^i) v_i`.
pub fn additive_form(ring: &Arc<Ring>, f: &FieldSpec, a: u32) -> GradedClass {
    let r = f.r() as usize;
    let mut out = GradedClass::zero(ring);
    for i in 0..r {
        let mut unit = vec![0u32; r];
        unit[i] = 1;
        let t_i = f.from_coeffs(&unit);
        if f.trace(f.mul(a, t_i)) == 1 {
            out.add_assign(&GradedClass::monomial(ring, Mono::generator(i))).expect("same ring");
        }
    }
    out
}

/// `prod_a (1 + l_a)^{mult_a}` over the nontrivial additive characters.
pub fn oracle_swc_n(pi: &VirtualRep, truncation: u32) -> Result<TotalSwc, OracleError> {
    let f = field_of(pi)?;
    let profile = n_profile(pi)?;
    let ring = Ring::elementary_abelian(f.r() as usize, truncation)?;
    let one = GradedClass::one(&ring);
    let mut c = one.clone();
    for a in f.elements().skip(1) {
        let k = profile.multiplicities[a as usize];
        if k != 0 {
            let l = additive_form(&ring, &f, a);
            c = c.mul_unit_pow(&one.add(&l)?, k)?;
        }
    }
    Ok(TotalSwc::new(SwcRingKind::Elementary, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{char_table, symmetrize, CharacterTable};
    use crate::groups::{build_sl2, conjugacy, find_quaternion, DEFAULT_Q_CAP};
    use alloc::string::ToString;

    fn table(q: u64) -> Arc<CharacterTable> {
        Arc::new(char_table(&conjugacy(&build_sl2(q, DEFAULT_Q_CAP).unwrap()).unwrap()).unwrap())
    }

    #[test]
    fn sign_and_trivial() {
        assert_eq!(swc_from_sign_count(1, 8).unwrap().to_string(), "1 + v");
        assert_eq!(swc_from_sign_count(4, 8).unwrap().to_string(), "1 + v^4");
        let t = table(3);
        assert!(oracle_swc_z(&VirtualRep::trivial(&t), 8).unwrap().is_one());
    }

    #[test]
    fn quaternion_oracle_q3() {
        let t = table(3);
        let emb = find_quaternion(t.classes().group()).unwrap();
        let sp = (0..t.len()).find(|&i| t.indicator(i) == -1).unwrap();
        let pi0 = VirtualRep::irreducible(&t, sp).unwrap();
        let p = quaternion_profile(&pi0, &emb).unwrap();
        assert_eq!(p.multiplicities, [0, 0, 0, 0, 1]);
        assert_eq!(p.s_rho_blocks().unwrap_err(), OracleError::OddRhoMultiplicity(1));
        let w = oracle_swc_q(&symmetrize(&pi0), &emb, 12).unwrap();
        assert_eq!(w.to_string(), "1 + e");
        assert!(oracle_swc_q(&VirtualRep::trivial(&t), &emb, 12).unwrap().is_one());
    }

    #[test]
    fn foreign_embedding_rejected() {
        let t3 = table(3);
        let t5 = table(5);
        let emb = find_quaternion(t5.classes().group()).unwrap();
        assert_eq!(quaternion_profile(&VirtualRep::trivial(&t3), &emb).unwrap_err(), OracleError::BadEmbedding);
    }

    #[test]
    fn additive_oracle_small_q() {
        let t2 = table(2);
        let sgn = VirtualRep::irreducible(&t2, 1).unwrap();
        assert_eq!(oracle_swc_n(&sgn, 8).unwrap().to_string(), "1 + v");
        let t4 = table(4);
        for i in 1..t4.len() {
            let pi = VirtualRep::irreducible(&t4, i).unwrap();
            assert!(n_profile(&pi).unwrap().is_uniform());
        }
        assert!(oracle_swc_n(&VirtualRep::trivial(&t4), 8).unwrap().is_one());
    }
}
