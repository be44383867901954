use alloc::string::ToString;
use alloc::sync::Arc;

use super::restriction::{
    center_profile, n_profile, oracle_swc_n, oracle_swc_q_in, oracle_swc_z, swc_from_sign_count, RestrictionProfile,
};
use super::OracleError;
use crate::algebra::arith::binom_mod2;
use crate::characters::{char_table, symmetrize, CharacterTable, VirtualRep};
use crate::cohomology::{steenrod_sq, GradedClass, Ring, RingHom};
use crate::groups::{conjugacy, find_quaternion, gen_quaternion, GroupElem, QuaternionEmbedding};
use crate::swc::{expanded_swc, sl2_parameters, total_swc, Parity};

fn compare(what: &'static str, lhs: &GradedClass, rhs: &GradedClass) -> Result<(), OracleError> {
    if lhs == rhs {
        return Ok(());
    }
    let diff = lhs.add(rhs).map_err(|_| OracleError::Mismatch {
        what,
        degree: 0,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })?;
    let degree = diff.terms().next().map_or(0, |t| t.0);
    Err(OracleError::Mismatch { what, degree, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

/// Outcome of [`verify_theorem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub parity: Parity,
    /// The common class in `H*(Z)` (odd `q`) or `F2[v1..vr]` (even `q`).
    pub common: GradedClass,
    /// The `Z` profile (odd `q`) or the `N` profile (even `q`).
    pub profile: RestrictionProfile,
}

/// Rings, maps and the quaternion subgroup used by [`verify_theorem_in`],
/// built once per group and truncation.
pub struct TheoremContext {
    truncation: u32,
    /// `F2[e] -> H*(Z)`, `H*(Q_8) -> H*(Z)` and a quaternion subgroup; odd
    /// `q` only.
    odd: Option<(RingHom, RingHom, QuaternionEmbedding)>,
}

impl TheoremContext {
    pub fn new(table: &CharacterTable, truncation: u32) -> Result<Self, OracleError> {
        let g = table.classes().group();
        let odd = match g.q() {
            Some(q) if q % 2 == 1 => Some((
                RingHom::swc_to_center(truncation)?,
                RingHom::quaternion_to_center(truncation)?,
                find_quaternion(g)?,
            )),
            _ => None,
        };
        Ok(TheoremContext { truncation, odd })
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }
}

/// Odd `q`: the closed form restricted to `Z`, the `Q_8` oracle restricted to
/// `Z` and the `Z` oracle agree. Even `q`: the closed form expanded in
/// `F2[v1..vr]` equals the `N` oracle, and the nontrivial additive
/// characters occur equally often.
pub fn verify_theorem(pi: &VirtualRep, truncation: u32) -> Result<TheoremCheck, OracleError> {
    verify_theorem_in(pi, &TheoremContext::new(pi.table(), truncation)?)
}

/// [`verify_theorem`] with a prebuilt context for the group of `pi`.
pub fn verify_theorem_in(pi: &VirtualRep, ctx: &TheoremContext) -> Result<TheoremCheck, OracleError> {
    let params = sl2_parameters(pi)?;
    let truncation = ctx.truncation;
    match (params.parity, &ctx.odd) {
        (Parity::Odd, Some((to_center, q_to_center, emb))) => {
            let total = total_swc(pi, truncation)?;
            let z = oracle_swc_z(pi, truncation)?;
            let lhs = to_center.apply(total.class())?;
            compare("closed form restricted to Z vs Z oracle", &lhs, z.class())?;
            let wq = oracle_swc_q_in(q_to_center.source(), pi, emb)?;
            let viaq = q_to_center.apply(wq.class())?;
            compare("Q oracle restricted to Z vs Z oracle", &viaq, z.class())?;
            Ok(TheoremCheck { parity: params.parity, common: z.into_class(), profile: center_profile(pi)? })
        }
        (Parity::Odd, None) => Err(OracleError::WrongParity { expected: "even" }),
        (Parity::Even, _) => {
            let profile = n_profile(pi)?;
            if !profile.is_uniform() {
                return Err(OracleError::Unbalanced("nontrivial additive characters occur unequally"));
            }
            let expanded = expanded_swc(pi, truncation)?;
            let n = oracle_swc_n(pi, truncation)?;
            compare("closed form expanded vs N oracle", expanded.class(), n.class())?;
            Ok(TheoremCheck { parity: params.parity, common: n.into_class(), profile })
        }
    }
}

/// `sum_{t=0}^{i} C(j-i+t-1, t) w_{i-t} w_{j+t}`, the right side of the Wu
/// formula for `Sq^i w_j`.
pub fn wu_rhs(w: &GradedClass, i: u32, j: u32) -> Result<GradedClass, OracleError> {
    let mut out = GradedClass::zero(w.ring());
    for t in 0..=i {
        if binom_mod2(j as i64 - i as i64 + t as i64 - 1, t as u64) {
            out.add_assign(&w.component(i - t).mul(&w.component(j + t))?)?;
        }
    }
    Ok(out)
}

/// Whether `Sq^i w_j = wu_rhs(w, i, j)` for a total class `w` in a
/// polynomial ring on degree-one generators.
pub fn wu_holds(w: &GradedClass, i: u32, j: u32) -> Result<bool, OracleError> {
    let lhs = steenrod_sq(i, &w.component(j))?;
    Ok(lhs == wu_rhs(w, i, j)?)
}

/// The Wu formula for `Sq^i w_j` on the restriction of `pi` to `Z` (odd `q`)
/// or `N` (even `q`).
pub fn wu_verify(pi: &VirtualRep, i: u32, j: u32, truncation: u32) -> Result<bool, OracleError> {
    let w = match sl2_parameters(pi)?.parity {
        Parity::Odd => oracle_swc_z(pi, truncation)?,
        Parity::Even => oracle_swc_n(pi, truncation)?,
    };
    wu_holds(w.class(), i, j)
}

/// For `Q_{2^n}`: a faithful 2-dimensional irreducible `rho'` restricts to
/// `rho` on the quaternion subgroup `<a^(2^(n-3)), b>`, and its
/// symmetrization has class `1 + E`, checked by pushing `1 + E` to `H*(Z)`
/// and comparing with the `Z` oracle.
pub fn gen_quaternion_coherence(n: u32, truncation: u32) -> Result<(), OracleError> {
    let g = gen_quaternion(n)?;
    let cd = conjugacy(&g)?;
    let table = Arc::new(char_table(&cd)?);
    let minus = g.minus_one().ok_or(OracleError::BadEmbedding)?;
    let minus_class = cd.class_of(minus);
    let idx = (0..table.len())
        .find(|&i| table.degrees()[i] == 2 && table.character(i).value(minus_class).to_integer() == Ok(-2))
        .ok_or(OracleError::Unbalanced("no faithful 2-dimensional character"))?;
    let chi = table.character(idx);
    let x = g.index_of(&GroupElem::Quaternion { k: 1 << (n - 3), l: 0 }).ok_or(OracleError::BadEmbedding)?;
    let y = g.index_of(&GroupElem::Quaternion { k: 0, l: 1 }).ok_or(OracleError::BadEmbedding)?;
    let emb = QuaternionEmbedding::new(&g, x, y)?;
    for &(elem, _, _) in emb.words() {
        let expected = if elem == g.identity() {
            2
        } else if elem == minus {
            -2
        } else {
            0
        };
        if chi.at(elem).to_integer() != Ok(expected) {
            return Err(OracleError::Unbalanced("restriction to Q_8 is not rho"));
        }
    }
    let s = symmetrize(&VirtualRep::irreducible(&table, idx)?);
    let b = center_profile(&s)?.multiplicities[1];
    let z = swc_from_sign_count(b, truncation)?;
    let src = Ring::gen_quaternion(n, truncation)?;
    let one_plus_e = GradedClass::one(&src).add(&GradedClass::generator(&src, "E")?)?;
    let to_q = RingHom::gen_quaternion_to_quaternion(n, truncation)?;
    let to_z = RingHom::quaternion_to_center(truncation)?;
    let image = to_z.apply(&to_q.apply(&one_plus_e)?)?;
    compare("1 + E restricted to Z vs Z oracle", &image, z.class())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_sl2, DEFAULT_Q_CAP};

    fn table(q: u64) -> Arc<CharacterTable> {
        Arc::new(char_table(&conjugacy(&build_sl2(q, DEFAULT_Q_CAP).unwrap()).unwrap()).unwrap())
    }

    #[test]
    fn regular_representation_q3() {
        let t = table(3);
        let check = verify_theorem(&VirtualRep::regular(&t), 16).unwrap();
        assert_eq!(check.common.to_string(), "1 + v^4 + v^8 + v^12");
    }

    #[test]
    fn mismatch_reports_first_degree() {
        let a = swc_from_sign_count(4, 8).unwrap();
        let b = swc_from_sign_count(8, 8).unwrap();
        match compare("test", a.class(), b.class()) {
            Err(OracleError::Mismatch { degree, .. }) => assert_eq!(degree, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wu_on_small_cases() {
        let t = table(4);
        let reg = VirtualRep::regular(&t);
        assert!(wu_verify(&reg, 2, 2, 12).unwrap());
        assert!(wu_verify(&reg, 1, 2, 12).unwrap());
        let w = oracle_swc_n(&reg, 12).unwrap();
        assert_eq!(w.w(3), w.w(1).mul(&w.w(2)).unwrap().add(&steenrod_sq(1, &w.w(2)).unwrap()).unwrap());
    }

    #[test]
    fn generalized_quaternions() {
        for n in 3..=6 {
            gen_quaternion_coherence(n, 16).unwrap();
        }
    }
}
