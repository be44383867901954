//! Principal series and cuspidal characters of `SL(2,q)`, obtained by
//! inducing linear characters inside `GL(2,q)` and restricting.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CharacterError, CharacterTable, VirtualRep};
use crate::algebra::arith::lcm;
use crate::algebra::{Cyclo, CycloRing, FieldSpec};
use crate::groups::{build_gl2, standard_subgroup, Group, GroupElem, GroupKind, SubgroupTag};

fn sl2_q(table: &CharacterTable) -> Result<u32, CharacterError> {
    match table.classes().group().kind() {
        GroupKind::Sl2 { q } => Ok(*q),
        _ => Err(CharacterError::NotSl2),
    }
}

fn bad(construction: &'static str, exponent: i64, reason: &'static str) -> CharacterError {
    CharacterError::BadConstructionParams { construction, exponent, reason }
}

/// `zeta_ring^{num * m / den}`.
fn root(ring: &Arc<CycloRing>, num: i64, den: u64) -> Cyclo {
    let m = ring.m() as u64;
    debug_assert_eq!(m % den, 0);
    Cyclo::zeta_pow(ring, num.rem_euclid(den as i64) * (m / den) as i64)
}

/// Values of `Ind_H^{GL} psi` at the class representatives of `SL(2,q)`,
/// where `psi` is given on `GL` indices and is `None` outside `H`.
fn induced_on_sl(
    table: &CharacterTable,
    gl: &Group,
    h_order: usize,
    ring: &Arc<CycloRing>,
    psi: impl Fn(usize) -> Option<Cyclo>,
) -> Result<Vec<Cyclo>, CharacterError> {
    let cd = table.classes();
    let sl = cd.group();
    let mut out = Vec::with_capacity(cd.num_classes());
    for c in 0..cd.num_classes() {
        let g = gl.index_of(sl.elem(cd.representative(c))).expect("SL(2,q) lies in GL(2,q)");
        let mut acc = Cyclo::zero(ring);
        for x in 0..gl.order() {
            let y = gl.mul(gl.mul(x, g), gl.inv(x));
            if let Some(v) = psi(y) {
                acc = &acc + &v;
            }
        }
        out.push(acc.div_exact(h_order as i64).map_err(|_| CharacterError::NotInteger)?);
    }
    Ok(out)
}

/// Decomposes class-function values (in a ring containing the table's ring)
/// against the table and checks the reconstruction exactly.
fn decompose_values(
    table: &Arc<CharacterTable>,
    values: &[Cyclo],
    ring: &Arc<CycloRing>,
) -> Result<VirtualRep, CharacterError> {
    let cd = table.classes();
    let n = cd.group().order() as i64;
    let embedded: Vec<Vec<Cyclo>> = table
        .characters()
        .iter()
        .map(|chi| chi.values().iter().map(|v| v.embed(ring)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let mut mult = Vec::with_capacity(table.len());
    for chi in &embedded {
        let mut acc = Cyclo::zero(ring);
        for (c, (v, x)) in values.iter().zip(chi).enumerate() {
            acc = &acc + &(v * &x.conj()).scale(cd.size(c) as i64);
        }
        let s = acc.to_integer().map_err(|_| CharacterError::NotInteger)?;
        if s % n != 0 {
            return Err(CharacterError::NotInteger);
        }
        mult.push(s / n);
    }
    for (c, v) in values.iter().enumerate() {
        let rebuilt = mult.iter().zip(&embedded).fold(Cyclo::zero(ring), |acc, (&m, chi)| &acc + &chi[c].scale(m));
        if rebuilt != *v {
            return Err(CharacterError::NotVirtualCharacter);
        }
    }
    VirtualRep::new(table, mult)
}

fn gl_of(q: u32) -> Result<(Arc<Group>, Arc<FieldSpec>), CharacterError> {
    let gl = build_gl2(q as u64, q as u64)?;
    let f = Arc::clone(gl.field().expect("matrix group"));
    Ok((gl, f))
}

/// `res_{SL} Ind_{B}^{GL} (alpha x 1)` with `alpha(gamma^j) = zeta_{q-1}^{k j}`
/// for the least generator `gamma` of `F_q^x`.
///
/// Requires `alpha^2 != 1` and, for odd `q`, `alpha(-1) = -1`.
pub fn principal_series(table: &Arc<CharacterTable>, k: i64) -> Result<VirtualRep, CharacterError> {
    let q = sl2_q(table)?;
    let qm1 = (q - 1) as i64;
    if (2 * k).rem_euclid(qm1) == 0 {
        return Err(bad("ps", k, "alpha^2 must be nontrivial"));
    }
    if q % 2 == 1 && k.rem_euclid(2) == 0 {
        return Err(bad("ps", k, "alpha(-1) must be -1"));
    }
    let (gl, f) = gl_of(q)?;
    let ring = Arc::clone(table.classes().ring());
    let b_order = ((q - 1) * (q - 1) * q) as usize;
    let values = induced_on_sl(table, &gl, b_order, &ring, |y| match gl.elem(y) {
        GroupElem::Matrix([a, _, 0, _]) => {
            let j = f.log(*a).expect("diagonal entry is a unit") as i64;
            Some(root(&ring, k * j, (q - 1) as u64))
        }
        _ => None,
    })?;
    decompose_values(table, &values, &ring)
}

/// `res_{SL} (Ind_{ZN}^{GL} chi_phi - Ind_{Te}^{GL} chi)` with
/// `chi(gamma^j) = zeta_{q^2-1}^{k j}` on the least generator of the elliptic
/// torus and `phi(n(x)) = zeta_p^{Tr(a x)}`.
///
/// Requires `chi^q != chi`, `chi^2 != 1`, `a != 0` and, for odd `q`,
/// `chi(-1) = -1`.
pub fn cuspidal(table: &Arc<CharacterTable>, k: i64, a: u32) -> Result<VirtualRep, CharacterError> {
    let q = sl2_q(table)?;
    let q2m1 = (q * q - 1) as i64;
    if k.rem_euclid(q as i64 + 1) == 0 {
        return Err(bad("cusp", k, "chi^q must differ from chi"));
    }
    if (2 * k).rem_euclid(q2m1) == 0 {
        return Err(bad("cusp", k, "chi^2 must be nontrivial"));
    }
    if q % 2 == 1 && k.rem_euclid(2) == 0 {
        return Err(bad("cusp", k, "chi(-1) must be -1"));
    }
    let (gl, f) = gl_of(q)?;
    if a == 0 || a >= q {
        return Err(bad("cusp", a as i64, "additive character must be nontrivial"));
    }
    let p = f.p() as u64;
    let m = lcm(lcm(table.classes().ring().m() as u64, q2m1 as u64), p);
    let ring = CycloRing::new(m as u32);

    let te = standard_subgroup(&gl, SubgroupTag::Te)?;
    let gen =
        te.elements().iter().copied().find(|&x| gl.element_order(x) as i64 == q2m1).expect("elliptic torus is cyclic");
    let mut te_log = vec![u32::MAX; gl.order()];
    let mut cur = gl.identity();
    for j in 0..q2m1 as u32 {
        te_log[cur] = j;
        cur = gl.mul(cur, gen);
    }
    let chi = |y: usize| -> Option<Cyclo> {
        let j = te_log[y];
        (j != u32::MAX).then(|| root(&ring, k * j as i64, q2m1 as u64))
    };
    let chi_phi = |y: usize| -> Option<Cyclo> {
        match gl.elem(y) {
            GroupElem::Matrix([d, b, 0, d2]) if d == d2 => {
                let x = f.mul(*b, f.inv(*d).expect("unit"));
                let scalar = gl.index_of(&GroupElem::Matrix([*d, 0, 0, *d])).expect("scalar in GL");
                let z = chi(scalar).expect("scalars lie in the elliptic torus");
                Some(&z * &root(&ring, f.trace(f.mul(a, x)) as i64, p))
            }
            _ => None,
        }
    };
    let zn_order = ((q - 1) * q) as usize;
    let from_zn = induced_on_sl(table, &gl, zn_order, &ring, chi_phi)?;
    let from_te = induced_on_sl(table, &gl, q2m1 as usize, &ring, chi)?;
    let values: Vec<Cyclo> = from_zn.iter().zip(&from_te).map(|(x, y)| x - y).collect();
    decompose_values(table, &values, &ring)
}

/// Exponents `k` in `0..q-1` accepted by [`principal_series`].
pub fn principal_series_exponents(q: u32) -> Vec<i64> {
    let qm1 = (q - 1) as i64;
    (0..qm1).filter(|&k| (2 * k).rem_euclid(qm1) != 0 && (q.is_multiple_of(2) || k % 2 == 1)).collect()
}

/// Exponents `k` in `0..q^2-1` accepted by [`cuspidal`].
pub fn cuspidal_exponents(q: u32) -> Vec<i64> {
    let q2m1 = (q * q - 1) as i64;
    (0..q2m1)
        .filter(|&k| k % (q as i64 + 1) != 0 && (2 * k) % q2m1 != 0 && (q.is_multiple_of(2) || k % 2 == 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_table;
    use crate::groups::{build_sl2, conjugacy, DEFAULT_Q_CAP};

    fn table(q: u64) -> Arc<CharacterTable> {
        let cd = conjugacy(&build_sl2(q, DEFAULT_Q_CAP).unwrap()).unwrap();
        Arc::new(char_table(&cd).unwrap())
    }

    fn single(r: &VirtualRep) -> Option<usize> {
        let nz: Vec<usize> = (0..r.multiplicities().len()).filter(|&i| r.multiplicity(i) != 0).collect();
        (nz.len() == 1 && r.multiplicity(nz[0]) == 1).then(|| nz[0])
    }

    #[test]
    fn principal_series_q5() {
        let t = table(5);
        for k in principal_series_exponents(5) {
            let r = principal_series(&t, k).unwrap();
            assert_eq!(r.degree(), 6);
            let i = single(&r).expect("irreducible");
            assert_eq!(t.indicator(i), -1);
        }
        assert!(matches!(principal_series(&t, 0), Err(CharacterError::BadConstructionParams { .. })));
        assert!(matches!(principal_series(&t, 2), Err(CharacterError::BadConstructionParams { .. })));
    }

    #[test]
    fn cuspidal_q3_is_the_symplectic_degree_two() {
        let t = table(3);
        let r = cuspidal(&t, 1, 1).unwrap();
        assert_eq!(r.degree(), 2);
        let i = single(&r).unwrap();
        assert_eq!(t.indicator(i), -1);
        assert_eq!(cuspidal(&t, 1, 2).unwrap(), r);
    }

    #[test]
    fn even_q_cuspidal_is_orthogonal() {
        let t = table(4);
        for k in cuspidal_exponents(4) {
            let r = cuspidal(&t, k, 1).unwrap();
            assert_eq!(r.degree(), 3);
            assert_eq!(t.indicator(single(&r).unwrap()), 1);
        }
    }
}
