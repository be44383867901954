use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{CohomologyError, GradedClass, Mono, Ring};
use crate::algebra::arith::binom_odd;

fn check_free_degree_one(ring: &Ring) -> Result<(), CohomologyError> {
    if !ring.is_free() || ring.degrees().iter().any(|&d| d != 1) {
        return Err(CohomologyError::UnsupportedRing(ring.name().into()));
    }
    Ok(())
}

/// `Sq^i` on a polynomial ring with degree-one generators, from
/// `Sq(v) = v + v^2` and the Cartan formula.
pub fn steenrod_sq(i: u32, a: &GradedClass) -> Result<GradedClass, CohomologyError> {
    let ring = a.ring();
    check_free_degree_one(ring)?;
    let n = ring.generators().len();
    let mut out = GradedClass::zero(ring);
    for &(_, m) in a.terms() {
        // distribute i over the variables: Sq^k(v^e) = C(e, k) v^{e+k}
        let mut parts = [0u16; super::MAX_GENERATORS];
        fn go(
            m: &Mono,
            n: usize,
            j: usize,
            left: u32,
            parts: &mut [u16; super::MAX_GENERATORS],
            out: &mut GradedClass,
        ) {
            if j == n {
                if left == 0 {
                    let mut r = *m;
                    for (e, k) in r.0.iter_mut().zip(parts.iter()) {
                        *e += *k;
                    }
                    out.toggle_nf(&r);
                }
                return;
            }
            let e = m.0[j] as u32;
            for k in 0..=left.min(e) {
                if binom_odd(e as u64, k as u64) {
                    parts[j] = k as u16;
                    go(m, n, j + 1, left - k, parts, out);
                }
            }
            parts[j] = 0;
        }
        go(&m, n, 0, i, &mut parts, &mut out);
    }
    Ok(out)
}

/// Total square `Sq = sum_i Sq^i`, a ring homomorphism.
pub fn total_sq(a: &GradedClass) -> Result<GradedClass, CohomologyError> {
    let ring = a.ring();
    check_free_degree_one(ring)?;
    let mut out = GradedClass::zero(ring);
    let top = a.top_degree().unwrap_or(0);
    for i in 0..=top {
        out.add_assign(&steenrod_sq(i, a)?)?;
    }
    Ok(out)
}

/// Dickson invariants `d_1..d_r` in `F2[v1..vr]`, read off from the product
/// of `1 + l` over all nonzero linear forms `l`.
pub fn dickson_invariants(ring: &Arc<Ring>) -> Result<Vec<GradedClass>, CohomologyError> {
    check_free_degree_one(ring)?;
    let r = ring.generators().len();
    let top = (1u32 << r) - 1;
    if ring.truncation() < top {
        return Err(CohomologyError::TruncationTooLow { need: top, have: ring.truncation() });
    }
    let one = GradedClass::one(ring);
    let mut prod = one.clone();
    for mask in 1u32..(1 << r) {
        let mut form = GradedClass::zero(ring);
        for i in 0..r {
            if mask >> i & 1 == 1 {
                form = form.add(&GradedClass::monomial(ring, Mono::generator(i)))?;
            }
        }
        prod = prod.mul(&one.add(&form)?)?;
    }
    let degrees: Vec<u32> = (1..=r).map(|i| (1u32 << r) - (1u32 << (r - i))).collect();
    for &(d, _) in prod.terms() {
        if d > 0 && !degrees.contains(&d) {
            return Err(CohomologyError::UnexpectedComponent(d));
        }
    }
    Ok(degrees.iter().map(|&d| prod.component(d)).collect())
}

/// Dickson invariants of `F2[v1..vr]` truncated at `D >= 2^r - 1`.
pub fn dickson(r: usize, truncation: u32) -> Result<Vec<GradedClass>, CohomologyError> {
    let ring = Ring::elementary_abelian(r, truncation)?;
    dickson_invariants(&ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn squares_on_small_classes() {
        let r = Ring::elementary_abelian(2, 8).unwrap();
        let v1 = GradedClass::generator(&r, "v1").unwrap();
        let v2 = GradedClass::generator(&r, "v2").unwrap();
        assert_eq!(steenrod_sq(1, &v1).unwrap(), v1.square());
        let p = v1.mul(&v2).unwrap();
        assert_eq!(steenrod_sq(1, &p).unwrap().to_string(), "v1^2*v2 + v1*v2^2");
        let c = v1.pow(3);
        assert_eq!(steenrod_sq(0, &c).unwrap(), c);
        assert!(steenrod_sq(4, &c).unwrap().is_zero());
        assert_eq!(steenrod_sq(3, &c).unwrap(), c.square());
    }

    #[test]
    fn dickson_small_ranks() {
        let d1 = dickson(1, 4).unwrap();
        assert_eq!(d1[0].to_string(), "v");
        let d2 = dickson(2, 4).unwrap();
        assert_eq!(d2[0].to_string(), "v1^2 + v1*v2 + v2^2");
        assert_eq!(d2[1].to_string(), "v1^2*v2 + v1*v2^2");
        let d3 = dickson(3, 7).unwrap();
        let degs: Vec<u32> = d3.iter().map(|d| d.homogeneous_degree().unwrap()).collect();
        assert_eq!(degs, [4, 6, 7]);
        assert_eq!(dickson(3, 6).unwrap_err(), CohomologyError::TruncationTooLow { need: 7, have: 6 });
    }

    #[test]
    fn quotient_rings_are_unsupported() {
        let q = Ring::quaternion8(4).unwrap();
        let x = GradedClass::generator(&q, "x").unwrap();
        assert!(matches!(steenrod_sq(1, &x), Err(CohomologyError::UnsupportedRing(_))));
    }
}
