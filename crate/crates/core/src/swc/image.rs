use crate::cohomology::GradedClass;

/// `n mod 2^bits` with `c = (1 + g)^n` up to the truncation degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImageExponent {
    pub residue: u64,
    pub bits: u32,
}

impl ImageExponent {
    /// Representative in `(-2^(bits-1), 2^(bits-1)]`.
    pub fn signed(&self) -> i64 {
        if self.bits == 0 {
            return 0;
        }
        let m = 1i64 << self.bits;
        let r = self.residue as i64;
        if 2 * r > m {
            r - m
        } else {
            r
        }
    }

    pub fn is_congruent(&self, n: i64) -> bool {
        n.rem_euclid(1i64 << self.bits) as u64 == self.residue
    }
}

/// Finds `n` with `c = (1 + g)^n` in the truncated ring, or `None` if `c` is
/// not a power of `1 + g`.
///
/// The lowest-degree component of `g` must be a single monomial `u`; bit `j`
/// of `n` is the coefficient of `u^(2^j)` in `c` by Lucas. Only residues mod
/// `2^bits` are determined, where `bits` counts the `j` with
/// `deg u^(2^j) <= D`.
pub fn image_exponent(c: &GradedClass, g: &GradedClass) -> Option<ImageExponent> {
    let ring = c.ring();
    if g.ring() != ring && **g.ring() != **ring {
        return None;
    }
    let delta = g.lowest_positive_degree()?;
    if !g.component(0).is_zero() {
        return None;
    }
    let lead = g.component(delta);
    let mut terms = lead.terms();
    let &(_, mut u) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    let d = ring.truncation();
    let mut residue = 0u64;
    let mut bits = 0u32;
    let mut deg = delta as u64;
    while deg <= d as u64 && bits < 63 {
        if c.contains(&u) {
            residue |= 1 << bits;
        }
        bits += 1;
        deg *= 2;
        u = u.square();
    }
    let one = GradedClass::one(ring);
    let base = one.add(g).ok()?;
    (base.pow(residue) == *c).then_some(ImageExponent { residue, bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Ring;

    #[test]
    fn small_cases() {
        let r = Ring::swc_odd(16).unwrap();
        let e = GradedClass::generator(&r, "e").unwrap();
        let one = GradedClass::one(&r);
        let u = one.add(&e).unwrap();
        let x = image_exponent(&u, &e).unwrap();
        assert_eq!((x.residue, x.bits, x.signed()), (1, 3, 1));
        let inv = u.inverse().unwrap();
        let x = image_exponent(&inv, &e).unwrap();
        assert_eq!(x.signed(), -1);
        assert!(x.is_congruent(-1) && x.is_congruent(7));
        assert_eq!(image_exponent(&one, &e).unwrap().residue, 0);
        assert!(image_exponent(&e, &e).is_none());
    }

    #[test]
    fn classes_outside_the_subalgebra() {
        let r = Ring::sl2_odd(16).unwrap();
        let b = GradedClass::generator(&r, "b").unwrap();
        let e = GradedClass::generator(&r, "e").unwrap();
        let c = GradedClass::one(&r).add(&b).unwrap();
        assert!(image_exponent(&c, &e).is_none());
    }
}
