use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::arith::{divisors, euler_phi};
use super::AlgebraError;

/// The ring `Z[zeta_m]`, `zeta_m = exp(2 pi i / m)`, with elements in normal
/// form modulo the cyclotomic polynomial `Phi_m`.
#[derive(Debug)]
pub struct CycloRing {
    m: u32,
    /// `Phi_m` coefficients from `t^0` up to the leading 1.
    phi_poly: Vec<i64>,
    /// Normal form of `zeta^k` for `0 <= k < m`.
    powers: Vec<Vec<i64>>,
}

impl PartialEq for CycloRing {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for CycloRing {}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// `Phi_m` by dividing `t^m - 1` by `Phi_d` for every proper divisor `d`.
pub(crate) fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m as u64) {
        if d < m as u64 {
            num = poly_div_exact(&num, &cyclotomic_poly(d as u32));
        }
    }
    num
}

impl CycloRing {
    pub fn new(m: u32) -> Arc<Self> {
        assert!(m >= 1, "cyclotomic order must be positive");
        let phi_poly = cyclotomic_poly(m);
        let phi = phi_poly.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(m as u64));
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by t and reduce the overflow through t^phi = -(lower terms)
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
        Arc::new(CycloRing { m, phi_poly, powers })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rank `phi(m)` of the power basis.
    pub fn phi(&self) -> usize {
        self.phi_poly.len() - 1
    }

    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.phi_poly
    }

    pub fn zeta_power_nf(&self, k: i64) -> &[i64] {
        &self.powers[k.rem_euclid(self.m as i64) as usize]
    }

    fn reduce_into(&self, wide: &[i64], out: &mut [i64]) {
        let phi = self.phi();
        for (k, &c) in wide.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if k < phi {
                out[k] += c;
            } else {
                let nf = &self.powers[k % self.m as usize];
                for (o, &x) in out.iter_mut().zip(nf) {
                    *o += c * x;
                }
            }
        }
    }
}

/// An element of `Z[zeta_m]` in normal form.
#[derive(Clone)]
pub struct Cyclo {
    ring: Arc<CycloRing>,
    coeffs: Vec<i64>,
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.ring.m == other.ring.m && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    /// Integers print as integers; anything else as a power-basis sum
    /// `a*zeta{m}^k + ...` with the constant term written bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(n) = self.to_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}*")?;
                }
                write!(f, "zeta{}^{}", self.ring.m, k)?;
            }
        }
        Ok(())
    }
}

/// Builds the normal form of `sum_k coeffs[k] zeta_m^k`.
pub fn cyclo_make(ring: &Arc<CycloRing>, power_coeffs: &[i64]) -> Cyclo {
    let mut out = vec![0i64; ring.phi()];
    ring.reduce_into(power_coeffs, &mut out);
    Cyclo { ring: Arc::clone(ring), coeffs: out }
}

impl Cyclo {
    pub fn zero(ring: &Arc<CycloRing>) -> Self {
        Cyclo { ring: Arc::clone(ring), coeffs: vec![0; ring.phi()] }
    }

    pub fn integer(ring: &Arc<CycloRing>, n: i64) -> Self {
        let mut c = Cyclo::zero(ring);
        c.coeffs[0] = n;
        c
    }

    /// `zeta_m^k`.
    pub fn zeta_pow(ring: &Arc<CycloRing>, k: i64) -> Self {
        Cyclo { ring: Arc::clone(ring), coeffs: ring.zeta_power_nf(k).to_vec() }
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_integer(&self) -> Result<i64, AlgebraError> {
        if self.coeffs[1..].iter().any(|&c| c != 0) {
            Err(AlgebraError::NotRationalInteger)
        } else {
            Ok(self.coeffs[0])
        }
    }

    /// Complex conjugation `zeta -> zeta^{m-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism `zeta -> zeta^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let mut out = vec![0i64; self.ring.phi()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let nf = self.ring.zeta_power_nf(k * i as i64);
            for (o, &x) in out.iter_mut().zip(nf) {
                *o += c * x;
            }
        }
        Cyclo { ring: Arc::clone(&self.ring), coeffs: out }
    }

    pub fn scale(&self, k: i64) -> Self {
        Cyclo { ring: Arc::clone(&self.ring), coeffs: self.coeffs.iter().map(|&c| c * k).collect() }
    }

    /// Exact division by a rational integer.
    pub fn div_exact(&self, k: i64) -> Result<Self, AlgebraError> {
        if self.coeffs.iter().any(|&c| c % k != 0) {
            return Err(AlgebraError::NotDivisible(k));
        }
        Ok(Cyclo { ring: Arc::clone(&self.ring), coeffs: self.coeffs.iter().map(|&c| c / k).collect() })
    }

    /// Embeds into `Z[zeta_M]` for a multiple `M` of `m`.
    pub fn embed(&self, target: &Arc<CycloRing>) -> Result<Self, AlgebraError> {
        if !target.m.is_multiple_of(self.ring.m) {
            return Err(AlgebraError::RingMismatch(self.ring.m, target.m));
        }
        if target.m == self.ring.m {
            return Ok(Cyclo { ring: Arc::clone(target), coeffs: self.coeffs.clone() });
        }
        let step = (target.m / self.ring.m) as usize;
        let mut wide = vec![0i64; step * self.coeffs.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            wide[i * step] = c;
        }
        Ok(cyclo_make(target, &wide))
    }

    /// Image under `Z[zeta_m] -> F_l`, `zeta -> omega`.
    pub fn reduce_mod(&self, l: u64, omega: u64) -> u64 {
        let mut acc: u64 = 0;
        let mut w: u64 = 1;
        for &c in &self.coeffs {
            let cm = c.rem_euclid(l as i64) as u64;
            acc = (acc + cm * w) % l;
            w = w * omega % l;
        }
        acc
    }

    /// Numerical value at `zeta = exp(2 pi i / m)`, for diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.ring.m as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let theta = 2.0 * core::f64::consts::PI * k as f64 / m;
            (re + c as f64 * libm::cos(theta), im + c as f64 * libm::sin(theta))
        })
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring.m, other.ring.m, "cyclotomic ring mismatch");
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.check_ring(rhs);
        Cyclo {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.check_ring(rhs);
        Cyclo {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        self.scale(-1)
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.check_ring(rhs);
        let phi = self.ring.phi();
        let mut wide = vec![0i64; 2 * phi - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                wide[i + j] += a * b;
            }
        }
        let mut out = vec![0i64; phi];
        self.ring.reduce_into(&wide, &mut out);
        Cyclo { ring: Arc::clone(&self.ring), coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn normal_form_examples() {
        let r4 = CycloRing::new(4);
        assert_eq!(cyclo_make(&r4, &[0, 0, 1]), Cyclo::integer(&r4, -1));
        let r3 = CycloRing::new(3);
        assert_eq!(cyclo_make(&r3, &[0, 1, 1]).to_integer(), Ok(-1));
        assert_eq!(cyclo_make(&r3, &[0, -1, -1]).to_integer(), Ok(1));
        let r8 = CycloRing::new(8);
        let z = Cyclo::zeta_pow(&r8, 1);
        let z7 = Cyclo::zeta_pow(&r8, 7);
        assert_eq!(&z * &z7, Cyclo::integer(&r8, 1));
    }

    #[test]
    fn to_integer_rejects_irrational() {
        let r4 = CycloRing::new(4);
        assert_eq!(Cyclo::zeta_pow(&r4, 1).to_integer(), Err(AlgebraError::NotRationalInteger));
        assert_eq!(Cyclo::integer(&r4, 7).to_integer(), Ok(7));
    }

    #[test]
    fn conjugation_is_an_involution() {
        let r = CycloRing::new(24);
        let c = cyclo_make(&r, &[3, -1, 0, 2, 5, 0, 0, 1]);
        assert_eq!(c.conj().conj(), c);
        let norm = (&c * &c.conj()).to_complex();
        assert!(norm.0 >= -1e-9 && norm.1.abs() < 1e-9);
    }

    #[test]
    fn embedding_preserves_roots_of_unity() {
        let r3 = CycloRing::new(3);
        let r12 = CycloRing::new(12);
        let z = Cyclo::zeta_pow(&r3, 1).embed(&r12).unwrap();
        assert_eq!(z, Cyclo::zeta_pow(&r12, 4));
        assert!(Cyclo::zeta_pow(&r12, 1).embed(&r3).is_err());
    }

    #[test]
    fn display_forms() {
        let r8 = CycloRing::new(8);
        assert_eq!(alloc::format!("{}", Cyclo::integer(&r8, -3)), "-3");
        let c = cyclo_make(&r8, &[1, 0, -2, 1]);
        assert_eq!(alloc::format!("{c}"), "1-2*zeta8^2+zeta8^3");
    }
}
