use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::arith::{is_prime, prime_factors};
use super::AlgebraError;

/// Largest field order the crate will construct.
pub const MAX_FIELD_ORDER: u64 = 10_000;

/// Full addition tables are kept up to this order; above it addition goes digitwise.
const ADD_TABLE_LIMIT: u32 = 256;

/// The finite field `GF(p^r)` in a polynomial basis over `GF(p)`.
///
/// Elements are addressed by their *code* `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`
/// where `c_i` is the coefficient of `t^i`. Comparing codes compares
/// coefficient vectors lexicographically from the leading coefficient down,
/// which is the canonical element order used throughout the crate.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, `modulus[i]` is the coefficient of `t^i`, length `r + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for the primitive element `g`, `i < q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    add: Option<Vec<u16>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec").field("p", &self.p).field("r", &self.r).field("modulus", &self.modulus).finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Builds `GF(p^r)` with the lowest monic irreducible modulus of degree `r`.
pub fn field_make(p: u64, r: u32) -> Result<Arc<FieldSpec>, AlgebraError> {
    FieldSpec::new(p, r).map(Arc::new)
}

/// Absolute trace `a + a^p + ... + a^{p^{r-1}}`, returned as a residue mod `p`.
pub fn field_trace(a: &FieldElement) -> u32 {
    a.spec.trace(a.code)
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for k in (r..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // t^k = t^{k-r} * t^r and t^r = -(lower terms of modulus)
        for i in 0..r {
            let sub = c * modulus[i] as u64 % p as u64;
            prod[k - r + i] = (prod[k - r + i] + p as u64 - sub) % p as u64;
        }
        prod[k] = 0;
    }
    prod.truncate(r);
    prod.into_iter().map(|c| c as u32).collect()
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    // b monic
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                let sub = lead * c as u64 % p as u64;
                rem[shift + i] = (rem[shift + i] + p as u64 - sub) % p as u64;
            }
        }
        rem.pop();
    }
    rem.into_iter().map(|c| c as u32).collect()
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic polynomials of degree `deg` over `GF(p)` in code order.
fn monic_polys(p: u32, deg: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg as u32);
    (0..count).map(move |code| {
        let mut d = digits(code as u32, p, deg);
        d.push(1);
        d
    })
}

pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for f in monic_polys(p, d) {
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lowest monic irreducible polynomial of degree `deg` over `GF(p)` in code order.
pub(crate) fn lowest_irreducible(p: u32, deg: usize) -> Vec<u32> {
    monic_polys(p, deg).find(|f| is_irreducible(f, p)).expect("irreducible polynomials exist in every degree")
}

impl FieldSpec {
    pub fn new(p: u64, r: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::CompositeP(p));
        }
        if r == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        let q64 = p.checked_pow(r).unwrap_or(u64::MAX);
        if q64 > MAX_FIELD_ORDER {
            return Err(AlgebraError::FieldTooLarge(q64));
        }
        let (p, q) = (p as u32, q64 as u32);
        let modulus = lowest_irreducible(p, r as usize);
        let order_factors = prime_factors((q - 1) as u64);

        let mul_codes = |a: u32, b: u32| {
            let pa = digits(a, p, r as usize);
            let pb = digits(b, p, r as usize);
            undigits(&poly_mul_mod(&pa, &pb, &modulus, p), p)
        };
        let pow_code = |a: u32, mut e: u64| {
            let mut acc = 1u32;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_codes(acc, base);
                }
                base = mul_codes(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (1..q)
            .find(|&g| order_factors.iter().all(|&f| pow_code(g, (q as u64 - 1) / f) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = mul_codes(x, generator);
        }

        let mut spec = FieldSpec { p, r, q, modulus, exp, log, add: None };
        if q <= ADD_TABLE_LIMIT {
            let mut table = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    table.push(spec.add_digitwise(a, b) as u16);
                }
            }
            spec.add = Some(table);
        }
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Field order `p^r`.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Code of the primitive element backing the log tables.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.r as usize)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        debug_assert!(c.len() <= self.r as usize);
        undigits(&c.iter().map(|&x| x % self.p).collect::<Vec<_>>(), self.p)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn add_digitwise(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.r {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add {
            Some(t) => t[(a * self.q + b) as usize] as u32,
            None => self.add_digitwise(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.p;
        let c: Vec<u32> = self.coeffs(a).into_iter().map(|x| (p - x) % p).collect();
        undigits(&c, p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as i64;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        self.exp[l as usize]
    }

    /// Lowest monic irreducible `t^2 + c1 t + c0` over this field, compared
    /// leading coefficient first; returns `(c0, c1)`.
    pub fn lowest_irreducible_quadratic(&self) -> (u32, u32) {
        for c1 in 0..self.q {
            for c0 in 0..self.q {
                let has_root = (0..self.q).any(|x| self.add(self.add(self.mul(x, x), self.mul(c1, x)), c0) == 0);
                if !has_root {
                    return (c0, c1);
                }
            }
        }
        unreachable!("irreducible quadratics exist over every finite field")
    }

    /// Discrete log base the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / super::arith::gcd(l as u64, n as u64) as u32)
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as i64)
    }

    /// Absolute trace to the prime field.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.r {
            acc = self.add(acc, x);
            x = self.frobenius(x);
        }
        debug_assert!(acc < self.p, "trace must land in the prime field");
        acc
    }

    pub fn elements(&self) -> core::ops::Range<u32> {
        0..self.q
    }

    pub fn element(self: &Arc<Self>, code: u32) -> FieldElement {
        assert!(code < self.q);
        FieldElement { spec: Arc::clone(self), code }
    }
}

/// An element of `GF(p^r)` bound to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    code: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.coeffs(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn inv(&self) -> Option<FieldElement> {
        self.spec.inv(self.code).map(|c| self.with(c))
    }

    pub fn pow(&self, e: i64) -> FieldElement {
        self.with(self.spec.pow(self.code, e))
    }

    pub fn trace(&self) -> u32 {
        self.spec.trace(self.code)
    }

    fn with(&self, code: u32) -> FieldElement {
        FieldElement { spec: Arc::clone(&self.spec), code }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(*self.spec, *rhs.spec, "field mismatch");
        self.with(self.spec.add(self.code, rhs.code))
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(*self.spec, *rhs.spec, "field mismatch");
        self.with(self.spec.sub(self.code, rhs.code))
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(*self.spec, *rhs.spec, "field mismatch");
        self.with(self.spec.mul(self.code, rhs.code))
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.spec.neg(self.code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_squares() {
        let f = field_make(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.from_coeffs(&[0, 1]);
        assert_eq!(f.coeffs(f.mul(t, t)), vec![1, 1]);
    }

    #[test]
    fn gf5_inverse() {
        let f = field_make(5, 1).unwrap();
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn gf9_is_cyclic_of_order_8() {
        let f = field_make(3, 2).unwrap();
        assert_eq!(f.elements().count(), 9);
        let generators = f.elements().filter(|&a| f.mult_order(a) == Some(8)).count();
        // phi(8) generators of a cyclic group of order 8
        assert_eq!(generators, 4);
    }

    #[test]
    fn gf8_uses_lowest_modulus() {
        let f = field_make(2, 3).unwrap();
        // t^3 + t + 1
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf4_traces() {
        let f = field_make(2, 2).unwrap();
        let t = f.from_coeffs(&[0, 1]);
        assert_eq!(f.trace(0), 0);
        assert_eq!(f.trace(1), 0);
        assert_eq!(f.trace(t), 1);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(field_make(6, 1).unwrap_err(), AlgebraError::CompositeP(6));
        assert_eq!(field_make(2, 0).unwrap_err(), AlgebraError::ZeroDegree);
    }

    #[test]
    fn digitwise_and_table_addition_agree() {
        let f = field_make(3, 4).unwrap();
        for a in (0..81).step_by(7) {
            for b in 0..81 {
                assert_eq!(f.add(a, b), f.add_digitwise(a, b));
            }
        }
    }

    #[test]
    fn element_wrapper_ops() {
        let f = field_make(7, 1).unwrap();
        let a = f.element(3);
        let b = f.element(5);
        assert_eq!((&a * &b).code(), 1);
        assert_eq!((&a + &b).code(), 1);
        assert_eq!((&a - &b).code(), 5);
        assert_eq!((-&a).code(), 4);
        assert_eq!(a.inv().unwrap().code(), 5);
        assert_eq!(field_trace(&a), 3);
    }
}
