use alloc::sync::Arc;

use super::{SwcError, SwcRingKind, TotalSwc};
use crate::algebra::arith::{binom_mod2, ord2};
use crate::characters::{decompose_orthogonal, VirtualRep};
use crate::cohomology::{dickson_invariants, GradedClass, Mono, Ring, MAX_TRUNCATION};
use crate::groups::GroupKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// `q = p^r` of the group a representation lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2Parameters {
    pub q: u32,
    pub p: u32,
    pub r: u32,
    pub parity: Parity,
}

pub fn sl2_parameters(pi: &VirtualRep) -> Result<Sl2Parameters, SwcError> {
    let g = pi.table().classes().group();
    let q = match g.kind() {
        GroupKind::Sl2 { q } => *q,
        _ => return Err(SwcError::NotSl2),
    };
    let f = g.field().ok_or(SwcError::NotSl2)?;
    let parity = if f.p() == 2 { Parity::Even } else { Parity::Odd };
    Ok(Sl2Parameters { q, p: f.p(), r: f.r(), parity })
}

/// `r_pi = (chi(1) - chi(-1)) / 8` for orthogonal `pi`, `q` odd.
pub fn r_pi(pi: &VirtualRep) -> Result<i64, SwcError> {
    let params = sl2_parameters(pi)?;
    if params.parity != Parity::Odd {
        return Err(SwcError::WrongParity { expected: "odd" });
    }
    decompose_orthogonal(pi)?;
    let cls = pi.table().classes().minus_one_class().ok_or(SwcError::NotSl2)?;
    let diff = pi.degree() - pi.integer_value(cls)?;
    if diff % 8 != 0 {
        return Err(SwcError::NotDivisible { value: diff, divisor: 8 });
    }
    Ok(diff / 8)
}

/// `(ell_pi, m_pi)` with `m = (chi(1) - chi(n0)) / q` and
/// `ell = chi(1) - m (q - 1)`, `q` even.
pub fn m_pi(pi: &VirtualRep) -> Result<(i64, i64), SwcError> {
    let params = sl2_parameters(pi)?;
    if params.parity != Parity::Even {
        return Err(SwcError::WrongParity { expected: "even" });
    }
    let cls = pi.table().classes().n0_class().ok_or(SwcError::NotSl2)?;
    let q = params.q as i64;
    let diff = pi.degree() - pi.integer_value(cls)?;
    if diff % q != 0 {
        return Err(SwcError::NotDivisible { value: diff, divisor: q });
    }
    let m = diff / q;
    Ok((pi.degree() - m * (q - 1), m))
}

/// `max(4 |r_pi|, 2^r - 1, 16)`, with `m_pi` in place of `r_pi` for even `q`.
pub fn default_truncation(pi: &VirtualRep) -> Result<u32, SwcError> {
    let params = sl2_parameters(pi)?;
    let n = match params.parity {
        Parity::Odd => r_pi(pi)?,
        Parity::Even => m_pi(pi)?.1,
    };
    let d = (4 * n.unsigned_abs()).max((1u64 << params.r) - 1).max(16);
    Ok(d.min(MAX_TRUNCATION as u64) as u32)
}

fn check_above_degree(pi: &VirtualRep, c: GradedClass) -> Result<GradedClass, SwcError> {
    if !pi.is_genuine() {
        return Ok(c);
    }
    let deg = pi.degree() as u32;
    if c.top_degree().is_some_and(|t| t > deg) {
        return Err(SwcError::Inconsistent("class above the degree of the representation"));
    }
    Ok(c.truncate(deg))
}

/// `1 + d1 + ... + dr` in a ring whose generators are the `d_i` or in
/// `F2[v1..vr]` with the `d_i` expanded.
fn dickson_sum(ring: &Arc<Ring>, r: usize, expanded: bool) -> Result<GradedClass, SwcError> {
    let mut sum = GradedClass::one(ring);
    if expanded {
        let big = Ring::elementary_abelian(r, ring.truncation().max((1 << r) - 1))?;
        for d in dickson_invariants(&big)? {
            sum.add_assign(&d.transfer(ring)?)?;
        }
    } else {
        for i in 0..r {
            sum.add_assign(&GradedClass::monomial(ring, Mono::generator(i)))?;
        }
    }
    Ok(sum)
}

/// The total class: `(1 + e)^{r_pi}` in `F2[e]` for odd `q`, `(1 + D)^{m_pi}`
/// in the Dickson algebra `F2[d1..dr]` for even `q`, truncated at `D`.
pub fn total_swc(pi: &VirtualRep, truncation: u32) -> Result<TotalSwc, SwcError> {
    let params = sl2_parameters(pi)?;
    match params.parity {
        Parity::Odd => {
            let r = r_pi(pi)?;
            let ring = Ring::swc_odd(truncation)?;
            let mut c = GradedClass::zero(&ring);
            for i in 0..=(truncation / 4) {
                if binom_mod2(r, i as u64) {
                    c.add_assign(&GradedClass::monomial(&ring, Mono::from_exponents(&[i as u16])))?;
                }
            }
            TotalSwc::new(SwcRingKind::SwcOdd, check_above_degree(pi, c)?)
        }
        Parity::Even => {
            let (_, m) = m_pi(pi)?;
            let ring = Ring::dickson_abstract(params.r as usize, truncation)?;
            let c = dickson_sum(&ring, params.r as usize, false)?.pow_unit(m)?;
            TotalSwc::new(SwcRingKind::Dickson, check_above_degree(pi, c)?)
        }
    }
}

/// Number of monomials of degree at most `d` in `r` degree-one variables.
pub fn monomials_up_to(r: u32, d: u32) -> u64 {
    // C(d + r, r)
    let mut c: u64 = 1;
    for i in 1..=r as u64 {
        c = c.saturating_mul(d as u64 + i) / i;
    }
    c
}

/// `(1 + D)^{m_pi}` with each Dickson invariant expanded in `F2[v1..vr]`.
pub fn expanded_swc(pi: &VirtualRep, truncation: u32) -> Result<TotalSwc, SwcError> {
    let params = sl2_parameters(pi)?;
    if params.parity != Parity::Even {
        return Err(SwcError::WrongParity { expected: "even" });
    }
    let (_, m) = m_pi(pi)?;
    let ring = Ring::elementary_abelian(params.r as usize, truncation)?;
    let c = dickson_sum(&ring, params.r as usize, true)?.pow_unit(m)?;
    TotalSwc::new(SwcRingKind::Elementary, check_above_degree(pi, c)?)
}

/// The first nonzero positive-degree class: `e^{2^t}` in degree `2^{t+2}`,
/// `t = ord2(r_pi)`, or `d1^{2^s}` in degree `2^{r+s-1}`, `s = ord2(m_pi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    /// `None` when the total class is 1.
    pub degree: Option<u64>,
    pub class: Option<GradedClass>,
    /// Whether the closed form was compared with the expansion (the degree
    /// is within the truncation).
    pub checked: bool,
}

pub fn obstruction(pi: &VirtualRep, total: &TotalSwc) -> Result<Obstruction, SwcError> {
    let params = sl2_parameters(pi)?;
    let (n, lead_degree) = match params.parity {
        Parity::Odd => (r_pi(pi)?, 4u64),
        Parity::Even => (m_pi(pi)?.1, 1u64 << (params.r - 1)),
    };
    let c = total.class();
    if n == 0 {
        if !c.is_one() {
            return Err(SwcError::Inconsistent("total class is not 1 although the exponent vanishes"));
        }
        return Ok(Obstruction { degree: None, class: None, checked: true });
    }
    let t = ord2(n);
    let degree = lead_degree.checked_shl(t).filter(|&d| d >> t == lead_degree).unwrap_or(u64::MAX);
    let ring = c.ring();
    if degree > ring.truncation() as u64 {
        return Ok(Obstruction { degree: Some(degree), class: None, checked: false });
    }
    let mut mono = Mono::generator(0);
    for _ in 0..t {
        mono = mono.square();
    }
    let class = GradedClass::monomial(ring, mono);
    if c.lowest_positive_degree() != Some(degree as u32) || c.component(degree as u32) != class {
        return Err(SwcError::Inconsistent("obstruction class differs from the expansion"));
    }
    Ok(Obstruction { degree: Some(degree), class: Some(class), checked: true })
}

/// Whether the top class `w_{deg pi}` is nonzero, and the criterion used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopClass {
    pub nonzero: bool,
    pub criterion: &'static str,
    /// Whether the criterion was compared with the top coefficient of the
    /// expansion (the degree is within the truncation).
    pub checked: bool,
}

/// Odd `q`: nonzero iff `-1` acts by `-1`, i.e. `chi(-1) = -chi(1)`.
/// Even `q`: nonzero iff `pi` has no `N`-fixed vectors, i.e. `ell_pi = 0`.
pub fn top_swc_nonzero(pi: &VirtualRep, total: &TotalSwc) -> Result<TopClass, SwcError> {
    if !pi.is_genuine() {
        return Err(SwcError::NotGenuine);
    }
    let params = sl2_parameters(pi)?;
    let deg = pi.degree();
    let (nonzero, criterion) = match params.parity {
        Parity::Odd => {
            let cls = pi.table().classes().minus_one_class().ok_or(SwcError::NotSl2)?;
            if pi.integer_value(cls)? == -deg {
                (true, "chi(-1) = -chi(1)")
            } else {
                (false, "chi(-1) != -chi(1)")
            }
        }
        Parity::Even => {
            if m_pi(pi)?.0 == 0 {
                (true, "ell = 0")
            } else {
                (false, "ell != 0")
            }
        }
    };
    let checked = deg as u64 <= total.class().ring().truncation() as u64;
    if checked && nonzero == total.class().component(deg as u32).is_zero() {
        return Err(SwcError::Inconsistent("top class criterion differs from the expansion"));
    }
    Ok(TopClass { nonzero, criterion, checked })
}
