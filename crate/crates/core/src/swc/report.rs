use alloc::vec::Vec;
use core::fmt;

use super::{
    default_truncation, expanded_swc, image_exponent, m_pi, monomials_up_to, obstruction, r_pi, sl2_parameters,
    top_swc_nonzero, total_swc, ImageExponent, Obstruction, Parity, SwcError, TopClass,
};
use crate::characters::VirtualRep;
use crate::cohomology::{GradedClass, Mono};

/// Which presentation a total class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SwcRingKind {
    /// `F2[e]`, the subalgebra of `H*(SL(2,q))` generated by `e`, `q` odd.
    SwcOdd,
    /// The Dickson algebra `F2[d1..dr]`, `q = 2^r`.
    Dickson,
    /// `F2[v1..vr]`, the cohomology of `N` or of an elementary abelian group.
    Elementary,
    /// `H*(Z) = F2[v]` for the center of order 2.
    Center,
    /// `H*(Q_8)`.
    Quaternion,
}

impl SwcRingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SwcRingKind::SwcOdd => "swc-odd",
            SwcRingKind::Dickson => "dickson",
            SwcRingKind::Elementary => "elementary",
            SwcRingKind::Center => "center",
            SwcRingKind::Quaternion => "quaternion",
        }
    }
}

/// A total class: a unit of a truncated ring with constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalSwc {
    kind: SwcRingKind,
    class: GradedClass,
}

impl TotalSwc {
    pub fn new(kind: SwcRingKind, class: GradedClass) -> Result<Self, SwcError> {
        if !class.is_unit() {
            return Err(SwcError::Inconsistent("total class must have constant term 1"));
        }
        Ok(TotalSwc { kind, class })
    }

    pub fn kind(&self) -> SwcRingKind {
        self.kind
    }

    pub fn class(&self) -> &GradedClass {
        &self.class
    }

    pub fn into_class(self) -> GradedClass {
        self.class
    }

    pub fn is_one(&self) -> bool {
        self.class.is_one()
    }

    /// `w_i`, the degree-`i` component.
    pub fn w(&self, i: u32) -> GradedClass {
        self.class.component(i)
    }

    /// The exponent `n` with `self = (1 + g)^n`, where `g = e` for `F2[e]` and
    /// `g = d1 + ... + dr` for the Dickson algebra.
    pub fn image_exponent(&self) -> Option<ImageExponent> {
        let ring = self.class.ring();
        let g = match self.kind {
            SwcRingKind::SwcOdd => GradedClass::generator(ring, "e").ok()?,
            SwcRingKind::Dickson => {
                let mut g = GradedClass::zero(ring);
                for i in 0..ring.generators().len() {
                    g.add_assign(&GradedClass::monomial(ring, Mono::generator(i))).ok()?;
                }
                g
            }
            _ => return None,
        };
        image_exponent(&self.class, &g)
    }
}

impl fmt::Display for TotalSwc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.class, f)
    }
}

/// Largest number of monomials for which a report includes the even-`q`
/// class expanded in `F2[v1..vr]`.
pub const EXPANSION_LIMIT: u64 = 50_000;

/// Everything the closed formulas say about one representation.
#[derive(Debug, Clone)]
pub struct SwcReport {
    pub q: u32,
    pub parity: Parity,
    /// `r_pi` for odd `q`, `m_pi` for even `q`.
    pub r_or_m: i64,
    /// `ell_pi`, even `q` only.
    pub ell: Option<i64>,
    pub degree: i64,
    pub genuine: bool,
    pub truncation: u32,
    pub total: TotalSwc,
    /// Even `q`: the total class with the Dickson invariants expanded in
    /// `F2[v1..vr]`, when that ring is small enough.
    pub expanded: Option<TotalSwc>,
    pub obstruction: Obstruction,
    /// Genuine representations only.
    pub top: Option<TopClass>,
}

impl SwcReport {
    /// Uses [`default_truncation`] when `truncation` is `None`.
    pub fn compute(pi: &VirtualRep, truncation: Option<u32>) -> Result<Self, SwcError> {
        let params = sl2_parameters(pi)?;
        let d = match truncation {
            Some(d) => d,
            None => default_truncation(pi)?,
        };
        let (r_or_m, ell) = match params.parity {
            Parity::Odd => (r_pi(pi)?, None),
            Parity::Even => {
                let (l, m) = m_pi(pi)?;
                (m, Some(l))
            }
        };
        let total = total_swc(pi, d)?;
        let expanded = match params.parity {
            Parity::Odd => None,
            Parity::Even if monomials_up_to(params.r, d) <= EXPANSION_LIMIT => Some(expanded_swc(pi, d)?),
            Parity::Even => None,
        };
        let obstruction = obstruction(pi, &total)?;
        let top = if pi.is_genuine() { Some(top_swc_nonzero(pi, &total)?) } else { None };
        Ok(SwcReport {
            q: params.q,
            parity: params.parity,
            r_or_m,
            ell,
            degree: pi.degree(),
            genuine: pi.is_genuine(),
            truncation: d,
            total,
            expanded,
            obstruction,
            top,
        })
    }

    /// Degrees and monomial strings of the total class.
    pub fn total_by_degree(&self) -> Vec<(u32, Vec<alloc::string::String>)> {
        self.total.class().by_degree()
    }
}
