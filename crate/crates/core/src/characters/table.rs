use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{CharacterError, ClassFunction};
use crate::algebra::Cyclo;
use crate::groups::ConjugacyData;

/// Frobenius–Schur indicator `|G|^-1 sum_g chi(g^2)`.
pub fn fs_indicator(chi: &ClassFunction) -> Result<i8, CharacterError> {
    let n = chi.classes().group().order() as i64;
    let s = chi.power(2).total().to_integer().map_err(|_| CharacterError::NotIndicator)?;
    match (s % n, s / n) {
        (0, v @ -1..=1) => Ok(v as i8),
        _ => Err(CharacterError::NotIndicator),
    }
}

/// The irreducible characters of a group in canonical order: by degree, then
/// by value vectors (classes in order, power-basis coefficients) in
/// decreasing lexicographic order, so the trivial character comes first.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: Arc<ConjugacyData>,
    chars: Vec<ClassFunction>,
    degrees: Vec<i64>,
    indicators: Vec<i8>,
    central: Option<Vec<i8>>,
    dual: Vec<usize>,
    prime: Option<u64>,
}

fn canonical_cmp(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.values().iter().zip(b.values()) {
            match y.coeffs().cmp(x.coeffs()) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl CharacterTable {
    /// Sorts, validates (both orthogonality relations and `sum d^2 = |G|`)
    /// and annotates a complete list of irreducible characters.
    pub fn from_characters(
        classes: &Arc<ConjugacyData>,
        mut chars: Vec<ClassFunction>,
    ) -> Result<Self, CharacterError> {
        let k = classes.num_classes();
        let n = classes.group().order() as i64;
        if chars.len() != k {
            return Err(CharacterError::LiftFailure("wrong number of characters"));
        }
        if chars.iter().any(|c| !Arc::ptr_eq(c.classes(), classes)) {
            return Err(CharacterError::LiftFailure("character on a different group"));
        }
        if chars.iter().any(|c| c.value(0).to_integer().map_or(true, |d| d <= 0)) {
            return Err(CharacterError::LiftFailure("degree is not a positive integer"));
        }
        chars.sort_by(canonical_cmp);
        let degrees: Vec<i64> = chars.iter().map(ClassFunction::degree).collect();
        if degrees.iter().map(|d| d * d).sum::<i64>() != n {
            return Err(CharacterError::LiftFailure("squared degrees do not sum to the group order"));
        }
        for i in 0..k {
            for j in i..k {
                let ip = chars[i].inner(&chars[j]).map_err(|_| CharacterError::LiftFailure("row orthogonality"))?;
                if ip != (i == j) as i64 {
                    return Err(CharacterError::LiftFailure("row orthogonality"));
                }
            }
        }
        let ring = classes.ring();
        for s in 0..k {
            for t in s..k {
                let sum = chars.iter().fold(Cyclo::zero(ring), |acc, c| &acc + &(c.value(s) * &c.value(t).conj()));
                let expected = if s == t { n / classes.size(t) as i64 } else { 0 };
                if sum != Cyclo::integer(ring, expected) {
                    return Err(CharacterError::LiftFailure("column orthogonality"));
                }
            }
        }
        let indicators = chars.iter().map(fs_indicator).collect::<Result<Vec<_>, _>>()?;
        let central = match classes.minus_one_class() {
            Some(c) => Some(
                chars
                    .iter()
                    .map(|chi| {
                        let v = chi.value(c).to_integer().map_err(|_| CharacterError::NotInteger)?;
                        Ok((v / chi.degree()) as i8)
                    })
                    .collect::<Result<Vec<_>, CharacterError>>()?,
            ),
            None => None,
        };
        let duals: Vec<ClassFunction> = chars.iter().map(ClassFunction::dual).collect();
        let dual = duals
            .iter()
            .map(|d| chars.iter().position(|c| c == d).ok_or(CharacterError::LiftFailure("dual missing")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharacterTable { classes: Arc::clone(classes), chars, degrees, indicators, central, dual, prime: None })
    }

    pub(crate) fn set_prime(&mut self, l: u64) {
        self.prime = Some(l);
    }

    /// The prime used by the modular eigenvector search, if computed here.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn classes(&self) -> &Arc<ConjugacyData> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.chars
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.chars[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn indicator(&self, i: usize) -> i8 {
        self.indicators[i]
    }

    pub fn indicators(&self) -> &[i8] {
        &self.indicators
    }

    /// `chi(-1) / chi(1)` for each character, when the group has a central `-1`.
    pub fn central_signs(&self) -> Option<&[i8]> {
        self.central.as_deref()
    }

    /// Index of the dual character.
    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<i64>, CharacterError> {
        let mult = self.chars.iter().map(|c| f.inner(c)).collect::<Result<Vec<_>, _>>()?;
        let rebuilt =
            mult.iter().zip(&self.chars).fold(ClassFunction::zero(&self.classes), |acc, (&m, c)| acc.add(&c.scale(m)));
        if rebuilt != *f {
            return Err(CharacterError::NotVirtualCharacter);
        }
        Ok(mult)
    }
}
