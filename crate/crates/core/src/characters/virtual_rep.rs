use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CharacterError, CharacterTable, ClassFunction};
use crate::algebra::Cyclo;

/// An integer combination of irreducible characters.
#[derive(Debug, Clone)]
pub struct VirtualRep {
    table: Arc<CharacterTable>,
    mult: Vec<i64>,
}

impl PartialEq for VirtualRep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) && self.mult == other.mult
    }
}

impl Eq for VirtualRep {}

/// A member of the orthogonally irreducible basis: an irreducible orthogonal
/// character, or `S(phi)` for the lower-indexed member `phi` of a
/// non-orthogonal pair (or a symplectic irreducible).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Oir {
    Irreducible(usize),
    Sym(usize),
}

impl VirtualRep {
    pub fn new(table: &Arc<CharacterTable>, mult: Vec<i64>) -> Result<Self, CharacterError> {
        if mult.len() != table.len() {
            return Err(CharacterError::UnknownIrreducible(mult.len()));
        }
        Ok(VirtualRep { table: Arc::clone(table), mult })
    }

    pub fn zero(table: &Arc<CharacterTable>) -> Self {
        VirtualRep { table: Arc::clone(table), mult: vec![0; table.len()] }
    }

    pub fn irreducible(table: &Arc<CharacterTable>, i: usize) -> Result<Self, CharacterError> {
        if i >= table.len() {
            return Err(CharacterError::UnknownIrreducible(i));
        }
        let mut r = VirtualRep::zero(table);
        r.mult[i] = 1;
        Ok(r)
    }

    pub fn trivial(table: &Arc<CharacterTable>) -> Self {
        VirtualRep::irreducible(table, 0).expect("every table has a trivial character")
    }

    pub fn regular(table: &Arc<CharacterTable>) -> Self {
        VirtualRep { table: Arc::clone(table), mult: table.degrees().to_vec() }
    }

    /// Decomposes a class function that is a virtual character.
    pub fn from_class_function(table: &Arc<CharacterTable>, f: &ClassFunction) -> Result<Self, CharacterError> {
        Ok(VirtualRep { table: Arc::clone(table), mult: table.decompose(f)? })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.mult
    }

    pub fn multiplicity(&self, i: usize) -> i64 {
        self.mult[i]
    }

    pub fn character(&self) -> ClassFunction {
        self.mult
            .iter()
            .zip(self.table.characters())
            .filter(|(&m, _)| m != 0)
            .fold(ClassFunction::zero(self.table.classes()), |acc, (&m, c)| acc.add(&c.scale(m)))
    }

    pub fn degree(&self) -> i64 {
        self.mult.iter().zip(self.table.degrees()).map(|(m, d)| m * d).sum()
    }

    /// Character value at a class.
    pub fn value(&self, class: usize) -> Cyclo {
        let ring = self.table.classes().ring();
        self.mult
            .iter()
            .zip(self.table.characters())
            .filter(|(&m, _)| m != 0)
            .fold(Cyclo::zero(ring), |acc, (&m, c)| &acc + &c.value(class).scale(m))
    }

    /// Character value at a class, which must be a rational integer.
    pub fn integer_value(&self, class: usize) -> Result<i64, CharacterError> {
        self.value(class).to_integer().map_err(|_| CharacterError::NotInteger)
    }

    pub fn is_genuine(&self) -> bool {
        self.mult.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    fn check_same(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.table, &other.table), "representations of different groups");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        VirtualRep { table: Arc::clone(&self.table), mult }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a - b).collect();
        VirtualRep { table: Arc::clone(&self.table), mult }
    }

    pub fn scale(&self, k: i64) -> Self {
        VirtualRep { table: Arc::clone(&self.table), mult: self.mult.iter().map(|m| m * k).collect() }
    }

    pub fn dual(&self) -> Self {
        let mut mult = vec![0; self.mult.len()];
        for (i, &m) in self.mult.iter().enumerate() {
            mult[self.table.dual(i)] += m;
        }
        VirtualRep { table: Arc::clone(&self.table), mult }
    }

    pub fn is_self_dual(&self) -> bool {
        (0..self.mult.len()).all(|i| self.mult[i] == self.mult[self.table.dual(i)])
    }

    /// Genuine and decomposable over the orthogonally irreducible basis.
    pub fn is_orthogonal(&self) -> bool {
        self.is_genuine() && decompose_orthogonal(self).is_ok()
    }

    /// The representation built from a combination of basis elements.
    pub fn from_oirs(table: &Arc<CharacterTable>, blocks: &[(Oir, i64)]) -> Result<Self, CharacterError> {
        let mut r = VirtualRep::zero(table);
        for &(oir, m) in blocks {
            let piece = match oir {
                Oir::Irreducible(i) => VirtualRep::irreducible(table, i)?,
                Oir::Sym(i) => symmetrize(&VirtualRep::irreducible(table, i)?),
            };
            r = r.add(&piece.scale(m));
        }
        Ok(r)
    }
}

/// `S(pi) = pi + dual(pi)`.
pub fn symmetrize(pi: &VirtualRep) -> VirtualRep {
    pi.add(&pi.dual())
}

/// Multiplicities over the orthogonally irreducible basis, in table order.
/// Works for virtual representations too; each irreducible orthogonal
/// character contributes its own multiplicity, each pair `{phi, dual(phi)}`
/// its common multiplicity, and each symplectic irreducible half of its
/// (necessarily even) multiplicity.
pub fn decompose_orthogonal(pi: &VirtualRep) -> Result<Vec<(Oir, i64)>, CharacterError> {
    let t = pi.table();
    let mut out = Vec::new();
    for i in 0..t.len() {
        let m = pi.multiplicity(i);
        let j = t.dual(i);
        match t.indicator(i) {
            1 => {
                if m != 0 {
                    out.push((Oir::Irreducible(i), m));
                }
            }
            0 => {
                if pi.multiplicity(j) != m {
                    return Err(CharacterError::NotOrthogonal(i));
                }
                if i < j && m != 0 {
                    out.push((Oir::Sym(i), m));
                }
            }
            _ => {
                if m % 2 != 0 {
                    return Err(CharacterError::NotOrthogonal(i));
                }
                if m != 0 {
                    out.push((Oir::Sym(i), m / 2));
                }
            }
        }
    }
    Ok(out)
}

/// All basis elements of the orthogonally irreducible basis, in table order.
pub fn oir_basis(table: &CharacterTable) -> Vec<Oir> {
    (0..table.len())
        .filter_map(|i| match table.indicator(i) {
            1 => Some(Oir::Irreducible(i)),
            0 if i < table.dual(i) => Some(Oir::Sym(i)),
            0 => None,
            _ => Some(Oir::Sym(i)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_table;
    use crate::groups::{build_sl2, conjugacy, gen_quaternion, DEFAULT_Q_CAP};

    fn table(q: u64) -> Arc<CharacterTable> {
        let cd = conjugacy(&build_sl2(q, DEFAULT_Q_CAP).unwrap()).unwrap();
        Arc::new(char_table(&cd).unwrap())
    }

    #[test]
    fn symmetrization_of_rho() {
        let cd = conjugacy(&gen_quaternion(3).unwrap()).unwrap();
        let t = Arc::new(char_table(&cd).unwrap());
        let s = symmetrize(&VirtualRep::irreducible(&t, 4).unwrap());
        assert_eq!(s.degree(), 4);
        let minus = cd.minus_one_class().unwrap();
        assert_eq!(s.integer_value(minus).unwrap(), -4);
        assert!(s.character().is_real());
    }

    #[test]
    fn regular_rep_decomposition() {
        let t = table(3);
        let reg = VirtualRep::regular(&t);
        let blocks = decompose_orthogonal(&reg).unwrap();
        for (oir, m) in blocks {
            match oir {
                Oir::Irreducible(i) => assert_eq!(m, t.degrees()[i]),
                Oir::Sym(i) if t.indicator(i) == -1 => assert_eq!(2 * m, t.degrees()[i]),
                Oir::Sym(i) => assert_eq!(m, t.degrees()[i]),
            }
        }
        let pi0 = (0..t.len()).find(|&i| t.indicator(i) == -1 && t.degrees()[i] == 2).unwrap();
        let single = VirtualRep::irreducible(&t, pi0).unwrap();
        assert_eq!(decompose_orthogonal(&single), Err(CharacterError::NotOrthogonal(pi0)));
        let s = symmetrize(&single);
        assert_eq!(decompose_orthogonal(&s).unwrap(), [(Oir::Sym(pi0), 1)]);
        assert_eq!(VirtualRep::from_oirs(&t, &[(Oir::Sym(pi0), 1)]).unwrap(), s);
    }

    #[test]
    fn symmetrize_doubles_degree() {
        let t = table(5);
        for i in 0..t.len() {
            let pi = VirtualRep::irreducible(&t, i).unwrap();
            let s = symmetrize(&pi);
            assert_eq!(s.degree(), 2 * pi.degree());
            assert!(s.is_orthogonal());
            assert!(s.character().is_real());
        }
        assert_eq!(symmetrize(&VirtualRep::trivial(&t)).multiplicity(0), 2);
    }
}
