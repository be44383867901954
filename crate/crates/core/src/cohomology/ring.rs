use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::CohomologyError;

/// Most generators a presentation may have.
pub const MAX_GENERATORS: usize = 8;

/// Largest truncation degree accepted.
pub const MAX_TRUNCATION: u32 = 16_384;

/// A monomial as an exponent vector in presentation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [u16; MAX_GENERATORS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_GENERATORS]);

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = [0u16; MAX_GENERATORS];
        m[..exps.len()].copy_from_slice(exps);
        Mono(m)
    }

    pub fn generator(i: usize) -> Self {
        let mut m = Mono::ONE;
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16; MAX_GENERATORS] {
        &self.0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        out
    }

    pub fn square(&self) -> Mono {
        self.mul(self)
    }

    fn variables(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }
}

/// A relation: the `F2`-sum of its monomials.
pub type Relation = Vec<Mono>;

/// A finitely presented commutative graded `F2`-algebra, truncated above a
/// fixed degree, with normal forms computed degree by degree.
pub struct Ring {
    name: String,
    gens: Vec<String>,
    degrees: Vec<u32>,
    relations: Vec<Relation>,
    truncation: u32,
    /// Reductions of the non-standard monomials (quotient rings only).
    reduce: BTreeMap<Mono, Vec<Mono>>,
    /// Standard monomials per degree (quotient rings only).
    basis: Option<Vec<Vec<Mono>>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("name", &self.name)
            .field("gens", &self.gens)
            .field("degrees", &self.degrees)
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
            && self.degrees == other.degrees
            && self.relations == other.relations
            && self.truncation == other.truncation
    }
}

impl Eq for Ring {}

/// All monomials of total degree `d` for the given generator degrees.
pub(crate) fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Mono> {
    fn go(degrees: &[u32], i: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let mut e = 0;
        loop {
            cur.0[i] = e as u16;
            go(degrees, i + 1, left - e * degrees[i], cur, out);
            if (e + 1) * degrees[i] > left {
                break;
            }
            e += 1;
        }
        cur.0[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = Mono::ONE;
    go(degrees, 0, d, &mut cur, &mut out);
    out
}

/// Bit rows over `F2`.
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= *b;
        }
    }
}

impl Ring {
    /// Builds a ring from generator names and degrees, homogeneous relations
    /// and a truncation degree.
    pub fn new(
        name: &str,
        gens: &[(&str, u32)],
        relations: Vec<Relation>,
        truncation: u32,
    ) -> Result<Arc<Self>, CohomologyError> {
        if gens.len() > MAX_GENERATORS {
            return Err(CohomologyError::TooManyGenerators(gens.len()));
        }
        if gens.iter().any(|&(_, d)| d == 0) {
            return Err(CohomologyError::ZeroDegreeGenerator);
        }
        if truncation > MAX_TRUNCATION {
            return Err(CohomologyError::TruncationTooHigh(truncation));
        }
        let degrees: Vec<u32> = gens.iter().map(|g| g.1).collect();
        let mut ring = Ring {
            name: name.to_string(),
            gens: gens.iter().map(|g| g.0.to_string()).collect(),
            degrees,
            relations: Vec::new(),
            truncation,
            reduce: BTreeMap::new(),
            basis: None,
        };
        let mut rels = Vec::with_capacity(relations.len());
        for (i, mut rel) in relations.into_iter().enumerate() {
            rel.sort_unstable();
            // F2: pairs cancel
            let mut dedup: Vec<Mono> = Vec::new();
            for m in rel {
                if dedup.last() == Some(&m) {
                    dedup.pop();
                } else {
                    dedup.push(m);
                }
            }
            if dedup.is_empty() {
                continue;
            }
            let d = ring.mono_degree(&dedup[0]);
            if dedup.iter().any(|m| ring.mono_degree(m) != d) {
                return Err(CohomologyError::InhomogeneousRelation(i));
            }
            rels.push(dedup);
        }
        ring.relations = rels;
        if !ring.relations.is_empty() {
            ring.build_normal_forms();
        }
        Ok(Arc::new(ring))
    }

    fn build_normal_forms(&mut self) {
        let mut basis = Vec::with_capacity(self.truncation as usize + 1);
        for d in 0..=self.truncation {
            let mut monos = monomials_of_degree(&self.degrees, d);
            // pivot preference: monomials in several variables first
            monos.sort_by_key(|m| (m.variables() <= 1, *m));
            let col: BTreeMap<Mono, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let mut rows: Vec<BitRow> = Vec::new();
            for rel in &self.relations {
                let rd = self.mono_degree(&rel[0]);
                if rd > d {
                    continue;
                }
                for mu in monomials_of_degree(&self.degrees, d - rd) {
                    let mut row = BitRow::zeros(monos.len());
                    for m in rel {
                        row.flip(col[&m.mul(&mu)]);
                    }
                    rows.push(row);
                }
            }
            // reduced row echelon form
            let mut pivots: Vec<(usize, BitRow)> = Vec::new();
            for c in 0..monos.len() {
                let Some(p) = rows.iter().position(|r| r.get(c)) else { continue };
                let prow = rows.swap_remove(p);
                for r in rows.iter_mut() {
                    if r.get(c) {
                        r.xor(&prow);
                    }
                }
                for (_, r) in pivots.iter_mut() {
                    if r.get(c) {
                        r.xor(&prow);
                    }
                }
                pivots.push((c, prow));
            }
            let is_pivot: Vec<bool> = {
                let mut v = vec![false; monos.len()];
                for (c, _) in &pivots {
                    v[*c] = true;
                }
                v
            };
            for (c, row) in &pivots {
                let rest = (0..monos.len()).filter(|&j| j != *c && row.get(j)).map(|j| monos[j]).collect();
                self.reduce.insert(monos[*c], rest);
            }
            let mut std_monos: Vec<Mono> = (0..monos.len()).filter(|&j| !is_pivot[j]).map(|j| monos[j]).collect();
            std_monos.sort_unstable();
            basis.push(std_monos);
        }
        self.basis = Some(basis);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn mono_degree(&self, m: &Mono) -> u32 {
        m.0.iter().zip(&self.degrees).map(|(&e, &d)| e as u32 * d).sum()
    }

    /// Normal form of a monomial as a list of standard monomials; empty
    /// above the truncation degree.
    pub(crate) fn normal_form(&self, m: &Mono) -> NormalForm<'_> {
        if self.mono_degree(m) > self.truncation {
            return NormalForm::Zero;
        }
        match self.reduce.get(m) {
            Some(v) => NormalForm::Many(v),
            None => NormalForm::One(*m),
        }
    }

    /// Standard monomials of degree `d`.
    pub fn basis(&self, d: u32) -> Vec<Mono> {
        if d > self.truncation {
            return Vec::new();
        }
        match &self.basis {
            Some(b) => b[d as usize].clone(),
            None => {
                let mut v = monomials_of_degree(&self.degrees, d);
                v.sort_unstable();
                v
            }
        }
    }

    /// Dimensions of degrees `0..=D`.
    pub fn graded_dims(&self) -> Vec<usize> {
        match &self.basis {
            Some(b) => b.iter().map(Vec::len).collect(),
            None => {
                let mut dims = vec![0usize; self.truncation as usize + 1];
                dims[0] = 1;
                for &g in &self.degrees {
                    for d in g as usize..dims.len() {
                        dims[d] += dims[d - g as usize];
                    }
                }
                dims
            }
        }
    }

    pub fn format_mono(&self, m: &Mono) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .zip(m.0.iter())
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| if e == 1 { g.clone() } else { format!("{g}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// The same presentation with another truncation degree.
    pub fn with_truncation(&self, truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        let gens: Vec<(&str, u32)> = self.gens.iter().map(String::as_str).zip(self.degrees.iter().copied()).collect();
        Ring::new(&self.name, &gens, self.relations.clone(), truncation)
    }

    /// `H*(Q_8) = F2[x, y, e] / (xy + x^2 + y^2, x^2 y + x y^2)`.
    pub fn quaternion8(truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        let m = |x, y| Mono::from_exponents(&[x, y]);
        Ring::new(
            "H*(Q8)",
            &[("x", 1), ("y", 1), ("e", 4)],
            vec![vec![m(1, 1), m(2, 0), m(0, 2)], vec![m(2, 1), m(1, 2)]],
            truncation,
        )
    }

    /// `H*(Q_{2^n}) = F2[X, Y, E] / (XY, X^3 + Y^3)` for `n >= 4`.
    pub fn gen_quaternion(n: u32, truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        let m = |x, y| Mono::from_exponents(&[x, y]);
        Ring::new(
            &format!("H*(Q{})", 1u64 << n),
            &[("X", 1), ("Y", 1), ("E", 4)],
            vec![vec![m(1, 1)], vec![m(3, 0), m(0, 3)]],
            truncation,
        )
    }

    /// `H*(SL(2,q)) = F2[b, e] / (b^2)` for odd `q`, `deg b = 3`, `deg e = 4`.
    pub fn sl2_odd(truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        Ring::new("H*(SL(2,q))", &[("b", 3), ("e", 4)], vec![vec![Mono::from_exponents(&[2])]], truncation)
    }

    /// The subalgebra `F2[e]` generated by the Stiefel-Whitney classes for odd `q`.
    pub fn swc_odd(truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        Ring::new("F2[e]", &[("e", 4)], Vec::new(), truncation)
    }

    /// `H*((Z/2)^r) = F2[v1..vr]` (`F2[v]` for `r = 1`).
    pub fn elementary_abelian(r: usize, truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        if r == 0 {
            return Err(CohomologyError::TooManyGenerators(0));
        }
        let names: Vec<String> =
            if r == 1 { vec!["v".to_string()] } else { (1..=r).map(|i| format!("v{i}")).collect() };
        let gens: Vec<(&str, u32)> = names.iter().map(|n| (n.as_str(), 1)).collect();
        Ring::new(&format!("H*(C2^{r})"), &gens, Vec::new(), truncation)
    }

    /// The polynomial ring on Dickson invariants `d1..dr`, `deg d_i = 2^r - 2^{r-i}`.
    pub fn dickson_abstract(r: usize, truncation: u32) -> Result<Arc<Ring>, CohomologyError> {
        if r == 0 || r > MAX_GENERATORS {
            return Err(CohomologyError::TooManyGenerators(r));
        }
        let names: Vec<String> = (1..=r).map(|i| format!("d{i}")).collect();
        let gens: Vec<(&str, u32)> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), (1u32 << r) - (1u32 << (r - i - 1)))).collect();
        Ring::new(&format!("F2[d1..d{r}]"), &gens, Vec::new(), truncation)
    }
}

pub(crate) enum NormalForm<'a> {
    Zero,
    One(Mono),
    Many(&'a [Mono]),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_dims() {
        let r = Ring::quaternion8(12).unwrap();
        assert_eq!(r.graded_dims(), [1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1]);
        let x2y = Mono::from_exponents(&[2, 1]);
        assert_eq!(r.basis(3), [x2y]);
        assert_eq!(r.basis(2), [Mono::from_exponents(&[0, 2]), Mono::from_exponents(&[2, 0])]);
    }

    #[test]
    fn generalized_quaternion_basis() {
        let r = Ring::gen_quaternion(4, 8).unwrap();
        assert_eq!(r.basis(3), [Mono::from_exponents(&[3, 0])]);
        assert_eq!(r.graded_dims()[..5], [1, 2, 2, 1, 1]);
    }

    #[test]
    fn other_dims() {
        assert_eq!(Ring::elementary_abelian(1, 5).unwrap().graded_dims(), [1; 6]);
        assert_eq!(Ring::sl2_odd(8).unwrap().graded_dims(), [1, 0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(Ring::elementary_abelian(2, 3).unwrap().graded_dims(), [1, 2, 3, 4]);
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let err = Ring::new(
            "bad",
            &[("x", 1), ("y", 2)],
            vec![vec![Mono::from_exponents(&[2]), Mono::from_exponents(&[0, 2])]],
            4,
        );
        assert_eq!(err.unwrap_err(), CohomologyError::InhomogeneousRelation(0));
    }

    #[test]
    fn monomial_strings() {
        let r = Ring::quaternion8(4).unwrap();
        assert_eq!(r.format_mono(&Mono::from_exponents(&[2, 1])), "x^2*y");
        assert_eq!(r.format_mono(&Mono::ONE), "1");
    }
}
