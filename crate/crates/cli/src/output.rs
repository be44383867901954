//! JSON documents written by the command-line tool.

use std::sync::Arc;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sl2swc_core::characters::CharacterTable;
use sl2swc_core::cohomology::{GradedClass, Ring};
use sl2swc_core::groups::GroupElem;
use sl2swc_core::swc::SwcReport;

pub const SCHEMA: &str = "sl2swc/1";

/// A graded class as an object from degree to monomial strings, degrees
/// ascending.
pub struct Graded<'a>(pub &'a GradedClass);

impl Serialize for Graded<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts = self.0.by_degree();
        let mut map = s.serialize_map(Some(parts.len()))?;
        for (d, monos) in &parts {
            map.serialize_entry(&d.to_string(), monos)?;
        }
        map.end()
    }
}

/// A positive degree, or infinity when the class is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(d) => s.serialize_u64(*d),
            Degree::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[derive(Serialize)]
pub struct ClassJson {
    pub representative: [u32; 4],
    pub size: usize,
    pub element_order: u32,
}

#[derive(Serialize)]
pub struct CharacterJson {
    pub label: String,
    pub degree: i64,
    pub indicator: i8,
    pub central_sign: Option<i8>,
    pub dual: String,
    pub values: Vec<String>,
}

#[derive(Serialize)]
pub struct TableJson {
    pub schema: &'static str,
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassJson>,
    pub characters: Vec<CharacterJson>,
}

impl TableJson {
    pub fn new(t: &CharacterTable) -> Self {
        let cd = t.classes();
        let classes = (0..cd.num_classes())
            .map(|c| ClassJson {
                representative: match cd.group().elem(cd.representative(c)) {
                    GroupElem::Matrix(m) => *m,
                    GroupElem::Quaternion { k, l } => [*k, *l as u32, 0, 0],
                },
                size: cd.size(c),
                element_order: cd.element_order(c),
            })
            .collect();
        let characters = (0..t.len())
            .map(|i| CharacterJson {
                label: format!("X{}", i + 1),
                degree: t.degrees()[i],
                indicator: t.indicator(i),
                central_sign: t.central_signs().map(|s| s[i]),
                dual: format!("X{}", t.dual(i) + 1),
                values: t.character(i).values().iter().map(ToString::to_string).collect(),
            })
            .collect();
        TableJson {
            schema: SCHEMA,
            group: cd.group().name().to_string(),
            order: cd.group().order(),
            classes,
            characters,
        }
    }
}

#[derive(Serialize)]
pub struct ImageJson {
    pub residue: u64,
    pub modulus_log2: u32,
}

#[derive(Serialize)]
pub struct SwcJson<'a> {
    pub schema: &'static str,
    pub q: u32,
    pub parity: &'static str,
    pub rep: String,
    pub degree: i64,
    pub genuine: bool,
    pub r_or_m: i64,
    pub ell: Option<i64>,
    pub truncation: u32,
    pub ring: &'static str,
    pub total: Graded<'a>,
    pub total_string: String,
    pub expanded: Option<Graded<'a>>,
    pub expanded_string: Option<String>,
    pub image_exponent: Option<ImageJson>,
    pub obstruction_degree: Degree,
    pub obstruction_class: Option<String>,
    pub obstruction_checked: bool,
    pub top_nonzero: Option<bool>,
    pub criterion: Option<&'static str>,
    pub top_checked: Option<bool>,
}

impl<'a> SwcJson<'a> {
    pub fn new(rep: String, r: &'a SwcReport) -> Self {
        SwcJson {
            schema: SCHEMA,
            q: r.q,
            parity: r.parity.as_str(),
            rep,
            degree: r.degree,
            genuine: r.genuine,
            r_or_m: r.r_or_m,
            ell: r.ell,
            truncation: r.truncation,
            ring: r.total.kind().as_str(),
            total: Graded(r.total.class()),
            total_string: r.total.to_string(),
            expanded: r.expanded.as_ref().map(|e| Graded(e.class())),
            expanded_string: r.expanded.as_ref().map(ToString::to_string),
            image_exponent: r.total.image_exponent().map(|n| ImageJson { residue: n.residue, modulus_log2: n.bits }),
            obstruction_degree: r.obstruction.degree.map_or(Degree::Infinite, Degree::Finite),
            obstruction_class: r.obstruction.class.as_ref().map(ToString::to_string),
            obstruction_checked: r.obstruction.checked,
            top_nonzero: r.top.as_ref().map(|t| t.nonzero),
            criterion: r.top.as_ref().map(|t| t.criterion),
            top_checked: r.top.as_ref().map(|t| t.checked),
        }
    }
}

#[derive(Serialize)]
pub struct InvariantJson<'a> {
    pub name: String,
    pub degree: u32,
    pub value: String,
    pub terms: Graded<'a>,
}

#[derive(Serialize)]
pub struct DicksonJson<'a> {
    pub schema: &'static str,
    pub rank: usize,
    pub truncation: u32,
    pub invariants: Vec<InvariantJson<'a>>,
}

impl<'a> DicksonJson<'a> {
    pub fn new(rank: usize, truncation: u32, invariants: &'a [GradedClass]) -> Self {
        let invariants = invariants
            .iter()
            .enumerate()
            .map(|(i, d)| InvariantJson {
                name: format!("d{}", i + 1),
                degree: (1 << rank) - (1 << (rank - i - 1)),
                value: d.to_string(),
                terms: Graded(d),
            })
            .collect();
        DicksonJson { schema: SCHEMA, rank, truncation, invariants }
    }
}

#[derive(Serialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct BasisJson {
    pub degree: u32,
    pub monomials: Vec<String>,
}

#[derive(Serialize)]
pub struct CohomologyJson {
    pub schema: &'static str,
    pub group: String,
    pub ring: String,
    pub generators: Vec<GeneratorJson>,
    pub relations: Vec<String>,
    pub max_degree: u32,
    pub dims: Vec<usize>,
    pub basis: Vec<BasisJson>,
}

impl CohomologyJson {
    pub fn new(group: &str, ring: &Arc<Ring>) -> Self {
        let generators = ring
            .generators()
            .iter()
            .zip(ring.degrees())
            .map(|(name, &degree)| GeneratorJson { name: name.clone(), degree })
            .collect();
        let relations = ring
            .relations()
            .iter()
            .map(|rel| rel.iter().map(|m| ring.format_mono(m)).collect::<Vec<_>>().join(" + "))
            .collect();
        let basis = (0..=ring.truncation())
            .map(|d| BasisJson { degree: d, monomials: ring.basis(d).iter().map(|m| ring.format_mono(m)).collect() })
            .collect();
        CohomologyJson {
            schema: SCHEMA,
            group: group.to_string(),
            ring: ring.name().to_string(),
            generators,
            relations,
            max_degree: ring.truncation(),
            dims: ring.graded_dims(),
            basis,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorJson<'a> {
    pub error: &'a str,
    pub detail: String,
}
