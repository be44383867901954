//! Verification suites run by `sl2swc verify`: the closed forms against the
//! restriction oracles, the Wu formula, the Frobenius-Schur indicators and
//! the obstruction degrees.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sl2swc_core::algebra::arith::ext_gcd;
use sl2swc_core::characters::{oir_basis, CharacterTable, Oir, VirtualRep};
use sl2swc_core::cohomology::{steenrod_sq, GradedClass, Mono, Ring};
use sl2swc_core::oracle::{oracle_swc_n, oracle_swc_z, verify_theorem_in, wu_rhs, OracleError, TheoremContext};
use sl2swc_core::swc::{m_pi, monomials_up_to, obstruction, r_pi, total_swc, SwcError};
use thiserror::Error;

use crate::expr::{Atom, ExprError, RepExpr, Term};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_THEOREM_TRIALS: usize = 200;
pub const DEFAULT_WU_TRIALS: usize = 100;
/// Degree bound for random representations.
pub const MAX_RANDOM_DEGREE: i64 = 2000;
pub const TRUNCATION_CAP: u32 = 64;
/// Bound on the monomial count of the expanded ring for even `q`.
pub const EVEN_MONOMIAL_BUDGET: u64 = 50_000;
/// `Sq^i w_j` is checked for `1 <= i <= j` and `i + j <= WU_DEGREE`.
pub const WU_DEGREE: u32 = 6;
/// Exponents `n` for which `(1 + g)^n` is checked.
pub const SINGLE_VARIABLE_RANGE: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Swc(#[from] SwcError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Theorem,
    Wu,
    Gow,
    Obstruction,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Wu => "wu",
            Suite::Gow => "gow",
            Suite::Obstruction => "obstruction",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub rep: String,
    pub degree: Option<u32>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub q: u32,
    pub cases: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub seed: u64,
}

impl SuiteReport {
    fn new(suite: Suite, q: u32, seed: u64) -> Self {
        SuiteReport { suite: suite.as_str(), q, cases: 0, passes: 0, failures: Vec::new(), seed }
    }

    fn record(&mut self, outcome: Result<(), Failure>) {
        self.cases += 1;
        match outcome {
            Ok(()) => self.passes += 1,
            Err(f) => self.failures.push(f),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Concatenates several reports into one.
    pub fn combine(q: u32, seed: u64, parts: &[SuiteReport]) -> Self {
        let mut out = SuiteReport::new(Suite::All, q, seed);
        for p in parts {
            out.cases += p.cases;
            out.passes += p.passes;
            out.failures.extend(p.failures.iter().cloned());
        }
        out
    }
}

fn failure(rep: &str, e: impl ToString) -> Failure {
    Failure { rep: rep.to_string(), degree: None, lhs: e.to_string(), rhs: String::new() }
}

fn oracle_failure(rep: &str, e: OracleError) -> Failure {
    match e {
        OracleError::Mismatch { degree, lhs, rhs, .. } => {
            Failure { rep: rep.to_string(), degree: Some(degree), lhs, rhs }
        }
        e => failure(rep, e),
    }
}

fn table_q(table: &CharacterTable) -> u32 {
    table.classes().group().q().unwrap_or(0)
}

fn oir_degree(table: &CharacterTable, b: Oir) -> i64 {
    match b {
        Oir::Irreducible(i) => table.degrees()[i],
        Oir::Sym(i) => 2 * table.degrees()[i],
    }
}

fn oir_atom(b: Oir) -> Atom {
    match b {
        Oir::Irreducible(i) => Atom::Irr(i + 1),
        Oir::Sym(i) => Atom::Sym(Box::new(Atom::Irr(i + 1))),
    }
}

/// The members of the orthogonally irreducible basis as expressions.
pub fn basis_exprs(table: &CharacterTable) -> Vec<RepExpr> {
    oir_basis(table).into_iter().map(|b| RepExpr::atom(1, oir_atom(b))).collect()
}

/// A random genuine orthogonal representation: up to 20 draws of a basis
/// member with multiplicity 1 to 3, keeping the degree at most `max_degree`.
pub fn random_orthogonal(table: &CharacterTable, rng: &mut impl Rng, max_degree: i64) -> RepExpr {
    let basis = oir_basis(table);
    let mut mult = vec![0i64; basis.len()];
    let mut degree = 0;
    for _ in 0..rng.gen_range(1..=20) {
        let i = rng.gen_range(0..basis.len());
        let k = rng.gen_range(1..=3);
        let d = k * oir_degree(table, basis[i]);
        if degree + d <= max_degree {
            mult[i] += k;
            degree += d;
        }
    }
    if degree == 0 {
        mult[0] = 1;
    }
    let terms =
        basis.iter().zip(&mult).filter(|(_, &k)| k != 0).map(|(&b, &k)| Term { coeff: k, atom: oir_atom(b) }).collect();
    RepExpr::new(terms).unwrap_or_else(|| RepExpr::atom(1, Atom::Triv))
}

/// `r_pi` for odd `q`, `m_pi` for even `q`.
pub fn exponent(pi: &VirtualRep) -> Result<i64, SwcError> {
    if table_q(pi.table()) % 2 == 1 {
        r_pi(pi)
    } else {
        Ok(m_pi(pi)?.1)
    }
}

/// An integer combination of basis members whose exponent ([`exponent`]) is
/// 1, found by folding the extended gcd over the basis.
pub fn unit_rep(table: &Arc<CharacterTable>) -> Result<Option<RepExpr>, SuiteError> {
    let basis = basis_exprs(table);
    let mut coeffs = vec![0i64; basis.len()];
    let mut g = 0;
    for (i, b) in basis.iter().enumerate() {
        let v = exponent(&b.eval(table)?)?;
        let (h, x, y) = ext_gcd(g, v);
        for c in coeffs.iter_mut() {
            *c *= x;
        }
        coeffs[i] = y;
        g = h;
    }
    if g != 1 {
        return Ok(None);
    }
    let terms = basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| *c != 0)
        .map(|(b, c)| Term { coeff: c, atom: b.terms()[0].atom.clone() })
        .collect();
    Ok(RepExpr::new(terms))
}

/// Truncation used to compare with the oracles: `min(deg pi, 64)`, lowered
/// for even `q` so the expanded ring stays within [`EVEN_MONOMIAL_BUDGET`].
pub fn check_truncation(pi: &VirtualRep) -> u32 {
    let q = table_q(pi.table());
    let mut cap = TRUNCATION_CAP;
    if q.is_multiple_of(2) {
        let r = q.trailing_zeros();
        while cap > 1 && monomials_up_to(r, cap) > EVEN_MONOMIAL_BUDGET {
            cap -= 1;
        }
    }
    (pi.degree().clamp(1, cap as i64)) as u32
}

/// Theorem contexts by truncation.
struct Contexts<'a> {
    table: &'a CharacterTable,
    by_truncation: BTreeMap<u32, TheoremContext>,
}

impl<'a> Contexts<'a> {
    fn new(table: &'a CharacterTable) -> Self {
        Contexts { table, by_truncation: BTreeMap::new() }
    }

    fn get(&mut self, truncation: u32) -> Result<&TheoremContext, OracleError> {
        if !self.by_truncation.contains_key(&truncation) {
            self.by_truncation.insert(truncation, TheoremContext::new(self.table, truncation)?);
        }
        Ok(&self.by_truncation[&truncation])
    }
}

fn check_theorem(table: &Arc<CharacterTable>, contexts: &mut Contexts, e: &RepExpr) -> Result<(), Failure> {
    let rep = e.to_string();
    let pi = e.eval(table).map_err(|err| failure(&rep, err))?;
    let ctx = contexts.get(check_truncation(&pi)).map_err(|err| failure(&rep, err))?;
    verify_theorem_in(&pi, ctx).map_err(|err| oracle_failure(&rep, err))?;
    Ok(())
}

fn check_m_one(table: &Arc<CharacterTable>, i: usize) -> Result<(), Failure> {
    let rep = format!("X{}", i + 1);
    let pi = VirtualRep::irreducible(table, i).map_err(|e| failure(&rep, e))?;
    match m_pi(&pi).map_err(|e| failure(&rep, e))?.1 {
        1 => Ok(()),
        m => Err(Failure { rep, degree: None, lhs: format!("m = {m}"), rhs: "m = 1".into() }),
    }
}

/// Every basis member and `trials` random genuine orthogonal
/// representations: the closed form against the oracles. For even `q` also
/// `m_pi = 1` for each nontrivial irreducible.
pub fn theorem(table: &Arc<CharacterTable>, trials: usize, seed: u64) -> SuiteReport {
    let q = table_q(table);
    let mut report = SuiteReport::new(Suite::Theorem, q, seed);
    let mut contexts = Contexts::new(table);
    for e in basis_exprs(table) {
        report.record(check_theorem(table, &mut contexts, &e));
    }
    if q.is_multiple_of(2) {
        for i in 1..table.len() {
            report.record(check_m_one(table, i));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let e = random_orthogonal(table, &mut rng, MAX_RANDOM_DEGREE);
        report.record(check_theorem(table, &mut contexts, &e));
    }
    report
}

/// Pairs `(i, j)` with `1 <= i <= j` and `i + j <= WU_DEGREE`.
pub fn wu_pairs() -> Vec<(u32, u32)> {
    (1..=WU_DEGREE).flat_map(|i| (i..=WU_DEGREE - i).map(move |j| (i, j))).collect()
}

/// The Wu formula on the oracle classes (`Z` for odd `q`, `N` for even `q`)
/// of `trials` random representations.
pub fn wu(table: &Arc<CharacterTable>, trials: usize, seed: u64) -> SuiteReport {
    let q = table_q(table);
    let mut report = SuiteReport::new(Suite::Wu, q, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let e = random_orthogonal(table, &mut rng, MAX_RANDOM_DEGREE);
        let rep = e.to_string();
        let w = e.eval(table).map_err(|err| failure(&rep, err)).and_then(|pi| {
            let w = if q % 2 == 1 { oracle_swc_z(&pi, WU_DEGREE) } else { oracle_swc_n(&pi, WU_DEGREE) };
            w.map_err(|err| failure(&rep, err))
        });
        let w = match w {
            Ok(w) => w,
            Err(f) => {
                report.record(Err(f));
                continue;
            }
        };
        for (i, j) in wu_pairs() {
            report.record(check_wu(&rep, w.class(), i, j));
        }
    }
    report
}

fn check_wu(rep: &str, w: &GradedClass, i: u32, j: u32) -> Result<(), Failure> {
    let lhs = steenrod_sq(i, &w.component(j)).map_err(|err| failure(rep, err))?;
    let rhs = wu_rhs(w, i, j).map_err(|err| failure(rep, err))?;
    if lhs == rhs {
        return Ok(());
    }
    Err(Failure {
        rep: format!("{rep} (Sq^{i} w_{j})"),
        degree: Some(i + j),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Every self-dual irreducible has indicator equal to its central sign
/// (`1` for even `q`).
pub fn gow(table: &Arc<CharacterTable>, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Gow, table_q(table), seed);
    for i in (0..table.len()).filter(|&i| table.indicator(i) != 0) {
        let expected = table.central_signs().map_or(1, |s| s[i]);
        let outcome = if table.indicator(i) == expected {
            Ok(())
        } else {
            Err(Failure {
                rep: format!("X{}", i + 1),
                degree: None,
                lhs: format!("indicator {}", table.indicator(i)),
                rhs: format!("central sign {expected}"),
            })
        };
        report.record(outcome);
    }
    report
}

/// Lowest positive degree of `(1 + g)^n` with `deg g = 1`.
pub fn single_variable_lowest(n: u64) -> Result<Option<u32>, SwcError> {
    let ring = Ring::elementary_abelian(1, SINGLE_VARIABLE_RANGE as u32)?;
    let c = GradedClass::one(&ring).add(&GradedClass::monomial(&ring, Mono::generator(0)))?.pow(n);
    Ok(c.lowest_positive_degree())
}

/// Multiples of the unit representation checked against the closed-form
/// obstruction degree, for odd and even `q` respectively.
pub const UNIT_MULTIPLES: [i64; 2] = [16, 8];

/// Predicted obstruction degree of a representation with exponent `n`:
/// `2^(ord2 n + 2)` for odd `q`, `2^(r - 1 + ord2 n)` for `q = 2^r`.
pub fn predicted_obstruction(q: u32, n: i64) -> u64 {
    let t = n.trailing_zeros();
    if q % 2 == 1 {
        1 << (t + 2)
    } else {
        1 << (q.trailing_zeros() - 1 + t)
    }
}

/// `(1 + g)^n` for `1 <= n <= 1024`, then multiples of a unit representation
/// with the closed-form obstruction degree compared to the expansion.
pub fn obstruction_suite(table: &Arc<CharacterTable>, seed: u64) -> SuiteReport {
    let q = table_q(table);
    let mut report = SuiteReport::new(Suite::Obstruction, q, seed);
    for n in 1..=SINGLE_VARIABLE_RANGE {
        let rep = format!("(1 + g)^{n}");
        let expected = 1u32 << n.trailing_zeros();
        let outcome = match single_variable_lowest(n) {
            Ok(Some(d)) if d == expected => Ok(()),
            Ok(d) => Err(Failure { rep, degree: None, lhs: format!("{d:?}"), rhs: format!("Some({expected})") }),
            Err(e) => Err(failure(&rep, e)),
        };
        report.record(outcome);
    }
    let unit = match unit_rep(table) {
        Ok(Some(u)) => u,
        Ok(None) => {
            report.record(Err(failure("unit", "no representation with exponent 1")));
            return report;
        }
        Err(e) => {
            report.record(Err(failure("unit", e)));
            return report;
        }
    };
    let count = UNIT_MULTIPLES[q.is_multiple_of(2) as usize];
    for n in 1..=count {
        let terms = unit.terms().iter().map(|t| Term { coeff: n * t.coeff, atom: t.atom.clone() }).collect();
        let e = RepExpr::new(terms).unwrap_or_else(|| unit.clone());
        report.record(check_multiple(table, &e, predicted_obstruction(q, n)));
    }
    report
}

fn check_multiple(table: &Arc<CharacterTable>, e: &RepExpr, expected: u64) -> Result<(), Failure> {
    let rep = e.to_string();
    let pi = e.eval(table).map_err(|err| failure(&rep, err))?;
    let total = total_swc(&pi, expected as u32).map_err(|err| failure(&rep, err))?;
    let o = obstruction(&pi, &total).map_err(|err| failure(&rep, err))?;
    if o.degree == Some(expected) && o.checked {
        Ok(())
    } else {
        Err(Failure { rep, degree: None, lhs: format!("{:?}", o.degree), rhs: format!("Some({expected})") })
    }
}

/// Runs one suite, or all of them for [`Suite::All`].
pub fn run(
    table: &Arc<CharacterTable>,
    suite: Suite,
    trials: Option<usize>,
    seed: u64,
) -> (SuiteReport, Vec<SuiteReport>) {
    let q = table_q(table);
    match suite {
        Suite::Theorem => (theorem(table, trials.unwrap_or(DEFAULT_THEOREM_TRIALS), seed), Vec::new()),
        Suite::Wu => (wu(table, trials.unwrap_or(DEFAULT_WU_TRIALS), seed), Vec::new()),
        Suite::Gow => (gow(table, seed), Vec::new()),
        Suite::Obstruction => (obstruction_suite(table, seed), Vec::new()),
        Suite::All => {
            let parts = vec![
                theorem(table, trials.unwrap_or(DEFAULT_THEOREM_TRIALS), seed),
                wu(table, trials.unwrap_or(DEFAULT_WU_TRIALS), seed),
                gow(table, seed),
                obstruction_suite(table, seed),
            ];
            (SuiteReport::combine(q, seed, &parts), parts)
        }
    }
}
