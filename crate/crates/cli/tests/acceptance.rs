//! Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl2swc::cache::{GroupChoice, TableCache};
use sl2swc::suites::{self, random_orthogonal, DEFAULT_SEED, MAX_RANDOM_DEGREE};
use sl2swc_core::algebra::arith::ext_gcd;
use sl2swc_core::algebra::Cyclo;
use sl2swc_core::characters::{
    char_table, cuspidal, cuspidal_exponents, fs_indicator, oir_basis, principal_series, principal_series_exponents,
    symmetrize, CharacterTable, Oir, VirtualRep,
};
use sl2swc_core::cohomology::{dickson, steenrod_sq, GradedClass, Mono, Ring, RingHom};
use sl2swc_core::groups::{conjugacy, find_quaternions, gen_quaternion};
use sl2swc_core::oracle::{
    center_profile, gen_quaternion_coherence, n_profile, oracle_swc_n, oracle_swc_q, oracle_swc_z, quaternion_profile,
    swc_from_sign_count,
};
use sl2swc_core::swc::{expanded_swc, m_pi, obstruction, r_pi, top_swc_nonzero, total_swc, SwcReport};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sl2(q: u64) -> Arc<CharacterTable> {
    TableCache::disabled().table(GroupChoice::Sl2, q).unwrap().0
}

fn gl2(q: u64) -> Arc<CharacterTable> {
    TableCache::disabled().table(GroupChoice::Gl2, q).unwrap().0
}

fn oir_rep(t: &Arc<CharacterTable>, b: Oir, k: i64) -> Result<VirtualRep, String> {
    VirtualRep::from_oirs(t, &[(b, k)]).map_err(err)
}

fn value_at(pi: &VirtualRep, class: Option<usize>) -> Result<i64, String> {
    pi.integer_value(class.ok_or("missing class")?).map_err(err)
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

/// Every real-valued irreducible of SL(2,q), q odd, has Frobenius-Schur
/// indicator chi(-1)/chi(1).
fn gow_indicators() -> Check {
    for q in [3u64, 5, 7, 9] {
        let t = sl2(q);
        let minus = t.classes().minus_one_class();
        for i in 0..t.len() {
            let chi = t.character(i);
            let ind = fs_indicator(chi).map_err(err)?;
            ensure!(ind == t.indicator(i), "q = {q}, X{}: stored indicator differs", i + 1);
            if ind == 0 {
                continue;
            }
            let sign = chi.value(minus.ok_or("no -1")?).to_integer().map_err(err)? / chi.degree();
            ensure!(ind as i64 == sign, "q = {q}, X{}: indicator {ind}, central sign {sign}", i + 1);
        }
    }
    Ok(())
}

/// q odd: closed form, Z oracle and Q8 oracle agree on every orthogonally
/// irreducible representation and on 200 random genuine orthogonal ones.
fn odd_theorem() -> Check {
    for q in [3u64, 5, 7] {
        let t = sl2(q);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for _ in 0..200 {
            let pi = random_orthogonal(&t, &mut rng, MAX_RANDOM_DEGREE).eval(&t).map_err(err)?;
            ensure!(pi.is_genuine() && pi.is_orthogonal(), "q = {q}: random representation not genuine orthogonal");
            ensure!(pi.degree() <= MAX_RANDOM_DEGREE, "q = {q}: degree {} too large", pi.degree());
        }
        let report = suites::theorem(&t, 200, DEFAULT_SEED);
        ensure!(report.cases == oir_basis(&t).len() + 200, "q = {q}: {} cases", report.cases);
        ensure!(report.passed(), "q = {q}: {:?}", report.failures.first());
    }
    Ok(())
}

/// Irreducible orthogonal representations have total class 1, and so do
/// their restrictions to Z and Q8.
fn irreducible_orthogonal_trivial() -> Check {
    for q in [3u64, 5, 7, 9] {
        let t = sl2(q);
        let emb = &find_quaternions(t.classes().group(), 1).map_err(err)?[0];
        for i in (0..t.len()).filter(|&i| t.indicator(i) == 1) {
            let pi = VirtualRep::irreducible(&t, i).map_err(err)?;
            let d = pi.degree().min(64) as u32;
            ensure!(r_pi(&pi).map_err(err)? == 0, "q = {q}, X{}: r != 0", i + 1);
            ensure!(total_swc(&pi, d).map_err(err)?.is_one(), "q = {q}, X{}: closed form", i + 1);
            ensure!(oracle_swc_z(&pi, d).map_err(err)?.is_one(), "q = {q}, X{}: Z oracle", i + 1);
            ensure!(oracle_swc_q(&pi, emb, d).map_err(err)?.is_one(), "q = {q}, X{}: Q8 oracle", i + 1);
        }
    }
    Ok(())
}

/// q even: m = 1 on nontrivial irreducibles, uniform restriction to N, and
/// the expanded closed form equals the N oracle on all irreducibles and 200
/// random representations.
fn even_theorem() -> Check {
    for q in [2u64, 4, 8] {
        let t = sl2(q);
        let n0 = t.classes().n0_class();
        for i in 0..t.len() {
            let pi = VirtualRep::irreducible(&t, i).map_err(err)?;
            let m = (pi.degree() - value_at(&pi, n0)?) / q as i64;
            ensure!(m == (i > 0) as i64, "q = {q}, X{}: m = {m}", i + 1);
            ensure!(m_pi(&pi).map_err(err)?.1 == m, "q = {q}, X{}: m_pi", i + 1);
            ensure!(n_profile(&pi).map_err(err)?.is_uniform(), "q = {q}, X{}: N profile", i + 1);
        }
        let report = suites::theorem(&t, 200, DEFAULT_SEED);
        ensure!(report.cases == 2 * t.len() - 1 + 200, "q = {q}: {} cases", report.cases);
        ensure!(report.passed(), "q = {q}: {:?}", report.failures.first());
    }
    Ok(())
}

/// Dickson invariants: degrees 2^r - 2^(r-i), the coefficients of
/// prod_{v in V} (X + v), and the rank-2 expansions.
fn dickson_invariants() -> Check {
    for r in 1..=4usize {
        let top = 1u32 << r;
        let ds = dickson(r, top - 1).map_err(err)?;
        ensure!(ds.len() == r, "r = {r}: {} invariants", ds.len());
        // X is the last generator
        let big = Ring::elementary_abelian(r + 1, top).map_err(err)?;
        let x = GradedClass::monomial(&big, Mono::generator(r));
        let mut prod = GradedClass::one(&big);
        for v in 0..(1u32 << r) {
            let mut f = x.clone();
            for j in (0..r).filter(|j| v >> j & 1 == 1) {
                f = f.add(&GradedClass::monomial(&big, Mono::generator(j))).map_err(err)?;
            }
            prod = prod.mul(&f).map_err(err)?;
        }
        for (i, d) in ds.iter().enumerate() {
            let deg = top - (1 << (r - i - 1));
            ensure!(d.homogeneous_degree() == Some(deg), "r = {r}: d{} degree", i + 1);
            let x_power = 1u16 << (r - i - 1);
            let coeff: BTreeSet<Vec<u16>> = prod
                .terms()
                .filter(|(_, m)| m.exponents()[r] == x_power)
                .map(|(_, m)| m.exponents()[..r].to_vec())
                .collect();
            let ours: BTreeSet<Vec<u16>> = d.terms().map(|(_, m)| m.exponents()[..r].to_vec()).collect();
            ensure!(coeff == ours, "r = {r}: d{} differs from the product coefficient", i + 1);
        }
    }
    let ds = dickson(2, 3).map_err(err)?;
    ensure!(ds[0].to_string() == "v1^2 + v1*v2 + v2^2", "d1 = {}", ds[0]);
    ensure!(ds[1].to_string() == "v1^2*v2 + v1*v2^2", "d2 = {}", ds[1]);
    Ok(())
}

/// First nonzero coefficient of (1 + g)^n sits at 2^ord2(n); obstruction
/// degrees 2^(t+2) (q odd) and 2^(r-1+s) (q even) agree with the oracles.
fn obstruction_degrees() -> Check {
    let ring = Ring::elementary_abelian(1, 1024).map_err(err)?;
    let u = GradedClass::one(&ring).add(&GradedClass::monomial(&ring, Mono::generator(0))).map_err(err)?;
    for n in 1..=1024u64 {
        // Lucas: C(n, k) is odd iff k & n == k
        let lucas = (1..=n).find(|&k| k & n == k).unwrap();
        let lowest = u.pow(n).lowest_positive_degree().map(u64::from);
        ensure!(lowest == Some(lucas), "n = {n}: {lowest:?} vs {lucas}");
        ensure!(lucas == 1 << n.trailing_zeros(), "n = {n}");
    }
    for q in [3u64, 5, 7] {
        let t = sl2(q);
        let unit = suites::unit_rep(&t).map_err(err)?.ok_or("no unit")?;
        let pi1 = unit.eval(&t).map_err(err)?;
        ensure!(r_pi(&pi1).map_err(err)? == 1, "q = {q}: unit has r != 1");
        for n in 1..=16i64 {
            let pi = pi1.scale(n);
            let expected = 1u64 << (n.trailing_zeros() + 2);
            let total = total_swc(&pi, 64).map_err(err)?;
            let o = obstruction(&pi, &total).map_err(err)?;
            ensure!(o.degree == Some(expected), "q = {q}, n = {n}: {:?}", o.degree);
            let e_power = format!("e^{}", 1u64 << n.trailing_zeros());
            let class = o.class.map(|c| c.to_string()).unwrap_or_default();
            ensure!(class == e_power || (class == "e" && expected == 4), "q = {q}, n = {n}: class {class}");
            let z = oracle_swc_z(&pi, 64).map_err(err)?;
            ensure!(z.class().lowest_positive_degree().map(u64::from) == Some(expected), "q = {q}, n = {n}: Z oracle");
        }
    }
    for q in [2u64, 4, 8] {
        let t = sl2(q);
        let r = q.trailing_zeros();
        let x2 = VirtualRep::irreducible(&t, 1).map_err(err)?;
        for n in 1..=8i64 {
            let pi = x2.scale(n);
            let expected = 1u64 << (r - 1 + n.trailing_zeros());
            let total = total_swc(&pi, expected as u32).map_err(err)?;
            let o = obstruction(&pi, &total).map_err(err)?;
            ensure!(o.degree == Some(expected) && o.checked, "q = {q}, n = {n}: {:?}", o.degree);
            let w = oracle_swc_n(&pi, expected as u32).map_err(err)?;
            ensure!(w.class().lowest_positive_degree().map(u64::from) == Some(expected), "q = {q}, n = {n}: N oracle");
        }
    }
    Ok(())
}

/// Multisets of size 1 to k from 0..n.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Top class w_{deg pi}: nonzero iff chi(-1) = -chi(1) (q odd) or ell = 0
/// (q even), compared with the oracle's top coefficient.
fn top_class() -> Check {
    for q in [3u64, 5, 2, 4] {
        let t = sl2(q);
        let odd = q % 2 == 1;
        let blocks: Vec<Oir> = if odd { oir_basis(&t) } else { (0..t.len()).map(Oir::Irreducible).collect() };
        for set in multisets(blocks.len(), 4) {
            let mut pi = VirtualRep::zero(&t);
            for &i in &set {
                pi = pi.add(&oir_rep(&t, blocks[i], 1)?);
            }
            let deg = pi.degree() as u32;
            let top = top_swc_nonzero(&pi, &total_swc(&pi, deg).map_err(err)?).map_err(err)?;
            ensure!(top.checked, "q = {q}, {set:?}: unchecked");
            let oracle = if odd { oracle_swc_z(&pi, deg) } else { oracle_swc_n(&pi, deg) }.map_err(err)?;
            let nonzero = !oracle.w(deg).is_zero();
            ensure!(top.nonzero == nonzero, "q = {q}, {set:?}: closed form {} vs oracle {nonzero}", top.nonzero);
        }
    }
    Ok(())
}

/// Rank over F2 of a list of classes.
fn rank(classes: &[GradedClass]) -> usize {
    let mut rows: Vec<BTreeSet<(u32, Mono)>> = classes.iter().map(|c| c.terms().copied().collect()).collect();
    let mut r = 0;
    while let Some(pos) = rows.iter().position(|row| !row.is_empty()) {
        let row = rows.swap_remove(pos);
        let pivot = *row.iter().next().unwrap();
        for other in rows.iter_mut().filter(|o| o.contains(&pivot)) {
            *other = other.symmetric_difference(&row).copied().collect();
        }
        r += 1;
    }
    r
}

/// H*(Q8): dimensions, x^3 = 0, multiplication by e is bijective, and
/// w(S(rho)) = 1 + e, seen through the center.
fn quaternion_cohomology() -> Check {
    let ring = Ring::quaternion8(20).map_err(err)?;
    let dims = ring.graded_dims();
    for (d, &n) in dims.iter().enumerate() {
        ensure!(n == [1, 2, 2, 1][d % 4], "dimension {n} in degree {d}");
    }
    let x = GradedClass::generator(&ring, "x").map_err(err)?;
    let y = GradedClass::generator(&ring, "y").map_err(err)?;
    let e = GradedClass::generator(&ring, "e").map_err(err)?;
    ensure!(x.pow(3).is_zero() && y.pow(3).is_zero(), "x^3 or y^3 nonzero");
    for d in 0..=16 {
        let images = ring
            .basis(d)
            .into_iter()
            .map(|m| GradedClass::monomial(&ring, m).mul(&e))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let n = ring.basis(d + 4).len();
        ensure!(images.len() == n && rank(&images) == n, "degree {d}: multiplication by e is not bijective");
    }
    let g = gen_quaternion(3).map_err(err)?;
    let t = Arc::new(char_table(&conjugacy(&g).map_err(err)?).map_err(err)?);
    let rho = (0..t.len()).find(|&i| t.degrees()[i] == 2).ok_or("no rho")?;
    let s = symmetrize(&VirtualRep::irreducible(&t, rho).map_err(err)?);
    let z = swc_from_sign_count(center_profile(&s).map_err(err)?.multiplicities[1], 16).map_err(err)?;
    let one_plus_e = GradedClass::one(&ring).add(&e).map_err(err)?;
    let image = RingHom::quaternion_to_center(20).map_err(err)?.apply(&one_plus_e).map_err(err)?;
    ensure!(image.to_string() == "1 + v^4", "1 + e maps to {image}");
    ensure!(z.to_string() == "1 + v^4", "Z oracle of S(rho) is {z}");
    for n in 3..=6 {
        gen_quaternion_coherence(n, 16).map_err(err)?;
    }
    Ok(())
}

/// Wu formula on the oracle classes of 100 random representations, on Z
/// (q = 3, 5) and N (q = 2, 4), including w3 = w1 w2 + Sq^1 w2.
fn wu_formula() -> Check {
    for q in [3u64, 5, 2, 4] {
        let t = sl2(q);
        let report = suites::wu(&t, 100, DEFAULT_SEED);
        ensure!(report.cases == 100 * suites::wu_pairs().len(), "q = {q}: {} cases", report.cases);
        ensure!(report.passed(), "q = {q}: {:?}", report.failures.first());
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for _ in 0..100 {
            let pi = random_orthogonal(&t, &mut rng, MAX_RANDOM_DEGREE).eval(&t).map_err(err)?;
            let w = if q % 2 == 1 { oracle_swc_z(&pi, 8) } else { oracle_swc_n(&pi, 8) }.map_err(err)?;
            let rhs = w.w(1).mul(&w.w(2)).map_err(err)?.add(&steenrod_sq(1, &w.w(2)).map_err(err)?).map_err(err)?;
            ensure!(w.w(3) == rhs, "q = {q}: w3 = {} but w1 w2 + Sq1 w2 = {rhs}", w.w(3));
        }
    }
    Ok(())
}

/// Bezout combinations with r = 1 give 1 + e; the regular representations of
/// SL(2,3) and SL(2,4).
fn image_exponents() -> Check {
    for q in [5u32, 7] {
        let t = sl2(q as u64);
        let p1 = principal_series(&t, principal_series_exponents(q)[0]).map_err(err)?;
        let p2 = cuspidal(&t, cuspidal_exponents(q)[0], 1).map_err(err)?;
        let (s1, s2) = (symmetrize(&p1), symmetrize(&p2));
        let (a1, a2) = (r_pi(&s1).map_err(err)?, r_pi(&s2).map_err(err)?);
        ensure!(a1 == (q as i64 + 1) / 2 && a2 == (q as i64 - 1) / 2, "q = {q}: r values {a1}, {a2}");
        let (g, x, y) = ext_gcd(a1, a2);
        ensure!(g == 1, "q = {q}: gcd {g}");
        let v = s1.scale(x).add(&s2.scale(y));
        let w = total_swc(&v, 64).map_err(err)?;
        ensure!(w.to_string() == "1 + e", "q = {q}: {w}");
        ensure!(w.image_exponent().is_some_and(|n| n.is_congruent(1)), "q = {q}: image exponent");
        ensure!(oracle_swc_z(&v, 64).map_err(err)?.to_string() == "1 + v^4", "q = {q}: Z oracle");
    }
    let t = sl2(3);
    let reg = VirtualRep::regular(&t);
    let report = SwcReport::compute(&reg, None).map_err(err)?;
    ensure!(report.r_or_m == 3, "reg(SL(2,3)): r = {}", report.r_or_m);
    ensure!(report.total.to_string() == "1 + e + e^2 + e^3", "reg(SL(2,3)): {}", report.total);
    ensure!(report.total.image_exponent().is_some_and(|n| n.is_congruent(3)), "reg(SL(2,3)): image exponent");
    let t = sl2(4);
    let reg = VirtualRep::regular(&t);
    ensure!(m_pi(&reg).map_err(err)? == (15, 15), "reg(SL(2,4)): (ell, m) = {:?}", m_pi(&reg));
    let expanded = expanded_swc(&reg, 24).map_err(err)?;
    ensure!(expanded.class() == oracle_swc_n(&reg, 24).map_err(err)?.class(), "reg(SL(2,4)): expansion vs N oracle");
    let report = SwcReport::compute(&reg, Some(24)).map_err(err)?;
    ensure!(report.total.image_exponent().is_some_and(|n| n.is_congruent(15)), "reg(SL(2,4)): image exponent");
    Ok(())
}

fn check_table(t: &CharacterTable, name: &str) -> Check {
    let cd = t.classes();
    let order = cd.group().order() as i64;
    ensure!(t.len() == cd.num_classes(), "{name}: {} characters, {} classes", t.len(), cd.num_classes());
    ensure!(t.degrees().iter().map(|d| d * d).sum::<i64>() == order, "{name}: sum of squared degrees");
    for i in 0..t.len() {
        for j in 0..t.len() {
            let ip = t.character(i).inner(t.character(j)).map_err(err)?;
            ensure!(ip == (i == j) as i64, "{name}: <X{}, X{}> = {ip}", i + 1, j + 1);
        }
        ensure!(fs_indicator(t.character(i)).map_err(err)? == t.indicator(i), "{name}: X{} indicator", i + 1);
    }
    let ring = cd.ring();
    for a in 0..t.len() {
        for b in 0..t.len() {
            let mut sum = Cyclo::zero(ring);
            for chi in t.characters() {
                sum = &sum + &(chi.value(a) * &chi.value(b).conj());
            }
            let expected = if a == b { order / cd.size(a) as i64 } else { 0 };
            ensure!(sum.to_integer() == Ok(expected), "{name}: column orthogonality at ({a}, {b})");
        }
    }
    Ok(())
}

/// Degree, genuineness, norm (1, or 2 when the restriction splits) and, for
/// odd q, indicator -1 on every constituent.
fn check_construction(t: &CharacterTable, pi: &VirtualRep, degree: i64, split: bool) -> Check {
    ensure!(pi.degree() == degree, "degree {}", pi.degree());
    ensure!(pi.is_genuine(), "not genuine");
    let chi = pi.character();
    let norm = chi.inner(&chi).map_err(err)?;
    ensure!(norm == 1 + split as i64, "norm {norm}");
    if t.classes().group().q().is_some_and(|q| q % 2 == 1) {
        for i in (0..t.len()).filter(|&i| pi.multiplicity(i) != 0) {
            ensure!(t.indicator(i) == -1, "constituent X{} has indicator {}", i + 1, t.indicator(i));
        }
    }
    Ok(())
}

/// Character tables: orthogonality and degrees for SL(2,q), q <= 9, and
/// GL(2,3), GL(2,5); principal series of degree q + 1 and cuspidal of degree
/// q - 1, symplectic for odd q.
fn character_tables() -> Check {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let t = sl2(q);
        check_table(&t, &format!("SL(2,{q})"))?;
        for k in principal_series_exponents(q as u32) {
            let pi = principal_series(&t, k).map_err(err)?;
            check_construction(&t, &pi, q as i64 + 1, false).map_err(|e| format!("q = {q}, ps({k}): {e}"))?;
        }
        let q2m1 = (q * q - 1) as i64;
        for k in cuspidal_exponents(q as u32) {
            let pi = cuspidal(&t, k, 1).map_err(err)?;
            // chi^(q-1) of order 2: the restriction from GL(2,q) splits in two
            let split = q % 2 == 1 && (k * (q as i64 - 1)).rem_euclid(q2m1) == q2m1 / 2;
            check_construction(&t, &pi, q as i64 - 1, split).map_err(|e| format!("q = {q}, cusp({k}): {e}"))?;
        }
        if q % 2 == 1 {
            ensure!(t.indicators().contains(&-1), "q = {q}: no symplectic character");
        }
    }
    for q in [3u64, 5] {
        check_table(&gl2(q), &format!("GL(2,{q})"))?;
    }
    Ok(())
}

/// Three quaternion subgroups give the same restrictions and the same Q8
/// oracle classes.
fn embedding_independence() -> Check {
    for q in [3u64, 5, 7] {
        let t = sl2(q);
        let embs = find_quaternions(t.classes().group(), 3).map_err(err)?;
        ensure!(embs.len() >= 3, "q = {q}: {} embeddings", embs.len());
        let pairs: BTreeSet<(usize, usize)> = embs.iter().map(|e| (e.x(), e.y())).collect();
        ensure!(pairs.len() == embs.len(), "q = {q}: repeated embedding");
        for i in 0..t.len() {
            let pi = VirtualRep::irreducible(&t, i).map_err(err)?;
            let profiles =
                embs.iter().map(|e| quaternion_profile(&pi, e)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            ensure!(profiles.windows(2).all(|w| w[0] == w[1]), "q = {q}, X{}: profiles differ", i + 1);
            let o = if t.indicator(i) == 1 { pi } else { symmetrize(&pi) };
            let classes = embs.iter().map(|e| oracle_swc_q(&o, e, 16)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            ensure!(classes.windows(2).all(|w| w[0] == w[1]), "q = {q}, X{}: classes differ", i + 1);
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 12] = [
        ("indicator equals central sign, SL(2,q), q = 3, 5, 7, 9", gow_indicators),
        ("odd q closed form vs Z and Q8 oracles, q = 3, 5, 7", odd_theorem),
        ("irreducible orthogonal representations have class 1", irreducible_orthogonal_trivial),
        ("even q closed form vs N oracle, q = 2, 4, 8", even_theorem),
        ("Dickson invariants, rank 1 to 4", dickson_invariants),
        ("obstruction degrees", obstruction_degrees),
        ("top class criterion", top_class),
        ("cohomology of Q8 and w(S(rho)) = 1 + e", quaternion_cohomology),
        ("Wu formula on oracle classes", wu_formula),
        ("image exponents and regular representations", image_exponents),
        ("character table validity", character_tables),
        ("quaternion embedding independence", embedding_independence),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS  criterion {:2}: {name}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:2}: {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
