//! Burnside–Dixon: irreducible characters from simultaneous eigenvectors of
//! the class matrices over a prime field, lifted back to `Z[zeta_m]`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CharacterError, CharacterTable, ClassFunction};
use crate::algebra::arith::{is_prime, isqrt, mod_inv, mod_pow, primitive_root};
use crate::algebra::cyclo_make;
use crate::groups::ConjugacyData;

/// Smallest prime `l = 1 (mod e)` with `l > 2 sqrt(n)`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut l = exponent + 1;
    while !(is_prime(l) && l * l > 4 * order) {
        l += exponent;
    }
    l
}

/// `c[r][s][t]`: number of `x` in class `r` with `x^-1 z` in class `s`, for a
/// fixed `z` in class `t`.
fn structure_constants(cd: &ConjugacyData) -> Vec<Vec<Vec<u64>>> {
    let k = cd.num_classes();
    let g = cd.group();
    let mut c = vec![vec![vec![0u64; k]; k]; k];
    for t in 0..k {
        let z = cd.representative(t);
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            c[cd.class_of(x)][cd.class_of(y)][t] += 1;
        }
    }
    c
}

/// Basis of the nullspace of a square matrix over `F_l`.
fn nullspace(mut a: Vec<Vec<u64>>, l: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(row, p);
        let inv = mod_inv(a[row][col], l);
        for x in a[row].iter_mut() {
            *x = *x * inv % l;
        }
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] + l - f * a[row][j] % l) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (l - a[r][f]) % l;
            }
            v
        })
        .collect()
}

/// Reduced row echelon form of a basis (rows); returns the pivot columns.
fn echelon(basis: &mut [Vec<u64>], l: u64) -> Vec<usize> {
    let d = basis.len();
    let k = basis[0].len();
    let mut pivots = Vec::with_capacity(d);
    let mut row = 0;
    for col in 0..k {
        if row == d {
            break;
        }
        let Some(p) = (row..d).find(|&i| basis[i][col] != 0) else { continue };
        basis.swap(row, p);
        let inv = mod_inv(basis[row][col], l);
        for x in basis[row].iter_mut() {
            *x = *x * inv % l;
        }
        for i in 0..d {
            if i != row && basis[i][col] != 0 {
                let f = basis[i][col];
                for j in 0..k {
                    basis[i][j] = (basis[i][j] + l - f * basis[row][j] % l) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn split_space(mut basis: Vec<Vec<u64>>, c_r: &[Vec<u64>], l: u64) -> Result<Vec<Vec<Vec<u64>>>, CharacterError> {
    let d = basis.len();
    let k = basis[0].len();
    let pivots = echelon(&mut basis, l);
    // A[i][j] = coordinate i of M_r b_j, read off at the pivot columns
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..k).map(|s| (0..k).fold(0u64, |acc, t| (acc + c_r[s][t] % l * b[t]) % l)).collect())
        .collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..l {
        let a: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let x = images[j][pivots[i]];
                        if i == j {
                            (x + l - lambda) % l
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let null = nullspace(a, l);
        if null.is_empty() {
            continue;
        }
        found += null.len();
        let part: Vec<Vec<u64>> = null
            .iter()
            .map(|u| (0..k).map(|t| (0..d).fold(0u64, |acc, j| (acc + u[j] * basis[j][t]) % l)).collect())
            .collect();
        parts.push(part);
        if found == d {
            return Ok(parts);
        }
    }
    Err(CharacterError::LiftFailure("class matrix is not diagonalizable mod l"))
}

/// Exact character table of the group behind `cd`.
pub fn char_table(cd: &Arc<ConjugacyData>) -> Result<CharacterTable, CharacterError> {
    let k = cd.num_classes();
    let n = cd.group().order() as u64;
    let e = cd.exponent() as u64;
    let l = dixon_prime(e, n);
    let consts = structure_constants(cd);

    // (M_r)_{s,t} = c[r][s][t]; common right eigenvectors give central characters
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for r in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let c_r: Vec<Vec<u64>> = (0..k).map(|s| (0..k).map(|t| consts[r][s][t]).collect()).collect();
        let mut next = Vec::with_capacity(k);
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split_space(s, &c_r, l)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(CharacterError::LiftFailure("class matrices do not separate the characters"));
    }

    let omega_e = mod_pow(primitive_root(l), (l - 1) / e, l);
    let ring = cd.ring();
    let m = ring.m() as u64;
    let root = isqrt(n);
    let mut chars = Vec::with_capacity(k);
    for space in spaces {
        let mut v = space.into_iter().next().expect("one-dimensional space");
        if v[0] == 0 {
            return Err(CharacterError::LiftFailure("eigenvector vanishes at the identity"));
        }
        let inv0 = mod_inv(v[0], l);
        for x in v.iter_mut() {
            *x = *x * inv0 % l;
        }
        // n / d^2 = sum_t w_t w_{t*} / h_t
        let s = (0..k).fold(0u64, |acc, t| {
            let h_inv = mod_inv(cd.size(t) as u64 % l, l);
            (acc + v[t] * v[cd.inverse_class(t)] % l * h_inv) % l
        });
        if s == 0 {
            return Err(CharacterError::LiftFailure("degree sum vanishes mod l"));
        }
        let d2 = n % l * mod_inv(s, l) % l;
        let d = (1..=root).find(|&d| d * d % l == d2).ok_or(CharacterError::LiftFailure("no degree matches mod l"))?;
        let values_mod: Vec<u64> = (0..k).map(|t| d * v[t] % l * mod_inv(cd.size(t) as u64 % l, l) % l).collect();

        let mut values = Vec::with_capacity(k);
        for t in 0..k {
            let o = cd.element_order(t) as u64;
            let omega_o = mod_pow(omega_e, e / o, l);
            let o_inv = mod_inv(o % l, l);
            let mut power_coeffs = vec![0i64; m as usize];
            for kk in 0..o {
                let mut mu = 0u64;
                for j in 0..o {
                    let chi_j = values_mod[cd.power_class(t, j as i64)];
                    let w = mod_pow(omega_o, (l - 1 - (j * kk) % (l - 1)) % (l - 1), l);
                    mu = (mu + chi_j * w) % l;
                }
                mu = mu * o_inv % l;
                if mu > d {
                    return Err(CharacterError::LiftFailure("eigenvalue multiplicity out of range"));
                }
                power_coeffs[(kk * (m / o)) as usize] += mu as i64;
            }
            values.push(cyclo_make(ring, &power_coeffs));
        }
        chars.push(ClassFunction::new(cd, values));
    }
    let mut table = CharacterTable::from_characters(cd, chars)?;
    table.set_prime(l);
    Ok(table)
}
