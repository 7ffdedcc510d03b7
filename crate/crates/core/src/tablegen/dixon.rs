//! Dixon–Schneider over a prime field.
//!
//! For class sums `C_j C_k = Σ_l a_{jkl} C_l`, the vector of central
//! character values `(ω_χ(C_l))_l` of every irreducible `χ` is a common right
//! eigenvector of the matrices `A_j = (a_{jkl})_{k,l}`. Splitting `F_ρ^r`
//! into common eigenspaces, one class matrix at a time, leaves one line per
//! character. With `ρ ≡ 1 (mod exponent)` every eigenvalue lies in `F_ρ`, and
//! with `ρ > 2√|G|` both the degrees and the eigenvalue multiplicities of
//! `ρ(g)` are recovered uniquely from their residues.

use rayon::prelude::*;

use super::{conjugacy_classes, Classes, Group, GroupElement, TablegenError};
use crate::arith;
use crate::chartab::{CharacterTable, ConjClass};
use crate::cyclotomic::Cyclotomic;

#[derive(Clone, Copy)]
struct Fp(u64);

impl Fp {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        arith::mul_mod(a, b, self.0)
    }
    fn inv(self, a: u64) -> u64 {
        arith::inv_mod(a, self.0).expect("nonzero element of a prime field")
    }
    fn pow(self, a: u64, e: u64) -> u64 {
        arith::pow_mod(a, e, self.0)
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivots.
fn rref(f: Fp, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn determinant(f: Fp, mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1;
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| m[i][col] != 0) else {
            return 0;
        };
        if p != col {
            m.swap(p, col);
            det = f.sub(0, det);
        }
        det = f.mul(det, m[col][col]);
        let inv = f.inv(m[col][col]);
        for i in col + 1..n {
            let c = f.mul(m[i][col], inv);
            if c == 0 {
                continue;
            }
            for j in col..n {
                let v = f.mul(c, m[col][j]);
                m[i][j] = f.sub(m[i][j], v);
            }
        }
    }
    det
}

/// Basis of the null space of a square matrix.
fn null_space(f: Fp, m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let n = m.len();
    let (rows, pivots) = rref(f, m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; n];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.sub(0, row[fc]);
            }
            v
        })
        .collect()
}

/// Coefficients (lowest first) of `det(B − xI)`, by interpolation at
/// `x = 0, …, d`.
fn characteristic_polynomial(f: Fp, b: &[Vec<u64>]) -> Vec<u64> {
    let d = b.len();
    let xs: Vec<u64> = (0..=d as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut m = b.to_vec();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = f.sub(row[i], x);
            }
            determinant(f, m)
        })
        .collect();
    let mut poly = vec![0u64; d + 1];
    for (i, &xi) in xs.iter().enumerate() {
        // Lagrange basis polynomial for node i.
        let mut basis = vec![1u64];
        let mut denom = 1;
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (k, &c) in basis.iter().enumerate() {
                next[k + 1] = f.add(next[k + 1], c);
                next[k] = f.sub(next[k], f.mul(c, xj));
            }
            basis = next;
            denom = f.mul(denom, f.sub(xi, xj));
        }
        let scale = f.mul(ys[i], f.inv(denom));
        for (k, &c) in basis.iter().enumerate() {
            poly[k] = f.add(poly[k], f.mul(c, scale));
        }
    }
    poly
}

fn roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.0)
        .into_par_iter()
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0)
        .collect()
}

/// `A_j[k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}` mod ρ.
fn class_matrix<E: GroupElement>(f: Fp, g: &Group<E>, cls: &Classes, j: usize) -> Vec<Vec<u64>> {
    let r = cls.len();
    let reps: Vec<&E> = cls
        .representatives
        .iter()
        .map(|&i| &g.elements()[i])
        .collect();
    let counts = (0..g.order())
        .into_par_iter()
        .filter(|&i| cls.class_of[i] as usize == j)
        .fold(
            || vec![0u64; r * r],
            |mut acc, i| {
                let inv = g.elements()[i].inverse();
                for (l, z) in reps.iter().enumerate() {
                    let k = cls.class_of[g.pos(&inv.mul(z))] as usize;
                    acc[k * r + l] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; r * r],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    counts
        .chunks(r)
        .map(|row| row.iter().map(|&c| c % f.0).collect())
        .collect()
}

/// Splits each subspace of dimension > 1 into eigenspaces of `a`.
fn split(
    f: Fp,
    a: &[Vec<u64>],
    spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)>,
) -> Result<Vec<(Vec<Vec<u64>>, Vec<usize>)>, TablegenError> {
    let mut out = Vec::new();
    for (basis, pivots) in spaces {
        let d = basis.len();
        if d == 1 {
            out.push((basis, pivots));
            continue;
        }
        let images: Vec<Vec<u64>> = basis
            .iter()
            .map(|v| {
                a.iter()
                    .map(|row| {
                        row.iter()
                            .zip(v)
                            .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                    })
                    .collect()
            })
            .collect();
        // Column i of the restriction holds the coordinates of A v_i.
        let b: Vec<Vec<u64>> = (0..d)
            .map(|k| (0..d).map(|i| images[i][pivots[k]]).collect())
            .collect();
        let mut found = 0;
        for lambda in roots(f, &characteristic_polynomial(f, &b)) {
            let mut shifted = b.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = f.sub(row[i], lambda);
            }
            let coords = null_space(f, shifted);
            found += coords.len();
            let vectors: Vec<Vec<u64>> = coords
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; a.len()];
                    for (ci, bi) in c.iter().zip(&basis) {
                        for (x, &y) in v.iter_mut().zip(bi) {
                            *x = f.add(*x, f.mul(*ci, y));
                        }
                    }
                    v
                })
                .collect();
            out.push(rref(f, vectors));
        }
        if found != d {
            return Err(TablegenError::NotSplit);
        }
    }
    Ok(out)
}

/// Computes the character table of an enumerated group.
pub fn dixon_table<E: GroupElement>(
    name: &str,
    g: &Group<E>,
) -> Result<CharacterTable, TablegenError> {
    let classes = conjugacy_classes(g);
    dixon_table_with(name, g, &classes)
}

/// As [`dixon_table`], with precomputed classes.
pub fn dixon_table_with<E: GroupElement>(
    name: &str,
    g: &Group<E>,
    cls: &Classes,
) -> Result<CharacterTable, TablegenError> {
    let order = g.order() as u64;
    let r = cls.len();
    let exponent = cls.orders.iter().copied().fold(1, arith::lcm);
    let floor = (2 * arith::isqrt(order) + 2).max(r as u64 + 1);
    let f = Fp(arith::prime_one_mod(exponent, floor));

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![rref(f, identity)];
    let mut by_size: Vec<usize> = (1..r).collect();
    by_size.sort_by_key(|&j| (cls.sizes[j], j));
    for j in by_size {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let a = class_matrix(f, g, cls, j);
        spaces = split(f, &a, spaces)?;
    }
    if spaces.len() != r {
        return Err(TablegenError::NotSplit);
    }

    let z = f.pow(arith::primitive_root(f.0), (f.0 - 1) / exponent);
    let sizes_mod: Vec<u64> = cls.sizes.iter().map(|&s| s % f.0).collect();
    let mut irr = Vec::with_capacity(r);
    for (basis, _) in spaces {
        let v = &basis[0];
        let norm = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, norm)).collect();
        // Σ_l ω_l ω_{l*} / |C_l| = |G| / χ(1)²
        let s = (0..r).fold(0, |acc, l| {
            let t = f.mul(
                f.mul(omega[l], omega[cls.inverse_class(l)]),
                f.inv(sizes_mod[l]),
            );
            f.add(acc, t)
        });
        let target = f.mul(order % f.0, f.inv(s));
        let degree = (1..=arith::isqrt(order))
            .find(|&d| order % d == 0 && f.mul(d, d) == target)
            .ok_or(TablegenError::NotSplit)?;
        let modular: Vec<u64> = (0..r)
            .map(|l| f.mul(f.mul(omega[l], degree), f.inv(sizes_mod[l])))
            .collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = cls.orders[k];
            let zo = f.pow(z, exponent / o);
            let zo_inv = f.inv(zo);
            let o_inv = f.inv(o % f.0);
            let mut terms = Vec::new();
            for t in 0..o {
                let step = f.pow(zo_inv, t);
                let mut acc = 0;
                let mut w = 1;
                for j in 0..o as usize {
                    acc = f.add(acc, f.mul(modular[cls.power_maps[k][j]], w));
                    w = f.mul(w, step);
                }
                let mult = f.mul(acc, o_inv);
                if mult > degree {
                    return Err(TablegenError::Invalid(format!(
                        "multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                if mult != 0 {
                    terms.push((t as i64, mult.into()));
                }
            }
            row.push(Cyclotomic::make(o, &terms).expect("positive order"));
        }
        irr.push(row);
    }
    let classes = (0..r)
        .map(|k| ConjClass::new(cls.sizes[k], cls.orders[k]))
        .collect();
    let mut t = CharacterTable::new(name, order, classes, irr)
        .map_err(|e| TablegenError::Invalid(e.to_string()))?;
    t.assign_default_labels();
    Ok(t)
}
