//! Row selection modulo a prime for rational matrices.
//!
//! Rows independent modulo `p` are independent over `Q`, so eliminating
//! only those rows is exact once every remaining row is shown to lie in
//! their span. That check is a batch of integer dot products against a
//! kernel basis, far cheaper than rational elimination of the full matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{kernel_from_rref, rref_in_place, Matrix, Rref};
use crate::field::Field;

/// `2^61 - 1`
const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(n: &BigInt) -> u64 {
    let r = n.mod_floor(&BigInt::from(P));
    r.to_u64().expect("residue fits")
}

/// Integer rows with each row's denominators cleared.
fn integer_rows(f: &Field, a: &Matrix) -> Option<Vec<Vec<BigInt>>> {
    (0..a.rows)
        .map(|i| {
            let row = a.row(i);
            let mut d = BigInt::one();
            for c in row {
                d = d.lcm(f.as_rational(c)?.denom());
            }
            row.iter()
                .map(|c| {
                    let q = f.as_rational(c)?;
                    Some(q.numer() * (&d / q.denom()))
                })
                .collect()
        })
        .collect()
}

/// Indices of a maximal set of rows independent modulo `P`.
fn independent_rows(rows: &[Vec<BigInt>], cols: usize) -> Vec<usize> {
    // echelon rows modulo P, each normalized to a leading 1 at `lead`
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        if echelon.len() == cols {
            break;
        }
        let mut v: Vec<u64> = row.iter().map(reduce).collect();
        for (lead, e) in &echelon {
            let c = v[*lead];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(e) {
                    *x = (*x + P - mulmod(c, *y)) % P;
                }
            }
        }
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = powmod(v[lead], P - 2);
            for x in v.iter_mut() {
                *x = mulmod(*x, inv);
            }
            echelon.push((lead, v));
            chosen.push(idx);
        }
    }
    chosen
}

/// RREF of a rational matrix, or `None` when the field is not `Q` or the
/// modular selection missed a row.
pub(super) fn rational_rref(f: &Field, a: &Matrix) -> Option<Rref> {
    f.as_rational(&f.one())?;
    let rows = integer_rows(f, a)?;
    let chosen = independent_rows(&rows, a.cols);
    if chosen.len() == a.cols {
        // full column rank modulo P, hence over Q
        let mut reduced = Matrix::zeros(f, a.rows, a.cols);
        for j in 0..a.cols {
            reduced.set(j, j, f.one());
        }
        return Some(Rref { reduced, pivots: (0..a.cols).collect(), transform: None });
    }
    let mut sub = Matrix::zeros(f, chosen.len(), a.cols);
    for (r, &i) in chosen.iter().enumerate() {
        for j in 0..a.cols {
            sub.set(r, j, a.get(i, j).clone());
        }
    }
    let pivots = rref_in_place(f, &mut sub, a.cols);
    let reduced_sub = Rref { reduced: sub, pivots, transform: None };
    let kernel = kernel_from_rref(f, &reduced_sub, a.cols);
    let int_kernel: Vec<Vec<BigInt>> = kernel
        .iter()
        .map(|v| {
            let d = v.iter().fold(BigInt::one(), |d, c| d.lcm(f.as_rational(c).expect("rational").denom()));
            v.iter()
                .map(|c| {
                    let q = f.as_rational(c).expect("rational");
                    q.numer() * (&d / q.denom())
                })
                .collect()
        })
        .collect();
    for row in &rows {
        for k in &int_kernel {
            let dot: BigInt = row.iter().zip(k).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum();
            if !dot.is_zero() {
                return None;
            }
        }
    }
    let Rref { reduced: sub, pivots, .. } = reduced_sub;
    let mut reduced = Matrix::zeros(f, a.rows, a.cols);
    for r in 0..sub.rows {
        for j in 0..a.cols {
            reduced.set(r, j, sub.get(r, j).clone());
        }
    }
    Some(Rref { reduced, pivots, transform: None })
}
