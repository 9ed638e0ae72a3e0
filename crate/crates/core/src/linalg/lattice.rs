//! Short integral bases of rational subspaces.
//!
//! A subspace `V ⊆ Q^n` meets `Z^n` in a lattice of full rank in `V`. Its
//! RREF basis usually has large denominators even when `V` contains short
//! integer vectors, and algebras materialized on such bases inherit huge
//! structure constants. An LLL-reduced basis of `V ∩ Z^n` avoids that.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Subspace, Vector};
use crate::field::Field;

type IntVec = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

fn round(q: &BigRational) -> BigInt {
    (q + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// LLL reduction with `δ = 3/4` of linearly independent integer vectors,
/// in place.
pub(crate) fn lll(b: &mut [IntVec]) {
    let n = b.len();
    if n < 2 {
        return;
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    // Gram–Schmidt data: mu[i][j] for j < i, and squared norms of b*_i
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut norms: Vec<BigRational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut norm = BigRational::from(dot(&b[i], &b[i]));
        for j in 0..i {
            let mut m = BigRational::from(dot(&b[i], &b[j]));
            for l in 0..j {
                m -= &mu[j][l] * &mu[i][l] * &norms[l];
            }
            m /= &norms[j];
            norm -= &m * &m * &norms[j];
            mu[i][j] = m;
        }
        norms.push(norm);
    }
    let size_reduce = |b: &mut [IntVec], mu: &mut [Vec<BigRational>], k: usize, l: usize| {
        let q = round(&mu[k][l]);
        if q.is_zero() {
            return;
        }
        let src = b[l].clone();
        axpy(&mut b[k], &q, &src);
        let qr = BigRational::from(q);
        mu[k][l] -= &qr;
        for j in 0..l {
            let d = &qr * &mu[l][j];
            mu[k][j] -= d;
        }
    };
    let mut k = 1;
    while k < n {
        size_reduce(b, &mut mu, k, k - 1);
        let m = mu[k][k - 1].clone();
        if norms[k] < (&delta - &m * &m) * &norms[k - 1] {
            let bnew = &norms[k] + &m * &m * &norms[k - 1];
            mu[k][k - 1] = &m * &norms[k - 1] / &bnew;
            norms[k] = &norms[k - 1] * &norms[k] / &bnew;
            norms[k - 1] = bnew;
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = mu[k][j].clone();
                mu[k][j] = std::mem::replace(&mut mu[k - 1][j], t);
            }
            for i in k + 1..n {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &m * &t;
                mu[i][k - 1] = t + &mu[k][k - 1] * &mu[i][k];
            }
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                size_reduce(b, &mut mu, k, l);
            }
            k += 1;
        }
    }
}

/// Unimodular row operations bringing `values` to `(g, 0, ..., 0)`, applied
/// alongside to `rows`.
fn gcd_reduce(rows: &mut [IntVec], values: &mut [BigInt]) {
    for i in 1..rows.len() {
        while !values[i].is_zero() {
            let q = values[0].div_floor(&values[i]);
            let (head, tail) = rows.split_at_mut(i);
            axpy(&mut head[0], &q, &tail[0]);
            let vi = values[i].clone();
            values[0] -= &q * vi;
            rows.swap(0, i);
            values.swap(0, i);
        }
    }
}

/// An LLL-reduced basis of `V ∩ Z^n` for a subspace `V` of `Q^n`, or `None`
/// over other fields.
pub fn reduced_integral_basis(f: &Field, space: &Subspace) -> Option<Vec<Vector>> {
    f.as_rational(&f.one())?;
    let k = space.dim();
    if k == 0 {
        return Some(Vec::new());
    }
    let n = space.ambient;
    let basis = space.basis();
    let mut denom = BigInt::one();
    for v in basis {
        for c in v {
            denom = denom.lcm(f.as_rational(c)?.denom());
        }
    }
    let scaled: Vec<IntVec> = basis
        .iter()
        .map(|v| {
            v.iter()
                .map(|c| {
                    let q = f.as_rational(c).expect("rational");
                    q.numer() * (&denom / q.denom())
                })
                .collect()
        })
        .collect();
    // coefficient rows c ∈ Z^k with c · scaled ≡ 0 (mod denom) in every column
    let mut rows: Vec<IntVec> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for col in 0..n {
        let column: IntVec = scaled.iter().map(|v| v[col].clone()).collect();
        let mut values: Vec<BigInt> = rows.iter().map(|c| dot(c, &column).mod_floor(&denom)).collect();
        if values.iter().all(Zero::is_zero) {
            continue;
        }
        gcd_reduce(&mut rows, &mut values);
        let factor = &denom / values[0].gcd(&denom);
        for c in rows[0].iter_mut() {
            *c *= &factor;
        }
        lll(&mut rows);
    }
    let mut vectors: Vec<IntVec> = rows
        .iter()
        .map(|c| (0..n).map(|j| c.iter().zip(&scaled).map(|(ci, v)| ci * &v[j]).sum::<BigInt>() / &denom).collect())
        .collect();
    lll(&mut vectors);
    let out = vectors
        .into_iter()
        .map(|v| v.into_iter().map(|x| f.from_rational(&BigRational::from(x)).expect("rational field")).collect())
        .collect();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn lll_shortens_a_skewed_basis() {
        let mut b: Vec<IntVec> = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        lll(&mut b);
        let longest = b.iter().map(|v| dot(v, v)).max().unwrap();
        assert!(longest <= BigInt::from(5), "{b:?}");
    }

    #[test]
    fn saturated_lattice_of_a_line_and_a_plane() {
        let f = Field::rationals();
        let q = |n: i64, d: i64| f.from_rational(&BigRational::new(n.into(), d.into())).unwrap();
        let line = Subspace::span(&f, 3, vec![vec![q(2, 3), q(4, 3), q(-2, 1)]]);
        let b = reduced_integral_basis(&f, &line).unwrap();
        assert_eq!(b.len(), 1);
        let abs: Vec<BigInt> = b[0].iter().map(|c| f.as_rational(c).unwrap().abs().to_integer()).collect();
        assert_eq!(abs, [1, 2, 3].map(BigInt::from));
        let plane = Subspace::span(&f, 3, vec![vec![q(1, 1), q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1), q(1, 1)]]);
        let b = reduced_integral_basis(&f, &plane).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(Subspace::span(&f, 3, b.clone()), plane);
        for v in &b {
            assert!(v.iter().all(|c| f.as_rational(c).unwrap().is_integer()));
        }
    }
}
