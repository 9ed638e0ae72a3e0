//! Zero divisors in 4-dimensional central simple corners over `Q`.
//!
//! Random elements of `M_2(Q)` almost never have a reducible minimal
//! polynomial, so the generic search stalls there. Writing the corner as a
//! quaternion algebra `(a, b)` with `i² = a`, `j² = b`, `ij = -ji` reduces the
//! problem to an isotropic vector of the norm form
//! `c0² - a c1² - b c2² + ab c3²`, which is searched over a box of integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{AlgElement, Algebra};
use crate::field::Elem;
use crate::linalg::{self, Matrix, Subspace};

/// Half-width of the integer box searched for an isotropic vector.
const BOX: i128 = 48;
/// Norm-form coefficients larger than this are not searched.
const MAX_COEFF: i128 = 1 << 40;
/// Largest prime tried when stripping square factors.
const TRIAL_LIMIT: u64 = 2000;

/// A nonzero non-unit of the corner `b = e S e`, or `None` if the corner is
/// not a quaternion algebra over `Q` or no small isotropic vector exists.
pub(crate) fn quaternion_zero_divisor(
    s: &Algebra,
    e: &AlgElement,
    b: &Subspace,
    candidates: impl Iterator<Item = AlgElement>,
) -> Option<AlgElement> {
    let f = s.field();
    f.as_rational(&f.one())?;
    if b.dim() != 4 {
        return None;
    }
    let k = e.iter().position(|c| !f.is_zero(c))?;
    let scalar_of = |x: &AlgElement| -> Option<Elem> {
        let c = f.div(&x[k], &e[k]).ok()?;
        (s.scale(&c, e) == *x).then_some(c)
    };
    for x in candidates.take(8) {
        let m = s.min_poly_in(&x, Some(e));
        if m.len() != 3 {
            continue;
        }
        // i = x + p/2 with i² = a
        let half_p = f.div(&m[1], &f.from_i64(2)).ok()?;
        let i = s.add(&x, &s.scale(&half_p, e));
        let a = scalar_of(&s.mul(&i, &i))?;
        let (i, a) = normalize(s, &i, &a)?;
        let j = anticommuting(s, &i, b)?;
        let bsq = scalar_of(&s.mul(&j, &j))?;
        if f.is_zero(&bsq) {
            return Some(j);
        }
        let (j, bq) = normalize(s, &j, &bsq)?;
        if let Some([c0, c1, c2, c3]) = isotropic(a, bq) {
            let ij = s.mul(&i, &j);
            let mut z = s.scale(&f.from_i64(c0 as i64), e);
            for (c, v) in [(c1, &i), (c2, &j), (c3, &ij)] {
                z = s.add(&z, &s.scale(&f.from_i64(c as i64), v));
            }
            if !s.is_zero(&z) {
                return Some(z);
            }
        }
    }
    None
}

/// Rescales `v` (with `v² = q`) so that `v²` is an integer with no small
/// square factors, returning the new element and that integer.
fn normalize(s: &Algebra, v: &AlgElement, q: &Elem) -> Option<(AlgElement, i128)> {
    let f = s.field();
    let q = f.as_rational(q)?;
    if q.is_zero() {
        return None;
    }
    let mut n = q.numer() * q.denom();
    let mut root = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let pp = BigInt::from(p * p);
        while (&n % &pp).is_zero() {
            n /= &pp;
            root *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let n = n.to_i128().filter(|n| n.abs() <= MAX_COEFF)?;
    // (λ v)² = λ² q with λ = denom / root
    let lambda = BigRational::new(q.denom().clone(), root);
    let scaled = s.scale(&f.from_rational(&lambda).ok()?, v);
    Some((scaled, n))
}

/// A nonzero `j` in the corner with `i j = -j i`.
fn anticommuting(s: &Algebra, i: &AlgElement, b: &Subspace) -> Option<AlgElement> {
    let f = s.field();
    let cols: Vec<_> = b.basis().iter().map(|y| s.add(&s.mul(i, y), &s.mul(y, i))).collect();
    let m = Matrix::from_cols(f, s.dim(), &cols);
    let ker = linalg::kernel(f, &m);
    let c = ker.first()?;
    let j = linalg::combine(f, s.dim(), c, b.basis());
    (!s.is_zero(&j)).then_some(j)
}

/// Integers, not all zero, with `c0² - a c1² - b c2² + ab c3² = 0`.
fn isotropic(a: i128, b: i128) -> Option<[i128; 4]> {
    if is_square(a) {
        return Some([a.isqrt(), 1, 0, 0]);
    }
    if is_square(b) {
        return Some([b.isqrt(), 0, 1, 0]);
    }
    // c0² - a c1² = b (c2² - a c3²)
    for h in 1..=BOX {
        for c2 in -h..=h {
            for c3 in -h..=h {
                if c2.abs().max(c3.abs()) != h {
                    continue;
                }
                let t = b.checked_mul(c2 * c2 - a * c3 * c3)?;
                for c1 in 0..=BOX {
                    let v = t.checked_add(a.checked_mul(c1 * c1)?)?;
                    if is_square(v) {
                        return Some([v.isqrt(), c1, c2, c3]);
                    }
                }
            }
        }
    }
    None
}

fn is_square(v: i128) -> bool {
    v >= 0 && {
        let r = v.isqrt();
        r * r == v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_vectors() {
        // (-1, -1) is the Hamilton quaternions, anisotropic over Q; (3, -5) ramifies at 5
        assert!(isotropic(-1, -1).is_none());
        assert!(isotropic(3, -5).is_none());
        for (a, b) in [(2, 7), (-1, 2), (3, -2), (5, 5), (-1, 1)] {
            let [c0, c1, c2, c3] = isotropic(a, b).unwrap();
            assert_eq!(c0 * c0 - a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3, 0, "({a}, {b})");
            assert!([c0, c1, c2, c3].iter().any(|c| *c != 0));
        }
    }
}
