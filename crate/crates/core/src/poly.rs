//! Dense univariate polynomials over any supported [`Field`], lowest degree
//! first. The zero polynomial is the empty vector.

use num_bigint::BigUint;
use num_traits::One;

use crate::field::{Elem, Field};

pub type Poly = Vec<Elem>;

pub fn trim(f: &Field, p: &mut Poly) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

pub fn degree(p: &[Elem]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn x(f: &Field) -> Poly {
    vec![f.zero(), f.one()]
}

pub fn constant(f: &Field, c: Elem) -> Poly {
    let mut out = vec![c];
    trim(f, &mut out);
    out
}

pub fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    let zero = f.zero();
    let mut out: Poly = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, &mut out);
    out
}

pub fn neg(f: &Field, a: &[Elem]) -> Poly {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &Field, a: &[Elem], c: &Elem) -> Poly {
    let mut out: Poly = a.iter().map(|x| f.mul(x, c)).collect();
    trim(f, &mut out);
    out
}

pub fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder. Panics if `b` is zero.
pub fn divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let inv_lc = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = f.mul(&r[dr], &inv_lc);
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
        }
        q[shift] = c;
        // the leading term cancels exactly
        r.pop();
        trim(f, &mut r);
    }
    trim(f, &mut q);
    (q, r)
}

pub fn rem(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &Field, a: &[Elem]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = f.inv(lc).expect("nonzero leading coefficient");
            scale(f, a, &inv)
        }
    }
}

pub fn gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Returns `(g, s, t)` with `s a + t b = g`, `g` the monic gcd.
pub fn ext_gcd(f: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly, Poly) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(f, &mut r0);
    trim(f, &mut r1);
    let (mut s0, mut s1) = (constant(f, f.one()), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), constant(f, f.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = f.inv(lc).expect("nonzero");
            (scale(f, &r0, &inv), scale(f, &s0, &inv), scale(f, &t0, &inv))
        }
    }
}

pub fn derivative(f: &Field, a: &[Elem]) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect();
    trim(f, &mut out);
    out
}

pub fn eval(f: &Field, a: &[Elem], x: &Elem) -> Elem {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn mulmod(f: &Field, a: &[Elem], b: &[Elem], m: &[Elem]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &Field, a: &[Elem], e: &BigUint, m: &[Elem]) -> Poly {
    let mut acc = rem(f, &constant(f, f.one()), m);
    let base = rem(f, a, m);
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

pub fn is_one(f: &Field, a: &[Elem]) -> bool {
    a.len() == 1 && f.is_one(&a[0])
}

pub fn pow_u(f: &Field, a: &[Elem], mut e: u64) -> Poly {
    let mut acc = constant(f, f.one());
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        base = mul(f, &base, &base);
        e >>= 1;
    }
    acc
}

pub(crate) fn biguint_pow(b: u64, e: u64) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout_over_q() {
        let f = Field::rationals();
        let c = |v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Poly>();
        let a = mul(&f, &c(&[1, 1]), &c(&[2, 0, 1]));
        let b = mul(&f, &c(&[1, 1]), &c(&[-3, 1]));
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(g, c(&[1, 1]));
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }

    #[test]
    fn powmod_matches_repeated_multiplication() {
        let f = Field::prime(5).unwrap();
        let c = |v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Poly>();
        let m = c(&[2, 0, 1, 1]);
        let a = c(&[1, 3]);
        let mut naive = constant(&f, f.one());
        for _ in 0..13 {
            naive = mulmod(&f, &naive, &a, &m);
        }
        assert_eq!(powmod(&f, &a, &BigUint::from(13u32), &m), naive);
    }
}
