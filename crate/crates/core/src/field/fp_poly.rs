//! Dense polynomials over `F_p` with `u64` coefficients, lowest degree first.
//! Used as the numerator/denominator carrier of `F_p(t)` elements.

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push((x + y) % p);
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[u64], p: u64) -> Vec<u64> {
    a.iter().map(|&x| (p - x) % p).collect()
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| mulmod(x, c, p)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by zero polynomial");
    let inv_lc = invmod(b[db], p);
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = mulmod(r[dr], inv_lc, p);
        let shift = dr - db;
        q[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            let sub = mulmod(c, y, p);
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, invmod(lc, p), p),
    }
}

/// Monic gcd (zero if both inputs are zero).
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub(crate) fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}

/// `a(t^k)`.
#[cfg(test)]
pub(crate) fn inflate(a: &[u64], k: usize) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; (a.len() - 1) * k + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

pub(crate) fn pow(a: &[u64], mut e: u64, p: u64) -> Vec<u64> {
    let mut acc = vec![1 % p];
    trim(&mut acc);
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base, p);
        }
        base = mul(&base, &base, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let p = 7;
        let a = vec![3, 0, 5, 1, 6];
        let b = vec![2, 1, 1];
        let (q, r) = divrem(&a, &b, p);
        assert!(r.len() < b.len());
        assert_eq!(add(&mul(&q, &b, p), &r, p), a);
    }

    #[test]
    fn gcd_of_products() {
        let p = 5;
        let f = vec![1, 1]; // t + 1
        let g = vec![2, 0, 1]; // t^2 + 2
        let h = vec![4, 1]; // t + 4
        let a = mul(&f, &g, p);
        let b = mul(&f, &h, p);
        assert_eq!(gcd(&a, &b, p), f);
    }

    #[test]
    fn frobenius_on_polynomials() {
        // over F_p, a(t)^p = a(t^p)
        let p = 3;
        let a = vec![2, 1, 1];
        assert_eq!(pow(&a, p, p), inflate(&a, p as usize));
    }
}
