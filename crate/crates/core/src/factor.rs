//! Finding a nontrivial factor of a univariate polynomial, or proving there
//! is none.
//!
//! * finite fields: squarefree reduction, distinct-degree and
//!   equal-degree splitting (deterministically seeded);
//! * `Q`: Zassenhaus (modular factorization, Hensel lifting, recombination);
//! * `F_p(t)`: specialization and Eisenstein tests for irreducibility, then a
//!   bounded exhaustive search for a factor in `F_p[t][X]`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::error::{AlgError, Result};
use crate::field::{Elem, Field, RatFn};
use crate::poly::{self, Poly};

/// Outcome of a factor search on a nonconstant polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Irreducible,
    /// A monic divisor of degree strictly between 0 and the input degree.
    Factor(Poly),
}

const BRUTE_FORCE_LIMIT: f64 = 4_194_304.0;

pub fn find_factor(f: &Field, m: &[Elem]) -> Result<Split> {
    let mut m = m.to_vec();
    poly::trim(f, &mut m);
    let n = poly::degree(&m).ok_or_else(|| AlgError::Invariant("factoring zero".into()))?;
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    let m = poly::monic(f, &m);
    if f.is_finite() {
        finite_find_factor(f, &m)
    } else if f.characteristic() == 0 && f.base().is_none() {
        rational_find_factor(f, &m)
    } else if f.is_rational_functions() {
        ratfun_find_factor(f, &m)
    } else {
        Err(AlgError::UnsupportedField(format!(
            "polynomial factorization over {f}"
        )))
    }
}

pub fn is_irreducible(f: &Field, m: &[Elem]) -> Result<bool> {
    Ok(find_factor(f, m)? == Split::Irreducible)
}

/// Complete factorization of a squarefree polynomial over a finite field
/// into monic irreducibles.
pub fn finite_factor_squarefree(f: &Field, m: &[Elem]) -> Result<Vec<Poly>> {
    let m = poly::monic(f, m);
    match poly::degree(&m) {
        None | Some(0) => return Ok(Vec::new()),
        _ => {}
    }
    match finite_find_factor(f, &m)? {
        Split::Irreducible => Ok(vec![m]),
        Split::Factor(g) => {
            let (h, _) = poly::divrem(f, &m, &g);
            let mut out = finite_factor_squarefree(f, &g)?;
            out.extend(finite_factor_squarefree(f, &h)?);
            Ok(out)
        }
    }
}

fn finite_find_factor(f: &Field, m: &[Elem]) -> Result<Split> {
    let n = m.len() - 1;
    let d = poly::derivative(f, m);
    if d.is_empty() {
        // m(x) = g(x)^p
        let p = f.characteristic() as usize;
        let g: Poly = (0..=n / p)
            .map(|i| f.frobenius_root(&m[i * p], 1))
            .collect::<Result<_>>()?;
        return Ok(Split::Factor(poly::monic(f, &g)));
    }
    let g = poly::gcd(f, m, &d);
    if poly::degree(&g).unwrap_or(0) >= 1 {
        return Ok(Split::Factor(g));
    }
    let q = f.order().expect("finite field");
    let x = poly::x(f);
    let mut h = x.clone();
    for k in 1..=n / 2 {
        h = poly::powmod(f, &h, &q, m);
        let g = poly::gcd(f, m, &poly::sub(f, &h, &x));
        let dg = poly::degree(&g).unwrap_or(0);
        if dg >= 1 {
            if dg < n {
                return Ok(Split::Factor(g));
            }
            return Ok(Split::Factor(equal_degree_split(f, m, k)?));
        }
    }
    Ok(Split::Irreducible)
}

/// Splits a squarefree `m` all of whose irreducible factors have degree `k`.
fn equal_degree_split(f: &Field, m: &[Elem], k: usize) -> Result<Poly> {
    let n = m.len() - 1;
    let q = f.order().expect("finite field");
    let p = f.characteristic();
    let mut rng = SplitMix64::seed_from_u64(0x5eed_f00d ^ n as u64);
    for _ in 0..512 {
        let mut a: Poly = (0..n).map(|_| f.random(&mut rng)).collect();
        poly::trim(f, &mut a);
        if poly::degree(&a).unwrap_or(0) < 1 {
            continue;
        }
        let b = if p == 2 {
            // trace map down to F_2
            let steps = f.prime_degree().expect("finite") as usize * k;
            let mut acc = Vec::new();
            let mut cur = poly::rem(f, &a, m);
            for _ in 0..steps {
                acc = poly::add(f, &acc, &cur);
                cur = poly::mulmod(f, &cur, &cur, m);
            }
            acc
        } else {
            let e: BigUint = (num_traits::pow(q.clone(), k) - BigUint::one()) / BigUint::from(2u32);
            let t = poly::powmod(f, &a, &e, m);
            poly::sub(f, &t, &poly::constant(f, f.one()))
        };
        let g = poly::gcd(f, m, &b);
        let dg = poly::degree(&g).unwrap_or(0);
        if dg >= 1 && dg < n {
            return Ok(g);
        }
    }
    Err(AlgError::Invariant("equal-degree splitting did not converge".into()))
}

// ---------------------------------------------------------------- rationals

type ZPoly = Vec<BigInt>;

fn ztrim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

fn zsymmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

fn zcontent(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zprimitive(a: &[BigInt]) -> ZPoly {
    let c = zcontent(a);
    if c.is_zero() {
        return a.to_vec();
    }
    let sign = if a.last().is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.iter().map(|x| x / &c * &sign).collect()
}

fn to_fp(f: &Field, a: &[BigInt]) -> Poly {
    let mut out: Poly = a.iter().map(|c| f.from_bigint(c)).collect();
    poly::trim(f, &mut out);
    out
}

fn from_fp(f: &Field, a: &[Elem]) -> ZPoly {
    a.iter()
        .map(|c| BigInt::from(f.as_u64(c).expect("prime field element")))
        .collect()
}

fn to_q(q: &Field, a: &[BigInt]) -> Poly {
    let mut out: Poly = a.iter().map(|c| q.from_bigint(c)).collect();
    poly::trim(q, &mut out);
    out
}

/// Integer primitive polynomial with the same roots as `m` (monic over Q).
fn clear_denominators(m: &[Elem]) -> ZPoly {
    let l = m.iter().fold(BigInt::one(), |acc, c| match c {
        Elem::Q(r) => acc.lcm(r.denom()),
        _ => unreachable!("rational coefficient"),
    });
    let z: ZPoly = m
        .iter()
        .map(|c| match c {
            Elem::Q(r) => (r * BigRational::from_integer(l.clone())).to_integer(),
            _ => unreachable!(),
        })
        .collect();
    zprimitive(&z)
}

const SMALL_PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

fn rational_find_factor(q: &Field, m: &[Elem]) -> Result<Split> {
    let d = poly::derivative(q, m);
    let g = poly::gcd(q, m, &d);
    if poly::degree(&g).unwrap_or(0) >= 1 {
        return Ok(Split::Factor(g));
    }
    let big_f = clear_denominators(m);
    let n = big_f.len() - 1;
    let lc = big_f[n].clone();

    // Pick the good prime (squarefree reduction, lc a unit) with fewest
    // modular factors among the first few candidates.
    let mut best: Option<(u64, Vec<Poly>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Field::prime(p)?;
        let fm = to_fp(&fp, &big_f);
        let g = poly::gcd(&fp, &fm, &poly::derivative(&fp, &fm));
        if poly::degree(&g).unwrap_or(0) >= 1 {
            continue;
        }
        let factors = finite_factor_squarefree(&fp, &fm)?;
        if factors.len() == 1 {
            return Ok(Split::Irreducible);
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, factors) = best.ok_or_else(|| {
        AlgError::Unsupported("no suitable prime for modular factorization".into())
    })?;
    let fp = Field::prime(p)?;
    let r = factors.len();

    // Mignotte-style bound on coefficients of any factor (times |lc|).
    let maxc = big_f.iter().map(|c| c.abs()).max().expect("nonempty");
    let sqrt = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64 + 1);
    let bound = (BigInt::one() << n) * sqrt * maxc * lc.abs();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift_all(&fp, &big_f, &factors, p, k)?;

    let qf = Field::rationals();
    let target = to_q(&qf, &big_f);
    for size in 1..=r / 2 {
        let mut found = None;
        for_each_subset(r, size, &mut |subset| {
            if found.is_some() {
                return;
            }
            let mut g = vec![lc.clone()];
            for &i in subset {
                g = zmod(&zmul(&g, &lifted[i]), &modulus);
            }
            let g = zprimitive(&zsymmetric(&g, &modulus));
            if g.len() < 2 {
                return;
            }
            let gq = to_q(&qf, &g);
            if poly::rem(&qf, &target, &gq).is_empty() {
                found = Some(poly::monic(&qf, &gq));
            }
        });
        if let Some(g) = found {
            return Ok(Split::Factor(g));
        }
    }
    Ok(Split::Irreducible)
}

fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, visit);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), visit);
}

/// Lifts `big_f ≡ lc * prod(factors) (mod p)` to modulus `p^k`; returns
/// monic lifts of the factors.
fn hensel_lift_all(fp: &Field, big_f: &[BigInt], factors: &[Poly], p: u64, k: u32) -> Result<Vec<ZPoly>> {
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    let mut out = Vec::with_capacity(factors.len());
    let mut current = zmod(big_f, &modulus);
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // remaining cofactor is lc * g; make it monic modulo p^k
            let lc = current.last().expect("nonzero").clone();
            let inv = lc
                .modinv(&modulus)
                .ok_or_else(|| AlgError::Invariant("leading coefficient not invertible".into()))?;
            out.push(zmod(&current.iter().map(|c| c * &inv).collect::<ZPoly>(), &modulus));
            break;
        }
        let lc_p = fp.from_bigint(current.last().expect("nonzero"));
        let mut h = poly::constant(fp, lc_p);
        for other in &factors[i + 1..] {
            h = poly::mul(fp, &h, other);
        }
        let (big_g, big_h) = hensel_two(fp, &current, g, &h, p, k)?;
        out.push(big_g);
        current = big_h;
    }
    Ok(out)
}

fn hensel_two(fp: &Field, big_f: &[BigInt], g: &[Elem], h: &[Elem], p: u64, k: u32) -> Result<(ZPoly, ZPoly)> {
    let (one, s, t) = poly::ext_gcd(fp, g, h);
    if !poly::is_one(fp, &one) {
        return Err(AlgError::Invariant("modular factors are not coprime".into()));
    }
    let pb = BigInt::from(p);
    let modulus = num_traits::pow(pb.clone(), k as usize);
    let mut big_g = from_fp(fp, g);
    let mut big_h = from_fp(fp, h);
    let mut m = pb.clone();
    for _ in 1..k {
        let prod = zmul(&big_g, &big_h);
        let n = big_f.len().max(prod.len());
        let mut e: ZPoly = (0..n)
            .map(|i| {
                let a = big_f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&modulus) / &m
            })
            .collect();
        ztrim(&mut e);
        let e = to_fp(fp, &e);
        let et = poly::mul(fp, &e, &t);
        let (quo, dg) = poly::divrem(fp, &et, g);
        let dh = poly::add(fp, &poly::mul(fp, &s, &e), &poly::mul(fp, &quo, h));
        let add_scaled = |base: &mut ZPoly, delta: &[Elem]| {
            let d = from_fp(fp, delta);
            if base.len() < d.len() {
                base.resize(d.len(), BigInt::zero());
            }
            for (i, c) in d.iter().enumerate() {
                base[i] += c * &m;
            }
        };
        add_scaled(&mut big_g, &dg);
        add_scaled(&mut big_h, &dh);
        big_g = zmod(&big_g, &modulus);
        big_h = zmod(&big_h, &modulus);
        m *= &pb;
    }
    Ok((big_g, big_h))
}

// ------------------------------------------------------ rational functions

fn ratfun_parts(a: &Elem) -> &RatFn {
    match a {
        Elem::FpT(r) => r,
        _ => unreachable!("rational function coefficient"),
    }
}

fn fp_lcm(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    use crate::field::fp_poly as fpp;
    let g = fpp::gcd(a, b, p);
    let (q, _) = fpp::divrem(a, &g, p);
    fpp::mul(&q, b, p)
}

fn ratfun_find_factor(f: &Field, m: &[Elem]) -> Result<Split> {
    use crate::field::fp_poly as fpp;
    let p = f.characteristic();
    let n = m.len() - 1;
    let d = poly::derivative(f, m);
    if !d.is_empty() {
        let g = poly::gcd(f, m, &d);
        if poly::degree(&g).unwrap_or(0) >= 1 {
            return Ok(Split::Factor(g));
        }
    }
    // F in F_p[t][X], primitive
    let l = m
        .iter()
        .fold(vec![1u64], |acc, c| fp_lcm(&acc, ratfun_parts(c).denominator(), p));
    let mut big_f: Vec<Vec<u64>> = m
        .iter()
        .map(|c| {
            let r = ratfun_parts(c);
            let (q, _) = fpp::divrem(&l, r.denominator(), p);
            fpp::mul(r.numerator(), &q, p)
        })
        .collect();
    let content = big_f.iter().fold(Vec::new(), |g, c| fpp::gcd(&g, c, p));
    for c in big_f.iter_mut() {
        *c = fpp::divrem(c, &content, p).0;
    }

    let probes = p.min(64);
    let fp = Field::prime(p)?;
    for c in 0..probes {
        if fpp::eval(&big_f[n], c, p) == 0 {
            continue;
        }
        let spec: Poly = big_f.iter().map(|a| Elem::Fp(fpp::eval(a, c, p))).collect();
        if finite_find_factor(&fp, &poly::monic(&fp, &spec))? == Split::Irreducible {
            return Ok(Split::Irreducible);
        }
    }
    // Eisenstein at t - c
    for c in 0..probes {
        let val = |a: &[u64]| -> usize {
            let mut v = 0;
            let mut cur = a.to_vec();
            let lin = vec![(p - c) % p, 1];
            while !cur.is_empty() {
                let (q, r) = fpp::divrem(&cur, &lin, p);
                if !r.is_empty() {
                    break;
                }
                v += 1;
                cur = q;
            }
            v
        };
        if big_f[0].is_empty() {
            break;
        }
        if val(&big_f[n]) == 0 && val(&big_f[0]) == 1 && big_f[1..n].iter().all(|a| a.is_empty() || val(a) >= 1) {
            return Ok(Split::Irreducible);
        }
    }
    // bounded exhaustive search
    let dmax = big_f.iter().map(|a| a.len().saturating_sub(1)).max().unwrap_or(0);
    for k in 1..=n / 2 {
        let digits = (k + 1) * (dmax + 1);
        if (p as f64).powi(digits as i32) > BRUTE_FORCE_LIMIT {
            return Err(AlgError::Unsupported(format!(
                "factor search over {f} exceeds the exhaustive-search budget"
            )));
        }
        let mut counter = vec![0u64; digits];
        loop {
            let coeffs: Vec<Vec<u64>> = counter
                .chunks(dmax + 1)
                .map(|c| {
                    let mut v = c.to_vec();
                    fpp::trim(&mut v);
                    v
                })
                .collect();
            let lead = &coeffs[k];
            if lead.last() == Some(&1) {
                let g: Poly = coeffs
                    .iter()
                    .map(|c| Elem::FpT(RatFn::from_parts(c.clone(), vec![1], p)))
                    .collect();
                if poly::rem(f, m, &g).is_empty() {
                    return Ok(Split::Factor(poly::monic(f, &g)));
                }
            }
            // increment
            let mut i = 0;
            while i < digits {
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == digits {
                break;
            }
        }
    }
    Ok(Split::Irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(f: &Field, c: &[i64]) -> Poly {
        c.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn finite_field_irreducibility() {
        let f = Field::prime(2).unwrap();
        assert!(is_irreducible(&f, &qpoly(&f, &[1, 1, 1])).unwrap());
        assert!(!is_irreducible(&f, &qpoly(&f, &[1, 0, 1])).unwrap());
        // x^4 + x + 1 irreducible, x^4 + x^2 + 1 = (x^2+x+1)^2
        assert!(is_irreducible(&f, &qpoly(&f, &[1, 1, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&f, &qpoly(&f, &[1, 0, 1, 0, 1])).unwrap());
        let f5 = Field::prime(5).unwrap();
        // (x^2+2)(x^2+3) = x^4 + 1 over F_5 ... x^4+1 = (x^2+2)(x^2+3) since 6 = 1
        match find_factor(&f5, &qpoly(&f5, &[1, 0, 0, 0, 1])).unwrap() {
            Split::Factor(g) => {
                assert_eq!(poly::degree(&g), Some(2));
                assert!(poly::rem(&f5, &qpoly(&f5, &[1, 0, 0, 0, 1]), &g).is_empty());
            }
            Split::Irreducible => panic!("x^4+1 splits over F_5"),
        }
    }

    #[test]
    fn rational_factorization() {
        let q = Field::rationals();
        assert!(is_irreducible(&q, &qpoly(&q, &[1, 0, 1])).unwrap());
        assert!(!is_irreducible(&q, &qpoly(&q, &[-1, 0, 1])).unwrap());
        // x^4 + 4 = (x^2+2x+2)(x^2-2x+2): no rational roots, still reducible
        let m = qpoly(&q, &[4, 0, 0, 0, 1]);
        match find_factor(&q, &m).unwrap() {
            Split::Factor(g) => {
                assert_eq!(poly::degree(&g), Some(2));
                assert!(poly::rem(&q, &m, &g).is_empty());
            }
            Split::Irreducible => panic!("x^4+4 is reducible"),
        }
        // x^4 - 10x^2 + 1 is irreducible over Q but reducible mod every prime
        assert!(is_irreducible(&q, &qpoly(&q, &[1, 0, -10, 0, 1])).unwrap());
        // (2x - 1)(3x^2 + 1) with non-monic input
        let m = poly::mul(&q, &qpoly(&q, &[-1, 2]), &qpoly(&q, &[1, 0, 3]));
        assert!(!is_irreducible(&q, &m).unwrap());
    }

    #[test]
    fn rational_function_irreducibility() {
        let k = Field::rational_functions(2, "t").unwrap();
        let t = k.generator().unwrap();
        // X^2 - t: inseparable, irreducible by Eisenstein at t
        let m = vec![k.neg(&t), k.zero(), k.one()];
        assert!(is_irreducible(&k, &m).unwrap());
        // X^2 - t^2 = (X - t)^2
        let t2 = k.mul(&t, &t);
        let m = vec![k.neg(&t2), k.zero(), k.one()];
        assert!(!is_irreducible(&k, &m).unwrap());
        // (X - t)(X - t - 1): separable, reducible
        let a = vec![k.neg(&t), k.one()];
        let b = vec![k.neg(&k.add(&t, &k.one())), k.one()];
        assert!(!is_irreducible(&k, &poly::mul(&k, &a, &b)).unwrap());
        let k3 = Field::rational_functions(3, "t").unwrap();
        let t = k3.generator().unwrap();
        let m = vec![k3.neg(&t), k3.zero(), k3.zero(), k3.one()];
        assert!(is_irreducible(&k3, &m).unwrap());
    }
}
