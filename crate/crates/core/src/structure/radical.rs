//! Jacobson radical.
//!
//! In characteristic 0, or when the regular module is smaller than the
//! characteristic, the radical is the kernel of the trace form
//! `(x, y) -> Tr(L_{xy})`. Otherwise we follow the iterated kernels of
//! Cohen, Ivanyos and Wales: with `m` the dimension of the regular module of
//! `A^1` and `l = floor(log_p m)`,
//!
//! ```text
//! I_0 = { a : Tr(L_{ab}) = 0 for all b }
//! I_i = { a in I_{i-1} : g_i(ab) = 0 for all b }      (i = 1..l)
//! ```
//!
//! where `g_i(x) = Tr(X~^{p^i}) / p^i mod p` for any integral lift `X~` of
//! `L_x`. The value only depends on the characteristic polynomial of `L_x`,
//! so we lift its coefficients and recover the power sum through Newton's
//! identities, which need no division. `g_i` is `p^i`-semilinear on
//! `I_{i-1}`: over `F_q` the kernel is pulled back through Frobenius, and
//! over `F_p(t)` each value is split over the subfield `F_p(t^{p^i})`.
//! `I_l` is the radical; we stop early once some `I_i` is a nilpotent ideal.

use crate::algebra::{adjoin_identity, Algebra};
use crate::error::{ensure, AlgError, Result};
use crate::field::{fp_poly, Elem, Field, RatFn};
use crate::linalg::{self, Matrix, Subspace, Vector};

pub fn radical(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let (u, adjoined) = if a.is_unital() {
        (a.clone(), false)
    } else {
        (adjoin_identity(a), true)
    };
    let rad_u = radical_unital(&u)?;
    let rad = if adjoined {
        let mut vecs = Vec::new();
        for v in rad_u.basis() {
            ensure!(u.field().is_zero(&v[n]), "radical of the unitization leaves the original algebra");
            vecs.push(v[..n].to_vec());
        }
        a.span(vecs)
    } else {
        rad_u
    };
    a.check_ideal(&rad)
        .map_err(|e| AlgError::Invariant(format!("computed radical is not an ideal: {e}")))?;
    ensure!(is_nilpotent_subspace(a, &rad), "computed radical is not nilpotent");
    Ok(rad)
}

/// `true` when every product of `dim + 1` elements of `s` vanishes.
pub fn is_nilpotent_subspace(a: &Algebra, s: &Subspace) -> bool {
    let mut power = s.clone();
    loop {
        if power.dim() == 0 {
            return true;
        }
        let mut vecs = Vec::new();
        for x in power.basis() {
            for y in s.basis() {
                vecs.push(a.mul(x, y));
            }
        }
        let next = a.span(vecs);
        if next.dim() == power.dim() {
            return false;
        }
        power = next;
    }
}

fn trace_form_kernel(u: &Algebra, within: &Subspace) -> Subspace {
    let f = u.field();
    let m = u.dim();
    let tau = u.basis_traces();
    let tr = |v: &[Elem]| -> Elem {
        v.iter()
            .zip(&tau)
            .fold(f.zero(), |acc, (x, t)| if f.is_zero(x) { acc } else { f.add(&acc, &f.mul(x, t)) })
    };
    let basis = within.basis();
    let r = basis.len();
    let mut g = Matrix::zeros(f, m, r);
    for (k, x) in basis.iter().enumerate() {
        for j in 0..m {
            g.set(j, k, tr(&u.mul_right_basis(x, j)));
        }
    }
    let ker = linalg::kernel(f, &g);
    let vecs = ker.iter().map(|c| linalg::combine(f, m, c, basis)).collect();
    u.span(vecs)
}

fn radical_unital(u: &Algebra) -> Result<Subspace> {
    let f = u.field().clone();
    let m = u.dim();
    let p = f.characteristic();
    let full = Subspace::full(&f, m);
    let mut ideal = trace_form_kernel(u, &full);
    if p == 0 || (m as u64) < p {
        return Ok(ideal);
    }
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= m as u128 {
        l += 1;
    }
    let kind = LiftKind::of(&f)?;
    for i in 1..=l {
        if ideal.dim() == 0 || (u.check_ideal(&ideal).is_ok() && is_nilpotent_subspace(u, &ideal)) {
            return Ok(ideal);
        }
        ideal = next_level(u, &ideal, i, &kind)?;
    }
    Ok(ideal)
}

fn next_level(u: &Algebra, prev: &Subspace, i: u32, kind: &LiftKind) -> Result<Subspace> {
    let f = u.field();
    let m = u.dim();
    let p = f.characteristic();
    let q = p.pow(i) as usize;
    let basis = prev.basis();
    let r = basis.len();
    if r >= 2 {
        let one = u.one()?;
        let a0 = u.mul(&basis[0], &one);
        let a1 = u.mul(&basis[1], &one);
        let lhs = witt_trace(u, &u.add(&a0, &a1), i, kind)?;
        let rhs = f.add(&witt_trace(u, &a0, i, kind)?, &witt_trace(u, &a1, i, kind)?);
        ensure!(lhs == rhs, "trace function g_{i} is not additive on I_{}", i - 1);
    }
    let mut values = vec![vec![f.zero(); r]; m];
    for (k, x) in basis.iter().enumerate() {
        for (j, row) in values.iter_mut().enumerate() {
            row[k] = witt_trace(u, &u.mul_right_basis(x, j), i, kind)?;
        }
    }
    let coeffs: Vec<Vector> = match kind {
        LiftKind::Prime { .. } => {
            let mat = Matrix::from_rows(r, values);
            linalg::kernel(f, &mat)
        }
        LiftKind::Galois { .. } => {
            let mat = Matrix::from_rows(r, values);
            linalg::kernel(f, &mat)
                .into_iter()
                .map(|y| y.iter().map(|c| f.frobenius_root(c, i as u64)).collect::<Result<Vector>>())
                .collect::<Result<Vec<_>>>()?
        }
        LiftKind::RatFun { .. } => {
            let mut rows = Vec::with_capacity(m * q);
            for row in &values {
                let parts: Vec<Vec<Elem>> = row.iter().map(|c| f.split_over_power_subfield(c, q)).collect();
                for s in 0..q {
                    rows.push(parts.iter().map(|pk| pk[s].clone()).collect());
                }
            }
            let mat = Matrix::from_rows(r, rows);
            linalg::kernel(f, &mat)
        }
    };
    let vecs = coeffs.iter().map(|c| linalg::combine(f, m, c, basis)).collect();
    Ok(u.span(vecs))
}

/// How field elements are lifted to a ring of characteristic `p^{i+1}`.
enum LiftKind {
    Prime { p: u64 },
    /// `F_q = F_p[X]/(mu)`, lifted to `(Z/p^{i+1})[X]/(mu~)`.
    Galois { p: u64, mu: Vec<u64>, degree: usize },
    /// `F_p(t)`: matrices are cleared of denominators and lifted to
    /// `(Z/p^{i+1})[t]`.
    RatFun { p: u64 },
}

impl LiftKind {
    fn of(f: &Field) -> Result<LiftKind> {
        let p = f.characteristic();
        if f.is_rational_functions() {
            return Ok(LiftKind::RatFun { p });
        }
        match f.base() {
            None => Ok(LiftKind::Prime { p }),
            Some(b) if b.is_finite() => {
                let mu = f
                    .minimal_polynomial()
                    .expect("extension")
                    .iter()
                    .map(|c| b.as_u64(c).expect("prime field"))
                    .collect::<Vec<_>>();
                let degree = mu.len() - 1;
                Ok(LiftKind::Galois { p, mu, degree })
            }
            Some(_) => Err(AlgError::UnsupportedField(format!(
                "radical over {f} needs dimension below the characteristic"
            ))),
        }
    }
}

/// Polynomials over `Z/M`, optionally reduced modulo a monic polynomial.
struct LiftRing {
    modulus: u64,
    reduce: Option<Vec<u64>>,
}

impl LiftRing {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.modulus)
            .collect();
        Self::trim(&mut out);
        out
    }

    fn scale(&self, a: &[u64], k: u64) -> Vec<u64> {
        let k = k % self.modulus;
        let mut out: Vec<u64> = a
            .iter()
            .map(|&x| ((x as u128 * k as u128) % self.modulus as u128) as u64)
            .collect();
        Self::trim(&mut out);
        out
    }

    fn neg(&self, a: &[u64]) -> Vec<u64> {
        self.scale(a, self.modulus - 1)
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let md = self.modulus as u128;
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % md;
            }
        }
        let mut out: Vec<u64> = out.into_iter().map(|x| x as u64).collect();
        if let Some(mu) = &self.reduce {
            let d = mu.len() - 1;
            while out.len() > d {
                let lead = out.pop().expect("nonempty");
                let shift = out.len() - d;
                for (k, &c) in mu[..d].iter().enumerate() {
                    let sub = ((lead as u128 * c as u128) % md) as u64;
                    out[shift + k] = (out[shift + k] + self.modulus - sub) % self.modulus;
                }
            }
        }
        Self::trim(&mut out);
        out
    }
}

/// `g_i(x)` for the left regular representation of `x` in `u`.
fn witt_trace(u: &Algebra, x: &[Elem], i: u32, kind: &LiftKind) -> Result<Elem> {
    let f = u.field();
    let lm = u.left_mul_matrix(x);
    let m = lm.rows;
    let (p, ring, denom, lifted_coeffs): (u64, LiftRing, Option<Vec<u64>>, Vec<Vec<u64>>);
    match kind {
        LiftKind::Prime { p: pp } => {
            p = *pp;
            ring = LiftRing { modulus: p.pow(i + 1), reduce: None };
            denom = None;
            let cp = linalg::char_poly(f, &lm);
            lifted_coeffs = cp
                .iter()
                .map(|c| {
                    let v = f.as_u64(c).expect("prime field");
                    if v == 0 {
                        Vec::new()
                    } else {
                        vec![v]
                    }
                })
                .collect();
        }
        LiftKind::Galois { p: pp, mu, .. } => {
            p = *pp;
            ring = LiftRing { modulus: p.pow(i + 1), reduce: Some(mu.clone()) };
            denom = None;
            let cp = linalg::char_poly(f, &lm);
            lifted_coeffs = cp
                .iter()
                .map(|c| match c {
                    Elem::Ext(v) => {
                        let mut w: Vec<u64> = v.iter().map(|e| f.base().unwrap().as_u64(e).unwrap()).collect();
                        LiftRing::trim(&mut w);
                        w
                    }
                    _ => unreachable!("extension element"),
                })
                .collect();
        }
        LiftKind::RatFun { p: pp } => {
            p = *pp;
            ring = LiftRing { modulus: p.pow(i + 1), reduce: None };
            let mut d = vec![1u64];
            for c in &lm.data {
                if let Elem::FpT(r) = c {
                    let g = fp_poly::gcd(&d, r.denominator(), p);
                    let (q, _) = fp_poly::divrem(r.denominator(), &g, p);
                    d = fp_poly::mul(&d, &q, p);
                }
            }
            let dm = Elem::FpT(RatFn::from_parts(d.clone(), vec![1], p));
            let scaled = lm.scale(f, &dm);
            let cp = linalg::char_poly(f, &scaled);
            lifted_coeffs = cp
                .iter()
                .map(|c| match c {
                    Elem::FpT(r) => {
                        debug_assert_eq!(r.denominator(), &[1]);
                        r.numerator().to_vec()
                    }
                    _ => unreachable!("rational function"),
                })
                .collect();
            denom = Some(d);
        }
    }
    let big_n = p.pow(i) as usize;
    // e_j = (-1)^j c_{m-j}
    let e = |j: usize| -> Vec<u64> {
        if j > m {
            return Vec::new();
        }
        let c = &lifted_coeffs[m - j];
        if j.is_multiple_of(2) {
            c.clone()
        } else {
            ring.neg(c)
        }
    };
    let es: Vec<Vec<u64>> = (0..=big_n).map(e).collect();
    let mut ps: Vec<Vec<u64>> = vec![Vec::new(); big_n + 1];
    for k in 1..=big_n {
        let mut acc = ring.scale(&es[k], k as u64);
        if k % 2 == 0 {
            acc = ring.neg(&acc);
        }
        for j in 1..k {
            let term = ring.mul(&es[j], &ps[k - j]);
            acc = if j % 2 == 1 { ring.add(&acc, &term) } else { ring.add(&acc, &ring.neg(&term)) };
        }
        ps[k] = acc;
    }
    let pi = p.pow(i);
    let mut t = Vec::with_capacity(ps[big_n].len());
    for &c in &ps[big_n] {
        ensure!(c % pi == 0, "power sum not divisible by p^{i}: argument outside I_{}", i - 1);
        t.push((c / pi) % p);
    }
    LiftRing::trim(&mut t);
    Ok(match kind {
        LiftKind::Prime { .. } => Elem::Fp(t.first().copied().unwrap_or(0)),
        LiftKind::Galois { degree, .. } => {
            let mut v: Vec<Elem> = t.iter().map(|&c| Elem::Fp(c)).collect();
            v.resize(*degree, Elem::Fp(0));
            Elem::Ext(v)
        }
        LiftKind::RatFun { .. } => {
            let d = denom.expect("denominator");
            let dn = fp_poly::pow(&d, big_n as u64, p);
            Elem::FpT(RatFn::from_parts(t, dn, p))
        }
    })
}
