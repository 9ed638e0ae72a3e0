//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use algext::algebra::change_basis;
use algext::generate::{random_basis_change, DimProfile, Rng64};
use algext::linalg::{self, Subspace};
use algext::{AlgElement, Algebra, Field};
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> Rng64 {
    Rng64::seed_from_u64(seed)
}

/// A random combination of the basis of `s`.
pub fn random_in<R: Rng + ?Sized>(f: &Field, s: &Subspace, rng: &mut R) -> AlgElement {
    let coeffs: Vec<_> = s.basis().iter().map(|_| f.random(rng)).collect();
    linalg::combine(f, s.ambient, &coeffs, s.basis())
}

pub fn scrambled(a: &Algebra, seed: u64) -> Algebra {
    let mut r = rng(seed);
    let p = random_basis_change(a.field(), a.dim(), &mut r);
    change_basis(a, &p).unwrap()
}

/// `T + K (1_R - 1_T)`: a subalgebra sharing the identity of `R`.
pub fn unital_hull(r: &Algebra, t: &Subspace) -> Subspace {
    let emb = r.subalgebra(t).unwrap();
    let one_t = emb.to_ambient(&emb.algebra.one().unwrap());
    let c = r.sub(&r.one().unwrap(), &one_t);
    let mut v = t.basis().to_vec();
    v.push(c);
    r.span(v)
}

/// Picks one of `options` by seed and parses it.
pub fn profile_for(seed: u64, options: &[&str]) -> DimProfile {
    DimProfile::parse(options[(seed as usize) % options.len()]).unwrap()
}
