//! Lifting a finite-dimensional subalgebra of `R/J` to a subalgebra of `R`.
//!
//! With lifts `x_i` of a basis `a_i` (where `a_i a_j = sum_k λ_ijk a_k`), the
//! defects `v_ij = x_i x_j - sum_k λ_ijk x_k` lie in `J`. The right ideal
//! `W = V + sum_i x_i V`, `V = sum v_ij R`, has an idempotent generator `f`,
//! and with `g = 1 - f` the elements `g x_i` span a subalgebra mapped
//! isomorphically onto `A`.

use serde::Serialize;

use super::fmt_vecs;
use crate::algebra::{AlgElement, QuotientPresentation};
use crate::error::{ensure, AlgError, Result};
use crate::field::Elem;
use crate::linalg::{self, Subspace};
use crate::regular::{corner_capture, right_generator_of};

#[derive(Clone, Debug)]
pub struct LiftTrace {
    /// The identity the construction works under: `1_R`, or a corner
    /// idempotent when `R` has no identity.
    pub unit: AlgElement,
    pub lifts: Vec<AlgElement>,
    /// `v_ij` at index `i * dim A + j`.
    pub defects: Vec<AlgElement>,
    pub v_space: Subspace,
    pub w_space: Subspace,
    pub f: AlgElement,
    pub g: AlgElement,
    /// `g x_i`
    pub t_basis: Vec<AlgElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftTraceJson {
    pub unit: Vec<String>,
    pub lifts: Vec<Vec<String>>,
    pub defects: Vec<Vec<String>>,
    pub v_dim: usize,
    pub w_dim: usize,
    pub f: Vec<String>,
    pub g: Vec<String>,
    pub t_basis: Vec<Vec<String>>,
}

impl LiftTrace {
    pub fn to_json(&self, pres: &QuotientPresentation) -> LiftTraceJson {
        let r = &pres.ambient;
        LiftTraceJson {
            unit: r.format_element(&self.unit),
            lifts: fmt_vecs(r, &self.lifts),
            defects: fmt_vecs(r, &self.defects),
            v_dim: self.v_space.dim(),
            w_dim: self.w_space.dim(),
            f: r.format_element(&self.f),
            g: r.format_element(&self.g),
            t_basis: fmt_vecs(r, &self.t_basis),
        }
    }

    /// Re-checks every invariant of the construction against `A`.
    pub fn verify(&self, pres: &QuotientPresentation, a: &Subspace) -> Result<()> {
        let r = &pres.ambient;
        let f = r.field();
        let jd = &pres.ideal;
        for v in &self.defects {
            ensure!(jd.contains(f, v), "defect outside J");
        }
        ensure!(jd.contains(f, &self.f), "f outside J");
        ensure!(r.is_idempotent(&self.f), "f is not idempotent");
        for w in self.w_space.basis() {
            ensure!(r.mul(&self.f, w) == *w, "W != fR");
        }
        for x in &self.lifts {
            let gx = r.mul(&self.g, x);
            ensure!(r.mul(&gx, &self.g) == gx, "g x g != g x");
        }
        let t = r.span(self.t_basis.clone());
        ensure!(t.dim() == a.dim(), "dim T != dim A");
        ensure!(r.is_subalgebra(&t), "T is not closed under multiplication");
        ensure!(t.intersect(f, jd).dim() == 0, "T meets J");
        let image = pres.quotient.span(t.basis().iter().map(|v| pres.project(v)).collect());
        ensure!(image.equals(a), "π(T) != A");
        Ok(())
    }
}

/// Lifts `A ⊆ R/J` using the section `σ` for the initial lifts.
pub fn lift_subalgebra(pres: &QuotientPresentation, a: &Subspace) -> Result<(Subspace, LiftTrace)> {
    let lifts: Vec<AlgElement> = a.basis().iter().map(|v| pres.section(v)).collect();
    lift_subalgebra_from(pres, a, &lifts)
}

/// Lifts `A ⊆ R/J` starting from arbitrary preimages `lifts[i]` of the RREF
/// basis of `A`.
pub fn lift_subalgebra_from(
    pres: &QuotientPresentation,
    a: &Subspace,
    lifts: &[AlgElement],
) -> Result<(Subspace, LiftTrace)> {
    let r = &pres.ambient;
    let q = &pres.quotient;
    let f = r.field();
    let basis = a.basis();
    let n = basis.len();
    if lifts.len() != n {
        return Err(AlgError::DimensionMismatch(format!("{} lifts for a {n}-dimensional A", lifts.len())));
    }
    for (x, ai) in lifts.iter().zip(basis) {
        if pres.project(x) != *ai {
            return Err(AlgError::PreconditionFailed("a lift does not map onto its basis vector".into()));
        }
    }
    // structure constants of A in its own basis
    let mut lambda = Vec::with_capacity(n * n);
    for ai in basis {
        for aj in basis {
            let c = a.coords(f, &q.mul(ai, aj)).ok_or_else(|| {
                AlgError::NotASubalgebra("A is not closed under multiplication".into())
            })?;
            lambda.push(c);
        }
    }
    // corner reduction when R has no identity
    let unit = match r.identity() {
        Some(one) => one.clone(),
        None => corner_capture(r, lifts, None)?,
    };
    let corner_basis: Vec<AlgElement> = (0..r.dim())
        .map(|k| r.mul3(&unit, &r.basis_element(k), &unit))
        .collect();
    let defects: Vec<AlgElement> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let comb = linalg::combine(f, r.dim(), &lambda[ij], lifts);
            r.sub(&r.mul(&lifts[i], &lifts[j]), &comb)
        })
        .collect();
    let mut vvecs = Vec::new();
    for v in &defects {
        vvecs.push(v.clone());
        for b in &corner_basis {
            vvecs.push(r.mul(v, b));
        }
    }
    let v_space = r.span(vvecs);
    let mut wvecs = v_space.basis().to_vec();
    for x in lifts {
        for v in v_space.basis() {
            wvecs.push(r.mul(x, v));
        }
    }
    let w_space = r.span(wvecs);
    let f_idem = right_generator_of(r, &w_space)?;
    let g = r.sub(&unit, &f_idem);
    let t_basis: Vec<AlgElement> = lifts.iter().map(|x| r.mul(&g, x)).collect();
    let trace = LiftTrace {
        unit,
        lifts: lifts.to_vec(),
        defects,
        v_space,
        w_space,
        f: f_idem,
        g,
        t_basis,
    };
    trace.verify(pres, a)?;
    // T in the lifted basis satisfies the same structure constants
    for (ij, lam) in lambda.iter().enumerate() {
        let (i, j) = (ij / n, ij % n);
        let lhs = r.mul(&trace.t_basis[i], &trace.t_basis[j]);
        ensure!(lhs == linalg::combine(f, r.dim(), lam, &trace.t_basis), "g x_i g x_j != sum λ g x_k");
    }
    let t = r.span(trace.t_basis.clone());
    Ok((t, trace))
}

/// Adds `J`-valued perturbations to the section lifts, for exercising the
/// correction step.
pub fn perturbed_lifts(pres: &QuotientPresentation, a: &Subspace, noise: &[Vec<Elem>]) -> Vec<AlgElement> {
    let r = &pres.ambient;
    let f = r.field();
    a.basis()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let base = pres.section(v);
            match noise.get(i) {
                Some(c) => r.add(&base, &linalg::combine(f, r.dim(), c, pres.ideal.basis())),
                None => base,
            }
        })
        .collect()
}
