//! Constructions inside an extension `R -> R/J`. Complements of `J` are
//! lifted from the quotient and then centralized by idempotents of `J`, which
//! yields envelopes of finite sets. The characteristic-`p` counterexample
//! lives here too.

mod centralize;
mod counterexample;
mod envelope;
mod lift;
mod star;
mod tensor;

pub use centralize::{
    centralizing_idempotent, centralizing_idempotent_over_division, BlockRoute, CentralizerJson, CentralizerTrace,
    QuasiInverseEntry,
};
pub use counterexample::{
    counterexample_build, counterexample_verify, AlternatingCertificate, BlockBand, CounterexampleJson,
    CounterexampleSystem, FeasibilityVerdict, NuChoice,
};
pub use envelope::{fdss_envelope, matricial_envelope, EnvelopeJson, EnvelopeResult, EnvelopeRoute, EnvelopeTrace};
pub use lift::{lift_subalgebra, lift_subalgebra_from, perturbed_lifts, LiftTrace, LiftTraceJson};
pub use star::{condition_star_check, FailureReport, StarOutcome, StarProblem, StarRoute};
pub use tensor::{separability_check, t_stable_idempotent, Separability, TensorSplitJson, TensorSplitTrace};

use crate::algebra::{AlgElement, Algebra};
use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix, Subspace, Vector};

pub(crate) fn fmt_vecs(a: &Algebra, vs: &[AlgElement]) -> Vec<Vec<String>> {
    vs.iter().map(|v| a.format_element(v)).collect()
}

/// A vector space decomposition `R = T ⊕ J`.
#[derive(Clone, Debug)]
pub struct Complement {
    field: Field,
    t_dim: usize,
    /// Inverse of the matrix whose columns are the `T` basis then the `J` basis.
    coords: Matrix,
    t_basis: Vec<Vector>,
    j_basis: Vec<Vector>,
}

impl Complement {
    pub fn new(f: &Field, t: &Subspace, j: &Subspace) -> Result<Complement> {
        let n = t.ambient;
        if t.dim() + j.dim() != n {
            return Err(AlgError::NotAComplement(format!(
                "dim T + dim J = {} + {} but dim R = {n}",
                t.dim(),
                j.dim()
            )));
        }
        let cols: Vec<Vector> = t.basis().iter().chain(j.basis()).cloned().collect();
        let m = Matrix::from_cols(f, n, &cols);
        let coords = linalg::inverse(f, &m).ok_or_else(|| AlgError::NotAComplement("T ∩ J != 0".into()))?;
        Ok(Complement {
            field: f.clone(),
            t_dim: t.dim(),
            coords,
            t_basis: t.basis().to_vec(),
            j_basis: j.basis().to_vec(),
        })
    }

    /// `x = t + y` with `t ∈ T`, `y ∈ J`.
    pub fn split(&self, x: &[crate::Elem]) -> (Vector, Vector) {
        let f = &self.field;
        let n = x.len();
        let c = self.coords.mul_vec(f, x);
        let t = linalg::combine(f, n, &c[..self.t_dim], &self.t_basis);
        let y = linalg::combine(f, n, &c[self.t_dim..], &self.j_basis);
        (t, y)
    }
}

#[cfg(test)]
mod tests;
