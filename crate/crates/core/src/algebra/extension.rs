//! Quotients `R -> R/J` and extension instances `(R, J, R/J)`.

use serde::{Deserialize, Serialize};

use super::{AlgElement, Algebra, Embedded};
use crate::error::{AlgError, Result};
use crate::field::Elem;
use crate::linalg::{Matrix, Subspace, Vector};

/// `R/J` together with the projection `π` and a linear section `σ`.
///
/// `σ` sends the `i`-th quotient basis vector to the `i`-th ambient basis
/// vector outside the RREF pivots of `J`, so it is deterministic.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub ambient: Algebra,
    pub ideal: Subspace,
    pub quotient: Algebra,
    section_coords: Vec<usize>,
}

pub fn quotient(a: &Algebra, ideal: &Subspace) -> Result<QuotientPresentation> {
    if ideal.ambient != a.dim() {
        return Err(AlgError::DimensionMismatch(format!(
            "ideal lives in dimension {}, algebra has dimension {}",
            ideal.ambient,
            a.dim()
        )));
    }
    a.check_ideal(ideal)?;
    let f = a.field().clone();
    let mut is_pivot = vec![false; a.dim()];
    for &p in ideal.pivots() {
        is_pivot[p] = true;
    }
    let section_coords: Vec<usize> = (0..a.dim()).filter(|&i| !is_pivot[i]).collect();
    let d = section_coords.len();
    let project = |v: &[Elem]| -> Vector {
        let r = ideal.reduce(&f, v);
        section_coords.iter().map(|&i| r[i].clone()).collect()
    };
    let q = Algebra::from_products_trusted(&f, d, |x, y| {
        let bx = a.basis_element(section_coords[x]);
        let by = a.basis_element(section_coords[y]);
        project(&a.mul(&bx, &by))
    });
    let labels = section_coords.iter().map(|&i| format!("{}+J", a.labels()[i])).collect();
    let quotient = q.with_labels(labels)?;
    Ok(QuotientPresentation {
        ambient: a.clone(),
        ideal: ideal.clone(),
        quotient,
        section_coords,
    })
}

impl QuotientPresentation {
    /// `π(v)`
    pub fn project(&self, v: &[Elem]) -> AlgElement {
        let f = self.ambient.field();
        let r = self.ideal.reduce(f, v);
        self.section_coords.iter().map(|&i| r[i].clone()).collect()
    }

    /// `σ(q)`
    pub fn section(&self, q: &[Elem]) -> AlgElement {
        let mut v = self.ambient.zero();
        for (c, &i) in q.iter().zip(&self.section_coords) {
            v[i] = c.clone();
        }
        v
    }

    pub fn projection_matrix(&self) -> Matrix {
        let f = self.ambient.field();
        let cols: Vec<Vector> = (0..self.ambient.dim())
            .map(|i| self.project(&self.ambient.basis_element(i)))
            .collect();
        Matrix::from_cols(f, self.quotient.dim(), &cols)
    }

    pub fn section_matrix(&self) -> Matrix {
        let f = self.ambient.field();
        let cols: Vec<Vector> = (0..self.quotient.dim())
            .map(|i| self.section(&self.quotient.basis_element(i)))
            .collect();
        Matrix::from_cols(f, self.ambient.dim(), &cols)
    }

    pub fn ideal_algebra(&self) -> Result<Embedded> {
        self.ambient.subalgebra(&self.ideal)
    }

    /// Multiplicativity of `π` on all basis pairs and `π∘σ = id`.
    pub fn verify(&self) -> Result<()> {
        let a = &self.ambient;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let bi = a.basis_element(i);
                let bj = a.basis_element(j);
                let lhs = self.project(&a.mul(&bi, &bj));
                let rhs = self.quotient.mul(&self.project(&bi), &self.project(&bj));
                if lhs != rhs {
                    return Err(AlgError::Invariant(format!("projection not multiplicative at ({i},{j})")));
                }
            }
        }
        for k in 0..self.quotient.dim() {
            let e = self.quotient.basis_element(k);
            if self.project(&self.section(&e)) != e {
                return Err(AlgError::Invariant("section is not a right inverse of the projection".into()));
            }
        }
        Ok(())
    }
}

/// Structural class claimed for the ideal or the quotient of an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    Matricial,
    Fdss,
    UnitRegular,
    Regular,
    None,
}

/// An extension `0 -> J -> R -> R/J -> 0` with claimed classes for `J`
/// and `R/J`. Claims are checked by [`crate::structure::verify_extension`].
#[derive(Clone, Debug)]
pub struct ExtensionInstance {
    pub presentation: QuotientPresentation,
    pub ideal_class: ClassLabel,
    pub quotient_class: ClassLabel,
}

impl ExtensionInstance {
    pub fn new(
        algebra: Algebra,
        ideal_basis: Vec<AlgElement>,
        ideal_class: ClassLabel,
        quotient_class: ClassLabel,
    ) -> Result<ExtensionInstance> {
        for v in &ideal_basis {
            if !algebra.contains(v) {
                return Err(AlgError::DimensionMismatch("ideal vector has wrong length or field".into()));
            }
        }
        let ideal = algebra.span(ideal_basis);
        let presentation = quotient(&algebra, &ideal)?;
        Ok(ExtensionInstance {
            presentation,
            ideal_class,
            quotient_class,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.presentation.ambient
    }

    pub fn ideal(&self) -> &Subspace {
        &self.presentation.ideal
    }

    pub fn quotient(&self) -> &Algebra {
        &self.presentation.quotient
    }
}
