//! Matrix units and matricial certificates.

use serde::Serialize;

use super::radical::radical;
use super::wedderburn::{decompose_semisimple, Component};
use crate::algebra::{AlgElement, Algebra};
use crate::error::{ensure, AlgError, Result};
use crate::linalg::{Subspace, Vector};

/// A full set of matrix units `e^{(s)}_{ij}` for blocks `s = 0..t`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixUnitsSystem {
    pub sizes: Vec<usize>,
    /// `units[s][i][j] = e^{(s)}_{ij}`
    pub units: Vec<Vec<Vec<AlgElement>>>,
}

impl MatrixUnitsSystem {
    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// `p_s = sum_i e^{(s)}_{ii}`
    pub fn block_identity(&self, a: &Algebra, s: usize) -> AlgElement {
        let mut acc = a.zero();
        for i in 0..self.sizes[s] {
            acc = a.add(&acc, &self.units[s][i][i]);
        }
        acc
    }

    pub fn identity(&self, a: &Algebra) -> AlgElement {
        let mut acc = a.zero();
        for s in 0..self.block_count() {
            acc = a.add(&acc, &self.block_identity(a, s));
        }
        acc
    }

    pub fn elements(&self) -> Vec<AlgElement> {
        self.units.iter().flatten().flatten().cloned().collect()
    }

    pub fn span(&self, a: &Algebra) -> Subspace {
        a.span(self.elements())
    }

    /// Checks `e^{(s)}_{ij} e^{(r)}_{kl} = δ_{sr} δ_{jk} e^{(s)}_{il}` for all
    /// index pairs and that the units are linearly independent.
    pub fn verify(&self, a: &Algebra) -> Result<()> {
        let flat: Vec<(usize, usize, usize)> = self
            .sizes
            .iter()
            .enumerate()
            .flat_map(|(s, &n)| (0..n).flat_map(move |i| (0..n).map(move |j| (s, i, j))))
            .collect();
        for &(s, i, j) in &flat {
            for &(r, k, l) in &flat {
                let prod = a.mul(&self.units[s][i][j], &self.units[r][k][l]);
                let ok = if s == r && j == k {
                    prod == self.units[s][i][l]
                } else {
                    a.is_zero(&prod)
                };
                ensure!(ok, "matrix unit relation fails for e({s})_{i}{j} * e({r})_{k}{l}");
            }
        }
        ensure!(self.span(a).dim() == flat.len(), "matrix units are linearly dependent");
        Ok(())
    }

    pub fn to_json(&self, a: &Algebra) -> MatrixUnitsJson {
        MatrixUnitsJson {
            sizes: self.sizes.clone(),
            units: self
                .units
                .iter()
                .map(|b| b.iter().map(|row| row.iter().map(|e| a.format_element(e)).collect()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixUnitsJson {
    pub sizes: Vec<usize>,
    pub units: Vec<Vec<Vec<Vec<String>>>>,
}

/// Matrix units of one split component from its primitive idempotents.
pub(crate) fn component_units(a: &Algebra, c: &Component) -> Result<Vec<Vec<AlgElement>>> {
    if !c.split() {
        return Err(AlgError::NotSplit);
    }
    let f = a.field();
    let u = &c.primitive_idempotents;
    let n = u.len();
    let basis = a.basis();
    let first_in = |left: &AlgElement, right: &AlgElement| -> Result<AlgElement> {
        let sp = a.span(basis.iter().map(|b| a.mul3(left, b, right)).collect());
        ensure!(sp.dim() == 1, "corner u_i A u_j has dimension {} in a split component", sp.dim());
        Ok(sp.basis()[0].clone())
    };
    let mut col = vec![u[0].clone()];
    let mut row = vec![u[0].clone()];
    for i in 1..n {
        let ei1 = first_in(&u[i], &u[0])?;
        let v = first_in(&u[0], &u[i])?;
        let prod = a.mul(&v, &ei1);
        let k = u[0].iter().position(|x| !f.is_zero(x)).expect("nonzero idempotent");
        let mu = f.div(&prod[k], &u[0][k])?;
        let e1i = a.scale(&f.inv(&mu)?, &v);
        ensure!(a.mul(&e1i, &ei1) == u[0], "e_1i e_i1 != e_11");
        col.push(ei1);
        row.push(e1i);
    }
    Ok((0..n).map(|i| (0..n).map(|j| a.mul(&col[i], &row[j])).collect()).collect())
}

/// Why an algebra fails to be matricial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonMatricialReason {
    NoIdentity,
    NonzeroRadical,
    NonSplitComponent,
}

#[derive(Clone, Debug)]
pub struct MatricialVerdict {
    pub reason: Option<NonMatricialReason>,
    pub units: Option<MatrixUnitsSystem>,
}

impl MatricialVerdict {
    pub fn is_matricial(&self) -> bool {
        self.reason.is_none()
    }
}

/// Decides `A ≅ M_{n_1}(K) x ... x M_{n_t}(K)`, with matrix units spanning
/// `A` as the certificate.
pub fn is_matricial(a: &Algebra) -> Result<MatricialVerdict> {
    let no = |r| Ok(MatricialVerdict { reason: Some(r), units: None });
    if a.dim() == 0 {
        return Ok(MatricialVerdict {
            reason: None,
            units: Some(MatrixUnitsSystem { sizes: vec![], units: vec![] }),
        });
    }
    if !a.is_unital() {
        return no(NonMatricialReason::NoIdentity);
    }
    if radical(a)?.dim() != 0 {
        return no(NonMatricialReason::NonzeroRadical);
    }
    let comps = decompose_semisimple(a)?;
    if !comps.iter().all(Component::split) {
        return no(NonMatricialReason::NonSplitComponent);
    }
    let mut sys = MatrixUnitsSystem { sizes: vec![], units: vec![] };
    for c in &comps {
        sys.sizes.push(c.n);
        sys.units.push(component_units(a, c)?);
    }
    sys.verify(a)?;
    ensure!(sys.span(a).dim() == a.dim(), "matrix units do not span the algebra");
    Ok(MatricialVerdict { reason: None, units: Some(sys) })
}

/// Matrix units of a simple split algebra.
pub fn matrix_units(a: &Algebra) -> Result<MatrixUnitsSystem> {
    if !a.is_unital() || radical(a)?.dim() != 0 {
        return Err(AlgError::NotSimple);
    }
    let comps = decompose_semisimple(a)?;
    if comps.len() != 1 {
        return Err(AlgError::NotSimple);
    }
    let units = component_units(a, &comps[0])?;
    let sys = MatrixUnitsSystem { sizes: vec![comps[0].n], units: vec![units] };
    sys.verify(a)?;
    Ok(sys)
}

/// `max_s n_s` for semisimple `A`: the least `n` with `x^n = 0` for every
/// nilpotent `x`.
pub fn index_of_nilpotence(a: &Algebra) -> Result<usize> {
    if a.dim() == 0 {
        return Ok(0);
    }
    if !a.is_unital() || radical(a)?.dim() != 0 {
        return Err(AlgError::NotSemisimple);
    }
    Ok(decompose_semisimple(a)?.iter().map(|c| c.n).max().unwrap_or(0))
}

/// One simple component `M_n(D)`: matrix units over `D` and a basis of
/// `D = e_11 A e_11`.
#[derive(Clone, Debug)]
pub struct DivisionBlock {
    pub units: Vec<Vec<AlgElement>>,
    pub division_basis: Vec<AlgElement>,
}

impl DivisionBlock {
    pub fn n(&self) -> usize {
        self.units.len()
    }

    pub fn d(&self) -> usize {
        self.division_basis.len()
    }
}

/// Matrix units over the division algebras of every component of a
/// semisimple unital algebra. For split components `D = K e_11`.
pub fn division_matrix_units(a: &Algebra) -> Result<Vec<DivisionBlock>> {
    if !a.is_unital() || radical(a)?.dim() != 0 {
        return Err(AlgError::NotSemisimple);
    }
    let f = a.field();
    let basis = a.basis();
    let corner = |l: &AlgElement, r: &AlgElement| a.span(basis.iter().map(|b| a.mul3(l, b, r)).collect());
    let mut blocks = Vec::new();
    for c in decompose_semisimple(a)? {
        let u = &c.primitive_idempotents;
        let n = u.len();
        let mut col = vec![u[0].clone()];
        let mut row = vec![u[0].clone()];
        for i in 1..n {
            let ei1 = corner(&u[i], &u[0]).basis()[0].clone();
            // e_1i in u_1 A u_i with e_1i e_i1 = u_1
            let cand = corner(&u[0], &u[i]);
            let cols: Vec<Vector> = cand.basis().iter().map(|v| a.mul(v, &ei1)).collect();
            let m = crate::linalg::Matrix::from_cols(f, a.dim(), &cols);
            let coeffs = crate::linalg::solve(f, &m, &u[0])
                .ok_or_else(|| AlgError::Invariant("no inverse matrix unit in a simple component".into()))?;
            let e1i = crate::linalg::combine(f, a.dim(), &coeffs, cand.basis());
            ensure!(a.mul(&ei1, &e1i) == u[i], "e_i1 e_1i != e_ii");
            col.push(ei1);
            row.push(e1i);
        }
        let units: Vec<Vec<AlgElement>> =
            (0..n).map(|i| (0..n).map(|j| a.mul(&col[i], &row[j])).collect()).collect();
        let division_basis = corner(&u[0], &u[0]).basis().to_vec();
        blocks.push(DivisionBlock { units, division_basis });
    }
    Ok(blocks)
}
