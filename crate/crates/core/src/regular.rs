//! Von Neumann regularity as linear algebra: quasi-inverses, idempotent
//! generators of one-sided ideals, corner capture and unit-regular witnesses.

use serde::Serialize;

use crate::algebra::{AlgElement, Algebra, QuotientPresentation};
use crate::error::{ensure, AlgError, Result};
use crate::field::{Elem, Field};
use crate::structure::{is_matricial, MatrixUnitsSystem};
use crate::linalg::{self, Matrix, Subspace, Vector};

/// `x` with a quasi-inverse `y` and optionally a unit `u` with `x u x = x`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularityWitness {
    pub x: AlgElement,
    pub y: AlgElement,
    pub unit: Option<(AlgElement, AlgElement)>,
}

impl RegularityWitness {
    /// Re-checks every identity in `a`.
    pub fn verify(&self, a: &Algebra) -> Result<()> {
        ensure!(a.mul3(&self.x, &self.y, &self.x) == self.x, "x y x != x");
        ensure!(a.mul3(&self.y, &self.x, &self.y) == self.y, "y x y != y");
        if let Some((u, ui)) = &self.unit {
            let one = a.one()?;
            ensure!(a.mul(u, ui) == one && a.mul(ui, u) == one, "u u^-1 != 1");
            ensure!(a.mul3(&self.x, u, &self.x) == self.x, "x u x != x");
        }
        Ok(())
    }

    pub fn to_json(&self, a: &Algebra) -> RegularityWitnessJson {
        RegularityWitnessJson {
            x: a.format_element(&self.x),
            y: a.format_element(&self.y),
            u: self.unit.as_ref().map(|(u, _)| a.format_element(u)),
            u_inv: self.unit.as_ref().map(|(_, ui)| a.format_element(ui)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityWitnessJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub u: Option<Vec<String>>,
    pub u_inv: Option<Vec<String>>,
}

/// Solves `sum_k c_k (w_k w) = w` (or `w w_k` when `left`) for every basis
/// vector `w` of `space`, with the solution `f = sum c_k w_k`.
fn one_sided_generator(a: &Algebra, space: &Subspace, left_identity: bool) -> Result<AlgElement> {
    let f = a.field();
    let basis = space.basis();
    let r = basis.len();
    if r == 0 {
        return Ok(a.zero());
    }
    let n = a.dim();
    let mut m = Matrix::zeros(f, r * n, r);
    let mut rhs = Vec::with_capacity(r * n);
    for (l, w) in basis.iter().enumerate() {
        for (k, wk) in basis.iter().enumerate() {
            let prod = if left_identity { a.mul(wk, w) } else { a.mul(w, wk) };
            for (i, c) in prod.into_iter().enumerate() {
                m.set(l * n + i, k, c);
            }
        }
        rhs.extend(w.iter().cloned());
    }
    let c = linalg::solve(f, &m, &rhs).ok_or_else(|| {
        AlgError::InfeasibleSystem("no idempotent generator exists (ambient algebra is not regular here)".into())
    })?;
    let g = linalg::combine(f, n, &c, basis);
    ensure!(a.is_idempotent(&g), "one-sided identity of an ideal is not idempotent");
    Ok(g)
}

/// `f` in `W` with `f w = w` for all `w` in the right ideal `W`, so `W = fA`.
pub fn right_generator_of(a: &Algebra, w: &Subspace) -> Result<AlgElement> {
    one_sided_generator(a, w, true)
}

/// `g` in `W` with `w g = w` for all `w` in the left ideal `W`, so `W = Ag`.
pub fn left_generator_of(a: &Algebra, w: &Subspace) -> Result<AlgElement> {
    one_sided_generator(a, w, false)
}

/// Idempotent generator of the right ideal `sum gens * A`.
pub fn idempotent_right_generator(a: &Algebra, gens: &[AlgElement]) -> Result<AlgElement> {
    right_generator_of(a, &a.generated_right_ideal(gens))
}

/// Idempotent generator of the left ideal `sum A * gens`.
pub fn idempotent_left_generator(a: &Algebra, gens: &[AlgElement]) -> Result<AlgElement> {
    left_generator_of(a, &a.generated_left_ideal(gens))
}

/// `y` with `x y x = x` and `y x y = y`, from the least solution of
/// `x z x = x`.
pub fn quasi_inverse(a: &Algebra, x: &[Elem]) -> Result<AlgElement> {
    let f = a.field();
    let n = a.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| a.mul(&a.mul_right_basis(x, j), x))
        .collect();
    let m = Matrix::from_cols(f, n, &cols);
    let z = linalg::solve(f, &m, x).ok_or(AlgError::NotRegularElement)?;
    let y = a.mul3(&z, x, &z);
    ensure!(a.mul3(x, &y, x) == x, "quasi-inverse fails x y x = x");
    ensure!(a.mul3(&y, x, &y) == y, "quasi-inverse fails y x y = y");
    Ok(y)
}

/// Idempotent `e` with `e x = x e = x` for all `x` in `xs`.
///
/// Built as `e = f + g - g f` from a right-ideal generator `f` of `xs`
/// and a left-ideal generator `g` of `xs ∪ {f}`. When `within` is given, the
/// computation happens inside the corner `ε A ε` and `e <= ε`.
pub fn corner_capture(a: &Algebra, xs: &[AlgElement], within: Option<&[Elem]>) -> Result<AlgElement> {
    if xs.iter().all(|x| a.is_zero(x)) {
        return Ok(a.zero());
    }
    let (right, left) = match within {
        None => (a.generated_right_ideal(xs), None),
        Some(eps) => {
            let vecs = xs
                .iter()
                .flat_map(|x| {
                    let mut v = vec![x.clone()];
                    for j in 0..a.dim() {
                        v.push(a.mul(&a.mul_right_basis(x, j), eps));
                    }
                    v
                })
                .collect();
            (a.span(vecs), Some(eps))
        }
    };
    let f_idem = right_generator_of(a, &right)?;
    let mut with_f = xs.to_vec();
    with_f.push(f_idem.clone());
    let left_space = match left {
        None => a.generated_left_ideal(&with_f),
        Some(eps) => {
            let vecs = with_f
                .iter()
                .flat_map(|x| {
                    let mut v = vec![x.clone()];
                    for i in 0..a.dim() {
                        v.push(a.mul(eps, &a.mul_left_basis(i, x)));
                    }
                    v
                })
                .collect();
            a.span(vecs)
        }
    };
    let g = left_generator_of(a, &left_space)?;
    let e = a.sub(&a.add(&f_idem, &g), &a.mul(&g, &f_idem));
    ensure!(a.is_idempotent(&e), "captured element is not idempotent");
    for x in xs {
        ensure!(a.mul3(&e, x, &e) == *x, "corner capture misses an element");
    }
    Ok(e)
}

/// Checks `q` is a unit of the quotient and lifts it through a splitting
/// `R = T ⊕ J`: returns `w = v + 1_R - 1_T` with `v ∈ T`, `π(v) = q`.
pub fn lift_unit_through_splitting(
    pres: &QuotientPresentation,
    t: &Subspace,
    u_bar: &[Elem],
) -> Result<AlgElement> {
    let r = &pres.ambient;
    let f = r.field();
    let one_r = r.one()?;
    pres.quotient.inverse(u_bar)?;
    // π|_T must be bijective
    if t.dim() != pres.quotient.dim() {
        return Err(AlgError::NotASplitting(format!(
            "dim T = {} but dim R/J = {}",
            t.dim(),
            pres.quotient.dim()
        )));
    }
    let images: Vec<Vector> = t.basis().iter().map(|v| pres.project(v)).collect();
    let pm = Matrix::from_cols(f, pres.quotient.dim(), &images);
    if linalg::rank(f, &pm) != t.dim() {
        return Err(AlgError::NotASplitting("π restricted to T is not injective".into()));
    }
    let emb = r
        .subalgebra(t)
        .map_err(|e| AlgError::NotASplitting(format!("T is not a subalgebra: {e}")))?;
    let one_t_local = emb
        .algebra
        .one()
        .map_err(|_| AlgError::NotASplitting("T has no identity".into()))?;
    let one_t = emb.to_ambient(&one_t_local);
    let c = linalg::solve(f, &pm, u_bar).expect("π|_T is onto");
    let v = linalg::combine(f, r.dim(), &c, t.basis());
    let w = r.add(&v, &r.sub(&one_r, &one_t));
    let w_inv = r.inverse(&w)?;
    ensure!(r.mul(&w_inv, &w) == one_r, "lifted unit has no inverse");
    ensure!(pres.project(&w) == u_bar, "lifted unit does not map to u_bar");
    Ok(w)
}

/// Unit-regular witness in a matricial algebra, certified by computing its
/// matrix units first.
pub fn unit_regular_witness(a: &Algebra, x: &[Elem]) -> Result<RegularityWitness> {
    let verdict = is_matricial(a)?;
    match verdict.units {
        Some(sys) => unit_regular_witness_with(a, &sys, x),
        None => Err(AlgError::NotMatricial(format!("{:?}", verdict.reason.expect("reason"))))
    }
}

/// Unit-regular witness using a given matricial certificate.
///
/// Per block, `x = P diag(I_r, 0) Q` from two row reductions, and
/// `u = Q^{-1} P^{-1}` satisfies `x u x = x`.
pub fn unit_regular_witness_with(a: &Algebra, sys: &MatrixUnitsSystem, x: &[Elem]) -> Result<RegularityWitness> {
    let f = a.field();
    if sys.span(a).dim() != a.dim() {
        return Err(AlgError::NotMatricial("matrix units do not span the algebra".into()));
    }
    let mut u = a.zero();
    let mut u_inv = a.zero();
    for (s, &n) in sys.sizes.iter().enumerate() {
        let e = &sys.units[s];
        let k = e[0][0].iter().position(|c| !f.is_zero(c)).expect("nonzero unit");
        let mut xm = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                // e_1i x e_j1 = x_ij e_11
                let c = a.mul3(&e[0][i], x, &e[j][0]);
                xm.set(i, j, f.div(&c[k], &e[0][0][k])?);
            }
        }
        let t = linalg::rref_with_transform(f, &xm);
        let w = t.reduced.transpose();
        let v = linalg::rref_with_transform(f, &w);
        let um = v.transform.expect("transform").transpose().mul(f, &t.transform.expect("transform"));
        let um_inv = linalg::inverse(f, &um).ok_or_else(|| AlgError::Invariant("block unit is singular".into()))?;
        for i in 0..n {
            for j in 0..n {
                linalg::axpy(f, &mut u, um.get(i, j), &e[i][j]);
                linalg::axpy(f, &mut u_inv, um_inv.get(i, j), &e[i][j]);
            }
        }
    }
    let y = quasi_inverse(a, x)?;
    let w = RegularityWitness { x: x.to_vec(), y, unit: Some((u, u_inv)) };
    w.verify(a)?;
    Ok(w)
}

/// The unit `u = [[y, I], [I, 0]]` of `M_{2n}` with `x^ u x^ = x^` for
/// `x^ = [[x, 0], [0, 0]]`, and its inverse `[[0, I], [I, -y]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedUnitWitness {
    pub e: Matrix,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub x_hat: Matrix,
}

pub fn embed_unit_regular_witness(f: &Field, x: &Matrix, y: &Matrix) -> Result<EmbeddedUnitWitness> {
    let n = x.rows;
    if x.cols != n || y.rows != n || y.cols != n {
        return Err(AlgError::DimensionMismatch("x and y must be square of equal size".into()));
    }
    if x.mul(f, y).mul(f, x) != *x {
        return Err(AlgError::PreconditionFailed("x y x != x".into()));
    }
    let m = 2 * n;
    let mut u = Matrix::zeros(f, m, m);
    let mut u_inv = Matrix::zeros(f, m, m);
    let mut x_hat = Matrix::zeros(f, m, m);
    for i in 0..n {
        for j in 0..n {
            u.set(i, j, y.get(i, j).clone());
            u_inv.set(n + i, n + j, f.neg(y.get(i, j)));
            x_hat.set(i, j, x.get(i, j).clone());
        }
        u.set(i, n + i, f.one());
        u.set(n + i, i, f.one());
        u_inv.set(i, n + i, f.one());
        u_inv.set(n + i, i, f.one());
    }
    let e = Matrix::identity(f, m);
    ensure!(u.mul(f, &u_inv) == e && u_inv.mul(f, &u) == e, "u u^-1 != I");
    ensure!(x_hat.mul(f, &u).mul(f, &x_hat) == x_hat, "x^ u x^ != x^");
    Ok(EmbeddedUnitWitness { e, u, u_inv, x_hat })
}
