//! Idempotents of `J` centralizing a separable subalgebra `T`.
//!
//! The `T`-`R` sub-bimodule `V = sum T y R` is a direct summand of `R` when
//! `T^op ⊗ T` is semisimple. A bimodule projection `P: R -> V` is right
//! `R`-linear, so `P = L_f` with `f = P(1)`; left `T`-linearity makes `f`
//! commute with `T`. The left-handed run on `Y ∪ {f}` gives `g`, and
//! `e = f + g - g f` captures `Y` and centralizes `T`.

use serde::Serialize;

use crate::algebra::{opposite, tensor_product, AlgElement, Algebra};
use crate::error::{ensure, AlgError, Result};
use crate::linalg::{self, Matrix, Subspace};
use crate::structure::radical;

/// Evidence that `T^op ⊗ T` is semisimple.
#[derive(Clone, Debug, Serialize)]
pub struct Separability {
    pub t_dim: usize,
    pub tensor_dim: usize,
    /// `None` when the radical was not computed because the field is perfect.
    pub tensor_radical_dim: Option<usize>,
    pub perfect_field: bool,
}

impl Separability {
    pub fn separable(&self) -> bool {
        self.tensor_radical_dim.map_or(self.perfect_field, |d| d == 0)
    }
}

/// Largest `T^op ⊗ T` whose radical is computed explicitly even when the
/// field is perfect.
const EXPLICIT_TENSOR_DIM: usize = 64;

/// Computes `rad(T^op ⊗ T)`, skipping the computation only over perfect
/// fields for large `T`, where separability of semisimple algebras is
/// automatic.
pub fn separability_check(t: &Algebra) -> Result<Separability> {
    let f = t.field();
    let perfect = f.characteristic() == 0 || f.is_finite();
    let tensor_dim = t.dim() * t.dim();
    let tensor_radical_dim = if tensor_dim <= EXPLICIT_TENSOR_DIM || !perfect {
        let env = tensor_product(&opposite(t), t)?;
        Some(radical(&env)?.dim())
    } else {
        None
    };
    Ok(Separability { t_dim: t.dim(), tensor_dim, tensor_radical_dim, perfect_field: perfect })
}

#[derive(Clone, Debug)]
pub struct TensorSplitTrace {
    pub separability: Separability,
    /// `dim T^op ⊗ R`
    pub enveloping_dim: usize,
    pub v_space: Subspace,
    /// `P = L_f` in the standard basis of `R`.
    pub projection: Matrix,
    pub kernel: Subspace,
    pub v_left: Subspace,
    pub f: AlgElement,
    pub g: AlgElement,
    pub e: AlgElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorSplitJson {
    pub separability: Separability,
    pub enveloping_dim: usize,
    pub v_dim: usize,
    pub kernel_dim: usize,
    pub v_left_dim: usize,
    pub f: Vec<String>,
    pub g: Vec<String>,
    pub e: Vec<String>,
}

impl TensorSplitTrace {
    pub fn to_json(&self, r: &Algebra) -> TensorSplitJson {
        TensorSplitJson {
            separability: self.separability.clone(),
            enveloping_dim: self.enveloping_dim,
            v_dim: self.v_space.dim(),
            kernel_dim: self.kernel.dim(),
            v_left_dim: self.v_left.dim(),
            f: r.format_element(&self.f),
            g: r.format_element(&self.g),
            e: r.format_element(&self.e),
        }
    }

    /// Re-checks the projection and the idempotent against `J`, `T` and `Y`.
    pub fn verify(&self, r: &Algebra, j: &Subspace, t: &Subspace, ys: &[AlgElement]) -> Result<()> {
        let k = r.field();
        let p = &self.projection;
        ensure!(p.mul(k, p) == *p, "P^2 != P");
        let image = r.span((0..r.dim()).map(|c| p.col(c)).collect());
        ensure!(image.equals(&self.v_space), "image P != V");
        ensure!(self.kernel.dim() + self.v_space.dim() == r.dim(), "ker P ⊕ V != R");
        for i in 0..r.dim() {
            let b = r.basis_element(i);
            let pb = p.mul_vec(k, &b);
            for tb in t.basis() {
                ensure!(p.mul_vec(k, &r.mul(tb, &b)) == r.mul(tb, &pb), "P is not left T-linear");
            }
            for l in 0..r.dim() {
                let s = r.basis_element(l);
                ensure!(p.mul_vec(k, &r.mul(&b, &s)) == r.mul(&pb, &s), "P is not right R-linear");
            }
        }
        for tb in t.basis() {
            ensure!(r.is_zero(&r.commutator(&self.f, tb)), "f does not centralize T");
        }
        check_idempotent(r, j, t, ys, &self.e)
    }
}

/// `e² = e ∈ J`, `[e, T] = 0` and `e y e = y` for `y ∈ Y`.
pub(crate) fn check_idempotent(r: &Algebra, j: &Subspace, t: &Subspace, ys: &[AlgElement], e: &AlgElement) -> Result<()> {
    ensure!(r.is_idempotent(e), "e^2 != e");
    ensure!(j.contains(r.field(), e), "e outside J");
    for tb in t.basis() {
        ensure!(r.is_zero(&r.commutator(e, tb)), "e does not centralize T");
    }
    for y in ys {
        ensure!(r.mul3(e, y, e) == *y, "e y e != y");
    }
    Ok(())
}

/// The least `z` in `space` with `z v = v` (or `v z = v` when `left` is
/// false) for every basis vector `v` of `space`, and `[z, t] = 0` for `t` in
/// `t_basis`.
pub(crate) fn centralizing_unit_of(
    r: &Algebra,
    space: &Subspace,
    t_basis: &[AlgElement],
    acts_on_left: bool,
) -> Result<AlgElement> {
    let k = r.field();
    let n = r.dim();
    let basis = space.basis();
    let d = basis.len();
    if d == 0 {
        return Ok(r.zero());
    }
    let rows = (d + t_basis.len()) * n;
    let mut m = Matrix::zeros(k, rows, d);
    let mut rhs = Vec::with_capacity(rows);
    for (l, v) in basis.iter().enumerate() {
        for (c, w) in basis.iter().enumerate() {
            let prod = if acts_on_left { r.mul(w, v) } else { r.mul(v, w) };
            for (i, x) in prod.into_iter().enumerate() {
                m.set(l * n + i, c, x);
            }
        }
        rhs.extend(v.iter().cloned());
    }
    for (a, t) in t_basis.iter().enumerate() {
        let off = (d + a) * n;
        for (c, w) in basis.iter().enumerate() {
            for (i, x) in r.commutator(w, t).into_iter().enumerate() {
                m.set(off + i, c, x);
            }
        }
        rhs.extend(linalg::zero_vec(k, n));
    }
    let c = linalg::solve(k, &m, &rhs).ok_or_else(|| {
        AlgError::InfeasibleSystem("no T-centralizing one-sided identity of the bimodule".into())
    })?;
    Ok(linalg::combine(k, n, &c, basis))
}

/// Runs the equivariant splitting for `T ⊆ R` with `1_T = 1_R`.
pub fn t_stable_idempotent(
    r: &Algebra,
    j: &Subspace,
    t: &Subspace,
    ys: &[AlgElement],
) -> Result<(AlgElement, TensorSplitTrace)> {
    let k = r.field();
    let one = r.one().map_err(|_| AlgError::PreconditionFailed("R has no identity".into()))?;
    let t_alg = r.subalgebra(t)?;
    let one_t = t_alg
        .algebra
        .one()
        .map_err(|_| AlgError::PreconditionFailed("T has no identity".into()))?;
    if t_alg.to_ambient(&one_t) != one {
        return Err(AlgError::PreconditionFailed("1_T != 1_R".into()));
    }
    for y in ys {
        if !j.contains(k, y) {
            return Err(AlgError::PreconditionFailed("an element of Y lies outside J".into()));
        }
    }
    let separability = separability_check(&t_alg.algebra)?;
    if !separability.separable() {
        return Err(AlgError::NotSeparable);
    }
    let t_basis = t.basis().to_vec();
    let r_basis = r.basis();

    let mut vvecs = Vec::new();
    for y in ys {
        for tb in &t_basis {
            let ty = r.mul(tb, y);
            vvecs.extend(r_basis.iter().map(|b| r.mul(&ty, b)));
        }
    }
    let v_space = r.span(vvecs);
    let f = centralizing_unit_of(r, &v_space, &t_basis, true)?;
    let projection = r.left_mul_matrix(&f);
    let kernel = r.span(linalg::kernel(k, &projection));

    let mut zs = ys.to_vec();
    zs.push(f.clone());
    let mut lvecs = Vec::new();
    for z in &zs {
        for b in &r_basis {
            let bz = r.mul(b, z);
            lvecs.extend(t_basis.iter().map(|tb| r.mul(&bz, tb)));
        }
    }
    let v_left = r.span(lvecs);
    let g = centralizing_unit_of(r, &v_left, &t_basis, false)?;
    let e = r.sub(&r.add(&f, &g), &r.mul(&g, &f));
    let trace = TensorSplitTrace {
        separability,
        enveloping_dim: t.dim() * r.dim(),
        v_space,
        projection,
        kernel,
        v_left,
        f,
        g,
        e: e.clone(),
    };
    trace.verify(r, j, t, ys)?;
    Ok((e, trace))
}
