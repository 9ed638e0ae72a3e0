//! Finite-dimensional associative algebras given by structure constants.
//!
//! Elements are coordinate vectors over the basis `b_0, ..., b_{n-1}`.
//! Algebras need not be unital; an identity is detected when present.

mod constructions;
mod extension;
mod json;

pub use constructions::*;
pub use extension::*;
pub use json::*;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgError, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::par;
use crate::poly::Poly;

/// Coordinates of an element with respect to an algebra's basis.
pub type AlgElement = Vector;

/// Sparse product of two basis vectors: `(k, lambda_k)` pairs, sorted by
/// `k`, with zero coefficients omitted.
pub type SparseVec = Vec<(usize, Elem)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `table[i * dim + j]` is `b_i b_j`.
    table: Vec<SparseVec>,
    identity: Option<Vector>,
    labels: Vec<String>,
    /// Integer copy of `table` over `Q`, for products without per-term
    /// normalization.
    int_table: Option<Arc<IntTable>>,
}

/// `table = rows / denom` with integer entries.
#[derive(Debug, PartialEq, Eq)]
struct IntTable {
    denom: BigInt,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl IntTable {
    fn build(f: &Field, table: &[SparseVec]) -> Option<IntTable> {
        f.as_rational(&f.one())?;
        let mut denom = BigInt::one();
        for (_, c) in table.iter().flatten() {
            denom = denom.lcm(f.as_rational(c)?.denom());
        }
        let rows = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(k, c)| {
                        let q = f.as_rational(c).expect("rational entry");
                        (*k, q.numer() * (&denom / q.denom()))
                    })
                    .collect()
            })
            .collect();
        Some(IntTable { denom, rows })
    }
}

/// Integer numerators and a common denominator of a rational vector.
fn clear_denominators(f: &Field, v: &[Elem]) -> (Vec<BigInt>, BigInt) {
    let mut d = BigInt::one();
    for c in v {
        let q = f.as_rational(c).expect("rational entry");
        if !q.denom().is_one() {
            d = d.lcm(q.denom());
        }
    }
    let nums = v
        .iter()
        .map(|c| {
            let q = f.as_rational(c).expect("rational entry");
            q.numer() * (&d / q.denom())
        })
        .collect();
    (nums, d)
}

fn sparse_from_dense(f: &Field, v: &[Elem]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("b{i}")).collect()
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, lambda)` entries meaning
    /// `b_i b_j += lambda b_k`, verifying associativity on every basis triple.
    pub fn from_structure_constants(
        field: &Field,
        dim: usize,
        entries: &[(usize, usize, usize, Elem)],
    ) -> Result<Algebra> {
        let mut dense = vec![zero_vec(field, dim); dim * dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(AlgError::DimensionMismatch(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if !field.contains(c) {
                return Err(AlgError::FieldMismatch(format!(
                    "structure constant {c:?} is not an element of {field}"
                )));
            }
            let slot = &mut dense[i * dim + j][*k];
            *slot = field.add(slot, c);
        }
        let table: Vec<SparseVec> = dense.iter().map(|v| sparse_from_dense(field, v)).collect();
        let int_table = IntTable::build(field, &table).map(Arc::new);
        let mut a = Algebra {
            field: field.clone(),
            dim,
            table,
            identity: None,
            labels: default_labels(dim),
            int_table,
        };
        a.check_associativity()?;
        a.identity = a.detect_identity();
        Ok(a)
    }

    /// Builds an algebra from a product rule known to be associative (for
    /// example a change of basis of an existing algebra).
    pub(crate) fn from_products_trusted<F>(field: &Field, dim: usize, product: F) -> Algebra
    where
        F: Fn(usize, usize) -> Vector,
    {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(sparse_from_dense(field, &product(i, j)));
            }
        }
        let int_table = IntTable::build(field, &table).map(Arc::new);
        let mut a = Algebra {
            field: field.clone(),
            dim,
            table,
            identity: None,
            labels: default_labels(dim),
            int_table,
        };
        a.identity = a.detect_identity();
        a
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(AlgError::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> Option<&Vector> {
        self.identity.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.identity.is_some()
    }

    /// The identity, or [`AlgError::NotUnital`].
    pub fn one(&self) -> Result<Vector> {
        self.identity.clone().ok_or(AlgError::NotUnital)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// All nonzero structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Elem)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// First basis triple (lexicographic) violating associativity.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.dim;
        let rows: Vec<usize> = (0..n).collect();
        let bad = par::par_map(&rows, |&i| {
            for j in 0..n {
                let w = self.densify(self.basis_product(i, j));
                for k in 0..n {
                    let lhs = self.mul_right_basis(&w, k);
                    let bjk = self.densify(self.basis_product(j, k));
                    let rhs = self.mul_left_basis(i, &bjk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        match bad.into_iter().flatten().next() {
            Some((i, j, k)) => Err(AlgError::NonAssociative(i, j, k)),
            None => Ok(()),
        }
    }

    fn detect_identity(&self) -> Option<Vector> {
        let n = self.dim;
        let f = &self.field;
        if n == 0 {
            return Some(Vec::new());
        }
        // unknown e: (e b_i)_k = sum_j e_j c_{ji}^k and (b_i e)_k = sum_j e_j c_{ij}^k
        let mut m = Matrix::zeros(f, 2 * n * n, n);
        let mut rhs = zero_vec(f, 2 * n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(j, i) {
                    m.set(i * n + k, j, c.clone());
                }
                for (k, c) in self.basis_product(i, j) {
                    m.set(n * n + i * n + k, j, c.clone());
                }
            }
            rhs[i * n + i] = f.one();
            rhs[n * n + i * n + i] = f.one();
        }
        linalg::solve(f, &m, &rhs)
    }

    fn densify(&self, s: &SparseVec) -> Vector {
        let mut v = zero_vec(&self.field, self.dim);
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    pub fn zero(&self) -> AlgElement {
        zero_vec(&self.field, self.dim)
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn basis(&self) -> Vec<AlgElement> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    pub fn contains(&self, a: &[Elem]) -> bool {
        a.len() == self.dim && a.iter().all(|c| self.field.contains(c))
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> AlgElement {
        if let Some(t) = &self.int_table {
            return self.mul_int(t, a, b);
        }
        let f = &self.field;
        let n = self.dim;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    fn mul_int(&self, t: &IntTable, a: &[Elem], b: &[Elem]) -> AlgElement {
        let f = &self.field;
        let n = self.dim;
        let (an, ad) = clear_denominators(f, a);
        let (bn, bd) = clear_denominators(f, b);
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &t.rows[i * n + j] {
                    out[k.to_owned()] += &xy * c;
                }
            }
        }
        let d = ad * bd * &t.denom;
        out.into_iter()
            .map(|num| Elem::Q(BigRational::new(num, d.clone())))
            .collect()
    }

    /// `b_i v`
    pub fn mul_left_basis(&self, i: usize, v: &[Elem]) -> AlgElement {
        let f = &self.field;
        let mut out = self.zero();
        for (j, y) in v.iter().enumerate() {
            if f.is_zero(y) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = f.add(&out[*k], &f.mul(y, c));
            }
        }
        out
    }

    /// `v b_j`
    pub fn mul_right_basis(&self, v: &[Elem], j: usize) -> AlgElement {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = f.add(&out[*k], &f.mul(x, c));
            }
        }
        out
    }

    pub fn mul3(&self, a: &[Elem], b: &[Elem], c: &[Elem]) -> AlgElement {
        self.mul(&self.mul(a, b), c)
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> AlgElement {
        linalg::vadd(&self.field, a, b)
    }

    pub fn sub(&self, a: &[Elem], b: &[Elem]) -> AlgElement {
        linalg::vsub(&self.field, a, b)
    }

    pub fn neg(&self, a: &[Elem]) -> AlgElement {
        linalg::vneg(&self.field, a)
    }

    pub fn scale(&self, c: &Elem, a: &[Elem]) -> AlgElement {
        linalg::vscale(&self.field, c, a)
    }

    pub fn is_zero(&self, a: &[Elem]) -> bool {
        is_zero_vec(&self.field, a)
    }

    pub fn commutator(&self, a: &[Elem], b: &[Elem]) -> AlgElement {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[Elem], k: usize) -> Result<AlgElement> {
        if k == 0 {
            return self.one();
        }
        let mut acc = a.to_vec();
        for _ in 1..k {
            acc = self.mul(&acc, a);
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self, e: &[Elem]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_nilpotent(&self, a: &[Elem]) -> bool {
        self.nilpotency_index(a).is_some()
    }

    /// Least `k >= 1` with `a^k = 0`, if any.
    pub fn nilpotency_index(&self, a: &[Elem]) -> Option<usize> {
        let mut acc = a.to_vec();
        for k in 1..=self.dim + 1 {
            if self.is_zero(&acc) {
                return Some(k);
            }
            acc = self.mul(&acc, a);
        }
        None
    }

    /// Matrix of `x -> a x`; column `j` holds `a b_j`.
    pub fn left_mul_matrix(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_right_basis(a, j)).collect();
        Matrix::from_cols(&self.field, self.dim, &cols)
    }

    /// Matrix of `x -> x a`; column `i` holds `b_i a`.
    pub fn right_mul_matrix(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|i| self.mul_left_basis(i, a)).collect();
        Matrix::from_cols(&self.field, self.dim, &cols)
    }

    /// Trace of left multiplication by each basis element.
    pub fn basis_traces(&self) -> Vector {
        let f = &self.field;
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(f.zero(), |acc, j| {
                    match self.basis_product(k, j).iter().find(|(idx, _)| *idx == j) {
                        Some((_, c)) => f.add(&acc, c),
                        None => acc,
                    }
                })
            })
            .collect()
    }

    pub fn span(&self, vectors: Vec<Vector>) -> Subspace {
        Subspace::span(&self.field, self.dim, vectors)
    }

    /// Smallest multiplicatively closed subspace containing `gens`.
    pub fn generated_subalgebra(&self, gens: &[AlgElement]) -> Subspace {
        let mut space = self.span(gens.to_vec());
        loop {
            let basis = space.basis().to_vec();
            let mut vecs = basis.clone();
            for x in &basis {
                for y in &basis {
                    vecs.push(self.mul(x, y));
                }
            }
            let next = self.span(vecs);
            if next.dim() == space.dim() {
                return space;
            }
            space = next;
        }
    }

    /// `span(gens ∪ gens·A)`: the right ideal generated by `gens`.
    pub fn generated_right_ideal(&self, gens: &[AlgElement]) -> Subspace {
        let mut vecs = gens.to_vec();
        for g in gens {
            for j in 0..self.dim {
                vecs.push(self.mul_right_basis(g, j));
            }
        }
        self.span(vecs)
    }

    /// `span(gens ∪ A·gens)`.
    pub fn generated_left_ideal(&self, gens: &[AlgElement]) -> Subspace {
        let mut vecs = gens.to_vec();
        for g in gens {
            for i in 0..self.dim {
                vecs.push(self.mul_left_basis(i, g));
            }
        }
        self.span(vecs)
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn generated_ideal(&self, gens: &[AlgElement]) -> Subspace {
        let mut space = self.span(gens.to_vec());
        loop {
            let basis = space.basis().to_vec();
            let mut vecs = basis.clone();
            for x in &basis {
                for i in 0..self.dim {
                    vecs.push(self.mul_left_basis(i, x));
                    vecs.push(self.mul_right_basis(x, i));
                }
            }
            let next = self.span(vecs);
            if next.dim() == space.dim() {
                return space;
            }
            space = next;
        }
    }

    pub fn is_subalgebra(&self, space: &Subspace) -> bool {
        let f = &self.field;
        space
            .basis()
            .iter()
            .all(|x| space.basis().iter().all(|y| space.contains(f, &self.mul(x, y))))
    }

    /// Checks that `space` is a two-sided ideal, reporting a violating product.
    pub fn check_ideal(&self, space: &Subspace) -> Result<()> {
        let f = &self.field;
        for (t, x) in space.basis().iter().enumerate() {
            for i in 0..self.dim {
                if !space.contains(f, &self.mul_left_basis(i, x)) {
                    return Err(AlgError::NotIdeal(format!("b{i} * (ideal basis {t}) leaves the subspace")));
                }
                if !space.contains(f, &self.mul_right_basis(x, i)) {
                    return Err(AlgError::NotIdeal(format!("(ideal basis {t}) * b{i} leaves the subspace")));
                }
            }
        }
        Ok(())
    }

    /// Solution space of `[x, b_i] = 0` for all `i`.
    pub fn center(&self) -> Subspace {
        let f = &self.field;
        let n = self.dim;
        let mut m = Matrix::zeros(f, n * n, n);
        for i in 0..n {
            for j in 0..n {
                // coefficient of x_j in [x, b_i] = sum_j x_j (b_j b_i - b_i b_j)
                let mut col = self.densify(self.basis_product(j, i));
                for (k, c) in self.basis_product(i, j) {
                    col[*k] = f.sub(&col[*k], c);
                }
                for (k, c) in col.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        m.set(i * n + k, j, c);
                    }
                }
            }
        }
        self.span(linalg::kernel(f, &m))
    }

    /// Monic polynomial `m` of least degree with `m(a) = 0`. For non-unital
    /// algebras the search is over polynomials without constant term.
    pub fn min_poly(&self, a: &[Elem]) -> Poly {
        self.min_poly_in(a, self.identity.as_deref())
    }

    /// Minimal polynomial of `a` inside a subalgebra whose identity is
    /// `unit` (for example a corner `eAe` with `unit = e`).
    pub fn min_poly_in(&self, a: &[Elem], unit: Option<&[Elem]>) -> Poly {
        let f = &self.field;
        let mut tracker = linalg::DependencyTracker::new(f);
        let (mut cur, offset) = match unit {
            Some(one) => (one.to_vec(), 0),
            None => (a.to_vec(), 1),
        };
        loop {
            if let Some(c) = tracker.push(&cur) {
                let mut out = vec![f.zero(); offset];
                out.extend(c.iter().map(|x| f.neg(x)));
                out.push(f.one());
                return out;
            }
            cur = self.mul(&cur, a);
        }
    }

    /// `p(a)` where the constant term is taken as a multiple of `unit`.
    pub fn eval_poly_in(&self, p: &[Elem], a: &[Elem], unit: &[Elem]) -> AlgElement {
        let f = &self.field;
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, a);
            axpy(f, &mut acc, c, unit);
        }
        acc
    }

    /// Evaluates a polynomial at `a` (constant term needs an identity).
    pub fn eval_poly(&self, p: &[Elem], a: &[Elem]) -> Result<AlgElement> {
        let f = &self.field;
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, a);
            if !f.is_zero(c) {
                let one = self.one()?;
                axpy(f, &mut acc, c, &one);
            }
        }
        Ok(acc)
    }

    /// Inverse of `a` in a unital algebra, via a linear solve of `a x = 1`.
    pub fn inverse(&self, a: &[Elem]) -> Result<AlgElement> {
        let one = self.one()?;
        let x = linalg::solve(&self.field, &self.left_mul_matrix(a), &one).ok_or(AlgError::NotAUnit)?;
        if self.mul(&x, a) != one {
            return Err(AlgError::NotAUnit);
        }
        Ok(x)
    }

    pub fn format_element(&self, a: &[Elem]) -> Vec<String> {
        a.iter().map(|c| self.field.format(c)).collect()
    }
}

#[cfg(test)]
mod tests;
