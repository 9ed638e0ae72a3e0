//! Exact linear algebra over a [`Field`]: dense matrices, reduced row echelon
//! form, kernels, linear solves and subspace arithmetic.

use crate::field::{Elem, Field};
use crate::poly::{self, Poly};

mod lattice;
mod modular;

pub use lattice::reduced_integral_basis;

pub type Vector = Vec<Elem>;

pub fn zero_vec(f: &Field, n: usize) -> Vector {
    vec![f.zero(); n]
}

pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(f, n);
    v[i] = f.one();
    v
}

pub fn is_zero_vec(f: &Field, v: &[Elem]) -> bool {
    v.iter().all(|c| f.is_zero(c))
}

pub fn vadd(f: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vsub(f: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vneg(f: &Field, a: &[Elem]) -> Vector {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn vscale(f: &Field, c: &Elem, a: &[Elem]) -> Vector {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * a`
pub fn axpy(f: &Field, acc: &mut [Elem], c: &Elem, a: &[Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !f.is_zero(y) {
            *x = f.add(x, &f.mul(c, y));
        }
    }
}

/// Linear combination `sum c_i v_i` of equal-length vectors.
pub fn combine(f: &Field, n: usize, coeffs: &[Elem], vecs: &[Vector]) -> Vector {
    let mut acc = zero_vec(f, n);
    for (c, v) in coeffs.iter().zip(vecs) {
        axpy(f, &mut acc, c, v);
    }
    acc
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(f: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity(f: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = f.one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Matrix {
        let r = rows.len();
        let data: Vec<Elem> = rows.into_iter().flat_map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            row
        }).collect();
        Matrix { rows: r, cols, data }
    }

    pub fn from_cols(f: &Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(f, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, f: &Field, b: &Matrix) -> Matrix {
        assert_eq!(self.cols, b.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(f, self.rows, b.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..b.cols {
                    let x = b.get(k, j);
                    if !f.is_zero(x) {
                        let idx = i * b.cols + j;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, x));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[Elem]) -> Vector {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| if f.is_zero(a) || f.is_zero(b) { acc } else { f.add(&acc, &f.mul(a, b)) })
            })
            .collect()
    }

    pub fn add(&self, f: &Field, b: &Matrix) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vadd(f, &self.data, &b.data) }
    }

    pub fn sub(&self, f: &Field, b: &Matrix) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vsub(f, &self.data, &b.data) }
    }

    pub fn scale(&self, f: &Field, c: &Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vscale(f, c, &self.data) }
    }

    pub fn is_zero(&self, f: &Field) -> bool {
        is_zero_vec(f, &self.data)
    }

    pub fn trace(&self, f: &Field) -> Elem {
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }
}

/// Reduced row echelon form `R = T * A` with the pivot column of each
/// nonzero row of `R`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Option<Matrix>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn rref_in_place(f: &Field, m: &mut Matrix, limit_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit_cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        for j in 0..m.cols {
            let idx = r * m.cols + j;
            if !f.is_zero(&m.data[idx]) {
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
        }
        let pivot_row: Vector = m.row(r).to_vec();
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            let neg = f.neg(&factor);
            let cols = m.cols;
            axpy(f, &mut m.data[i * cols..(i + 1) * cols], &neg, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Matrices with at least this many entries take the modular row selection.
const MODULAR_ENTRIES: usize = 64;

pub fn rref(f: &Field, a: &Matrix) -> Rref {
    if a.rows * a.cols >= MODULAR_ENTRIES {
        if let Some(r) = modular::rational_rref(f, a) {
            return r;
        }
    }
    let mut m = a.clone();
    let pivots = rref_in_place(f, &mut m, a.cols);
    Rref { reduced: m, pivots, transform: None }
}

/// RREF that also records the invertible `T` with `T * A = R`.
pub fn rref_with_transform(f: &Field, a: &Matrix) -> Rref {
    let n = a.rows;
    let mut aug = Matrix::zeros(f, n, a.cols + n);
    for i in 0..n {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols + i, f.one());
    }
    let pivots = rref_in_place(f, &mut aug, a.cols);
    let mut reduced = Matrix::zeros(f, n, a.cols);
    let mut transform = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..a.cols {
            reduced.set(i, j, aug.get(i, j).clone());
        }
        for j in 0..n {
            transform.set(i, j, aug.get(i, a.cols + j).clone());
        }
    }
    Rref { reduced, pivots, transform: Some(transform) }
}

pub fn rank(f: &Field, a: &Matrix) -> usize {
    rref(f, a).rank()
}

/// Basis of `{x : A x = 0}`.
pub fn kernel(f: &Field, a: &Matrix) -> Vec<Vector> {
    let r = rref(f, a);
    kernel_from_rref(f, &r, a.cols)
}

fn kernel_from_rref(f: &Field, r: &Rref, cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(f, cols);
        v[free] = f.one();
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = f.neg(r.reduced.get(row, free));
        }
        out.push(v);
    }
    out
}

/// A solution of `A x = b` with all free variables zero, or `None`.
pub fn solve(f: &Field, a: &Matrix, b: &[Elem]) -> Option<Vector> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let mut aug = Matrix::zeros(f, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let Rref { reduced: aug, pivots, .. } = rref(f, &aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = zero_vec(f, a.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(row, a.cols).clone();
    }
    Some(x)
}

/// Either a solution of `A x = b`, or a left certificate `y` with `y A = 0`
/// and `y b = 1` proving there is none.
pub enum Solution {
    Solved(Vector),
    Infeasible(Vector),
}

pub fn solve_with_certificate(f: &Field, a: &Matrix, b: &[Elem]) -> Solution {
    if let Some(x) = solve(f, a, b) {
        return Solution::Solved(x);
    }
    // y^T [A | b] = [0 | 1]
    let mut t = a.transpose();
    t.rows += 1;
    t.data.extend(b.iter().cloned());
    let mut rhs = zero_vec(f, a.cols + 1);
    rhs[a.cols] = f.one();
    let y = solve(f, &t, &rhs).expect("Fredholm alternative");
    Solution::Infeasible(y)
}

pub fn inverse(f: &Field, a: &Matrix) -> Option<Matrix> {
    if a.rows != a.cols {
        return None;
    }
    let r = rref_with_transform(f, a);
    if r.rank() < a.rows {
        return None;
    }
    r.transform
}

/// Characteristic polynomial `det(x I - A)` via reduction to Hessenberg form.
pub fn char_poly(f: &Field, a: &Matrix) -> Poly {
    let n = a.rows;
    assert_eq!(n, a.cols, "square matrix required");
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !f.is_zero(h.get(i, m - 1))) else {
            continue;
        };
        if i != m {
            for j in 0..n {
                h.data.swap(i * n + j, m * n + j);
            }
            for j in 0..n {
                h.data.swap(j * n + i, j * n + m);
            }
        }
        let inv = f.inv(h.get(m, m - 1)).expect("nonzero");
        for i in m + 1..n {
            let u = f.mul(h.get(i, m - 1), &inv);
            if f.is_zero(&u) {
                continue;
            }
            for j in 0..n {
                let v = f.sub(h.get(i, j), &f.mul(&u, h.get(m, j)));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = f.add(h.get(j, m), &f.mul(&u, h.get(j, i)));
                h.set(j, m, v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Poly> = vec![poly::constant(f, f.one())];
    for k in 0..n {
        let lin = vec![f.neg(h.get(k, k)), f.one()];
        let mut pk = poly::mul(f, &lin, &ps[k]);
        let mut prod = f.one();
        for i in (0..k).rev() {
            prod = f.mul(&prod, h.get(i + 1, i));
            let c = f.mul(h.get(i, k), &prod);
            if !f.is_zero(&c) {
                pk = poly::sub(f, &pk, &poly::scale(f, &ps[i], &c));
            }
        }
        ps.push(pk);
    }
    ps.pop().expect("nonempty")
}

/// Subspace of `F^n` stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        Subspace::span(f, ambient, (0..ambient).map(|i| unit_vec(f, ambient, i)).collect())
    }

    pub fn span(f: &Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(ambient, vectors);
        let r = rref(f, &m);
        let k = r.rank();
        let basis = r.reduced.row_vecs().into_iter().take(k).collect();
        Subspace { ambient, basis, pivots: r.pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace (pivot coordinates cleared).
    pub fn reduce(&self, f: &Field, v: &[Elem]) -> Vector {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !f.is_zero(&c) {
                axpy(f, &mut out, &f.neg(&c), b);
            }
        }
        out
    }

    pub fn contains(&self, f: &Field, v: &[Elem]) -> bool {
        is_zero_vec(f, &self.reduce(f, v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, f: &Field, v: &[Elem]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = combine(f, self.ambient, &c, &self.basis);
        if back == *v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, f: &Field, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(f, v))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(f, self.ambient, v)
    }

    pub fn intersect(&self, f: &Field, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // a in self, b in other with a - b = 0
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| vneg(f, v)));
        let m = Matrix::from_cols(f, self.ambient, &cols);
        let ker = kernel(f, &m);
        let k = self.dim();
        let vecs = ker
            .iter()
            .map(|x| combine(f, self.ambient, &x[..k], &self.basis))
            .collect();
        Subspace::span(f, self.ambient, vecs)
    }

    /// Standard unit vectors on the non-pivot coordinates; together with the
    /// subspace they span everything.
    pub fn complement(&self, f: &Field) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&i| !is_pivot[i])
            .map(|i| unit_vec(f, self.ambient, i))
            .collect()
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self == other
    }
}

/// Incremental echelon basis that remembers how each stored row was formed
/// from the vectors pushed so far; reports the first linear dependency.
pub struct DependencyTracker {
    field: Field,
    rows: Vec<(usize, Vector, Vector)>,
    pushed: usize,
}

impl DependencyTracker {
    pub fn new(f: &Field) -> DependencyTracker {
        DependencyTracker { field: f.clone(), rows: Vec::new(), pushed: 0 }
    }

    pub fn len(&self) -> usize {
        self.pushed
    }

    pub fn is_empty(&self) -> bool {
        self.pushed == 0
    }

    /// Adds `v`; if it depends on earlier vectors returns `c` with
    /// `v = sum_i c_i v_i` over the previously pushed (independent) vectors.
    pub fn push(&mut self, v: &[Elem]) -> Option<Vector> {
        let f = self.field.clone();
        let k = self.pushed;
        let mut r = v.to_vec();
        // combo expresses r as (new vector) - sum(stored combos)
        let mut combo = zero_vec(&f, k + 1);
        combo[k] = f.one();
        for (p, row, rc) in &self.rows {
            let c = r[*p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            axpy(&f, &mut r, &neg, row);
            axpy(&f, &mut combo[..rc.len()], &neg, rc);
        }
        match r.iter().position(|c| !f.is_zero(c)) {
            None => {
                // 0 = v - sum, so v = -combo[..k]
                Some(combo[..k].iter().map(|c| f.neg(c)).collect())
            }
            Some(p) => {
                let inv = f.inv(&r[p]).expect("nonzero");
                let r = vscale(&f, &inv, &r);
                let combo = vscale(&f, &inv, &combo);
                self.rows.push((p, r, combo));
                self.pushed += 1;
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows[0].len(),
            rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect(),
        )
    }

    #[test]
    fn transform_reproduces_rref() {
        let f = Field::rationals();
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 7], &[0, 1, 1]]);
        let r = rref_with_transform(&f, &a);
        assert_eq!(r.transform.as_ref().unwrap().mul(&f, &a), r.reduced);
        assert_eq!(r.rank(), 3);
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(inv.mul(&f, &a), Matrix::identity(&f, 3));
    }

    #[test]
    fn char_poly_matches_cayley_hamilton() {
        let f = Field::prime(7).unwrap();
        let a = m(&f, &[&[1, 2, 0, 3], &[0, 0, 5, 1], &[4, 1, 2, 0], &[0, 6, 1, 1]]);
        let cp = char_poly(&f, &a);
        assert_eq!(cp.len(), 5);
        let mut acc = Matrix::zeros(&f, 4, 4);
        let mut pow = Matrix::identity(&f, 4);
        for c in &cp {
            acc = acc.add(&f, &pow.scale(&f, c));
            pow = pow.mul(&f, &a);
        }
        assert!(acc.is_zero(&f));
        assert_eq!(f.neg(&cp[3]), a.trace(&f));
    }

    #[test]
    fn infeasible_systems_carry_certificates() {
        let f = Field::rationals();
        let a = m(&f, &[&[1, 1], &[2, 2]]);
        let b = vec![f.one(), f.one()];
        match solve_with_certificate(&f, &a, &b) {
            Solution::Solved(_) => panic!("inconsistent system solved"),
            Solution::Infeasible(y) => {
                assert!(is_zero_vec(&f, &a.transpose().mul_vec(&f, &y)));
                let yb = y.iter().zip(&b).fold(f.zero(), |s, (p, q)| f.add(&s, &f.mul(p, q)));
                assert!(f.is_one(&yb));
            }
        }
    }

    #[test]
    fn subspace_dimension_formula() {
        let f = Field::prime(3).unwrap();
        let u = Subspace::span(&f, 4, m(&f, &[&[1, 0, 1, 0], &[0, 1, 0, 0]]).row_vecs());
        let w = Subspace::span(&f, 4, m(&f, &[&[1, 1, 1, 0], &[0, 0, 0, 1]]).row_vecs());
        let s = u.sum(&f, &w);
        let i = u.intersect(&f, &w);
        assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&f, &[f.one(), f.one(), f.one(), f.zero()]));
        assert_eq!(u.complement(&f).len(), 2);
    }
}
