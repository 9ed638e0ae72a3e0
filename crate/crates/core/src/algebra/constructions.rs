//! Standard algebras and ways of building new algebras from old ones.

use super::{AlgElement, Algebra};
use crate::error::{AlgError, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::poly::{self, Poly};

fn matrix_unit_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

/// `M_n(K)` with basis `e_{ij}` at index `i * n + j`.
pub fn matrix_algebra(f: &Field, n: usize) -> Algebra {
    let dim = n * n;
    let a = Algebra::from_products_trusted(f, dim, |x, y| {
        let (i, j) = (x / n, x % n);
        let (k, l) = (y / n, y % n);
        if j == k {
            unit_vec(f, dim, i * n + l)
        } else {
            zero_vec(f, dim)
        }
    });
    let labels = (0..dim).map(|x| matrix_unit_label(x / n, x % n, n)).collect();
    a.with_labels(labels).expect("label count")
}

/// Upper-triangular `n x n` matrices, basis `e_{ij}` for `i <= j`.
pub fn upper_triangular(f: &Field, n: usize) -> Algebra {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let dim = pairs.len();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
    let a = Algebra::from_products_trusted(f, dim, |x, y| {
        let (i, j) = pairs[x];
        let (k, l) = pairs[y];
        if j == k {
            unit_vec(f, dim, index(i, l).expect("upper triangular"))
        } else {
            zero_vec(f, dim)
        }
    });
    let labels = pairs.iter().map(|&(i, j)| matrix_unit_label(i, j, n)).collect();
    a.with_labels(labels).expect("label count")
}

/// `n`-dimensional algebra with zero multiplication.
pub fn zero_algebra(f: &Field, n: usize) -> Algebra {
    Algebra::from_products_trusted(f, n, |_, _| zero_vec(f, n))
}

/// `K[X]/(m)` for a monic `m` of positive degree, basis `1, X, ..., X^{d-1}`.
pub fn polynomial_quotient(f: &Field, m: &[Elem]) -> Result<Algebra> {
    let mut m = m.to_vec();
    poly::trim(f, &mut m);
    let d = poly::degree(&m).unwrap_or(0);
    if d == 0 || !f.is_one(&m[d]) {
        return Err(AlgError::PreconditionFailed(
            "modulus must be monic of positive degree".into(),
        ));
    }
    let a = Algebra::from_products_trusted(f, d, |i, j| {
        let mut prod: Poly = vec![f.zero(); i + j + 1];
        prod[i + j] = f.one();
        let mut r = poly::rem(f, &prod, &m);
        r.resize(d, f.zero());
        r
    });
    let labels = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        })
        .collect();
    a.with_labels(labels)
}

pub fn direct_sum(parts: &[Algebra]) -> Result<Algebra> {
    let f = parts
        .first()
        .map(|a| a.field().clone())
        .ok_or_else(|| AlgError::PreconditionFailed("empty direct sum".into()))?;
    for a in parts {
        if *a.field() != f {
            return Err(AlgError::FieldMismatch(format!("{} vs {}", a.field(), f)));
        }
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.dim();
            Some(o)
        })
        .collect();
    let dim: usize = parts.iter().map(|a| a.dim()).sum();
    let owner: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(s, a)| std::iter::repeat_n(s, a.dim()))
        .collect();
    let a = Algebra::from_products_trusted(&f, dim, |x, y| {
        let mut out = zero_vec(&f, dim);
        let (s, t) = (owner[x], owner[y]);
        if s == t {
            let o = offsets[s];
            for (k, c) in parts[s].basis_product(x - o, y - o) {
                out[o + k] = c.clone();
            }
        }
        out
    });
    let labels = parts
        .iter()
        .enumerate()
        .flat_map(|(s, p)| p.labels().iter().map(move |l| format!("{l}[{s}]")))
        .collect();
    a.with_labels(labels)
}

/// Same underlying space with the multiplication reversed.
pub fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim();
    let f = a.field().clone();
    let op = Algebra::from_products_trusted(&f, n, |i, j| {
        let mut v = zero_vec(&f, n);
        for (k, c) in a.basis_product(j, i) {
            v[*k] = c.clone();
        }
        v
    });
    op.with_labels(a.labels().to_vec()).expect("label count")
}

/// `A ⊗ B` on the product basis, `a_i ⊗ b_j` at index `i * dim B + j`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(AlgError::FieldMismatch(format!("{} vs {}", a.field(), b.field())));
    }
    let f = a.field().clone();
    let (na, nb) = (a.dim(), b.dim());
    let dim = na * nb;
    let t = Algebra::from_products_trusted(&f, dim, |x, y| {
        let (i, j) = (x / nb, x % nb);
        let (k, l) = (y / nb, y % nb);
        let mut out = zero_vec(&f, dim);
        for (p, c) in a.basis_product(i, k) {
            for (q, d) in b.basis_product(j, l) {
                out[p * nb + q] = f.add(&out[p * nb + q], &f.mul(c, d));
            }
        }
        out
    });
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    t.with_labels(labels)
}

/// Unitization `A ⊕ K·1`; the new identity is the last basis vector.
pub fn adjoin_identity(a: &Algebra) -> Algebra {
    let n = a.dim();
    let f = a.field().clone();
    let u = Algebra::from_products_trusted(&f, n + 1, |i, j| {
        let mut out = zero_vec(&f, n + 1);
        match (i == n, j == n) {
            (true, true) => out[n] = f.one(),
            (true, false) => out[j] = f.one(),
            (false, true) => out[i] = f.one(),
            (false, false) => {
                for (k, c) in a.basis_product(i, j) {
                    out[*k] = c.clone();
                }
            }
        }
        out
    });
    let mut labels = a.labels().to_vec();
    labels.push("1".to_string());
    u.with_labels(labels).expect("label count")
}

/// The same algebra in the basis given by the columns of `p` (old coordinates).
pub fn change_basis(a: &Algebra, p: &Matrix) -> Result<Algebra> {
    let f = a.field().clone();
    let n = a.dim();
    if p.rows != n || p.cols != n {
        return Err(AlgError::DimensionMismatch("change of basis must be square".into()));
    }
    let pinv = linalg::inverse(&f, p)
        .ok_or_else(|| AlgError::PreconditionFailed("change of basis is singular".into()))?;
    let cols: Vec<Vector> = (0..n).map(|j| p.col(j)).collect();
    Ok(Algebra::from_products_trusted(&f, n, |i, j| {
        pinv.mul_vec(&f, &a.mul(&cols[i], &cols[j]))
    }))
}

/// A subalgebra materialized on a basis of its carrier subspace: the RREF
/// basis, or a short integral one from [`Algebra::reduced_subalgebra`].
#[derive(Clone, Debug)]
pub struct Embedded {
    pub algebra: Algebra,
    pub space: Subspace,
    /// Custom basis and the matrix taking RREF coordinates to it.
    frame: Option<(Vec<Vector>, Matrix)>,
}

impl Embedded {
    pub fn basis(&self) -> &[Vector] {
        match &self.frame {
            Some((b, _)) => b,
            None => self.space.basis(),
        }
    }

    pub fn to_ambient(&self, x: &[Elem]) -> AlgElement {
        let f = self.algebra.field();
        linalg::combine(f, self.space.ambient, x, self.basis())
    }

    pub fn from_ambient(&self, v: &[Elem]) -> Option<AlgElement> {
        let f = self.algebra.field();
        let c = self.space.coords(f, v)?;
        Some(match &self.frame {
            Some((_, m)) => m.mul_vec(f, &c),
            None => c,
        })
    }
}

impl Algebra {
    /// Materializes a multiplicatively closed subspace as an algebra.
    pub fn subalgebra(&self, space: &Subspace) -> Result<Embedded> {
        let f = self.field().clone();
        let basis = space.basis().to_vec();
        let d = basis.len();
        let mut products = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                let xy = self.mul(x, y);
                let c = space.coords(&f, &xy).ok_or_else(|| {
                    AlgError::NotASubalgebra("a product of basis elements leaves the subspace".into())
                })?;
                products.push(c);
            }
        }
        let algebra = Algebra::from_products_trusted(&f, d, |i, j| products[i * d + j].clone());
        Ok(Embedded {
            algebra,
            space: space.clone(),
            frame: None,
        })
    }

    /// Like [`Algebra::subalgebra`], but over `Q` the basis is an LLL-reduced
    /// basis of the integer vectors in `space`. Structure constants then stay
    /// small, which matters for searches such as splitting `M_2(Q)`.
    pub fn reduced_subalgebra(&self, space: &Subspace) -> Result<Embedded> {
        let f = self.field().clone();
        let Some(basis) = linalg::reduced_integral_basis(&f, space) else {
            return self.subalgebra(space);
        };
        let d = basis.len();
        let cols: Vec<Vector> = basis
            .iter()
            .map(|v| space.coords(&f, v).expect("lattice vectors lie in the space"))
            .collect();
        let to_frame = linalg::inverse(&f, &Matrix::from_cols(&f, d, &cols))
            .ok_or_else(|| AlgError::Invariant("integral basis is not a basis".into()))?;
        let mut products = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                let c = space.coords(&f, &self.mul(x, y)).ok_or_else(|| {
                    AlgError::NotASubalgebra("a product of basis elements leaves the subspace".into())
                })?;
                products.push(to_frame.mul_vec(&f, &c));
            }
        }
        let algebra = Algebra::from_products_trusted(&f, d, |i, j| products[i * d + j].clone());
        Ok(Embedded {
            algebra,
            space: space.clone(),
            frame: Some((basis, to_frame)),
        })
    }

    /// The corner `eAe`, whose identity is `e`.
    pub fn corner(&self, e: &[Elem]) -> Result<Embedded> {
        if !self.is_idempotent(e) {
            return Err(AlgError::NotIdempotent);
        }
        let vecs = (0..self.dim())
            .map(|i| self.mul(&self.mul_left_basis_of(e, i), e))
            .collect();
        let space = self.span(vecs);
        self.subalgebra(&space)
    }

    /// `e b_i`
    fn mul_left_basis_of(&self, e: &[Elem], i: usize) -> AlgElement {
        self.mul_right_basis(e, i)
    }
}
