//! The characteristic-`p` extension of `L` by `FM(L)` that is not locally
//! semisimple, checked on a finite window.
//!
//! Over `K = F_p(t)` with `L = K(τ)`, `τ^p = t`, the operator `N` carries a
//! nilpotent `ν` on its block diagonal and first block superdiagonal, and
//! `t = τI + N` generates a copy of `L`. An idempotent `e ∈ J` centralizing
//! `t` with `y ∈ eJe` would have the block shape `diag(I_p, (b_ij), 0, ...)`
//! and satisfy `eN = Ne`; the resulting linear system in the `b_ij` has no
//! solution.

use serde::Serialize;

use crate::error::{ensure, AlgError, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, Matrix, Solution, Vector};

/// Which `ν` to use: the `p x p` Jordan block, or zero for the sanity run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NuChoice {
    Jordan,
    Zero,
}

/// An `ω x ω` block upper-bidiagonal operator with constant blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockBand {
    pub diag: Matrix,
    pub sup: Matrix,
}

impl BlockBand {
    pub fn block_size(&self) -> usize {
        self.diag.rows
    }

    /// The top-left `w x w` block window. Products of upper-triangular
    /// operators restrict exactly to products of their windows.
    pub fn window(&self, f: &Field, w: usize) -> Matrix {
        let b = self.block_size();
        let mut m = Matrix::zeros(f, w * b, w * b);
        for k in 0..w {
            put_block(&mut m, k, k, &self.diag);
            if k + 1 < w {
                put_block(&mut m, k, k + 1, &self.sup);
            }
        }
        m
    }
}

fn put_block(m: &mut Matrix, r: usize, c: usize, blk: &Matrix) {
    let b = blk.rows;
    for i in 0..b {
        for j in 0..b {
            m.set(r * b + i, c * b + j, blk.get(i, j).clone());
        }
    }
}

fn get_block(f: &Field, m: &Matrix, r: usize, c: usize, b: usize) -> Matrix {
    let mut out = Matrix::zeros(f, b, b);
    for i in 0..b {
        for j in 0..b {
            out.set(i, j, m.get(r * b + i, c * b + j).clone());
        }
    }
    out
}

fn mat_pow(f: &Field, m: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::identity(f, m.rows), |acc, _| acc.mul(f, m))
}

/// One side of a block equation: `Σ coeff · ν b_ij` and `Σ coeff · b_ij ν`
/// plus a constant block. Coefficients are integers mod `p`.
#[derive(Clone, Debug, PartialEq)]
struct BlockForm {
    constant: Matrix,
    /// `(i, j) -> (coefficient of ν b_ij, coefficient of b_ij ν)`
    terms: Vec<(i64, i64)>,
}

/// The alternating row combination of the block equations that eliminates
/// every unknown and leaves `-ν = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct AlternatingCertificate {
    /// `(r, c, sign)`: block equation `D_rc` enters with `sign`.
    pub combination: Vec<(usize, usize, i64)>,
    /// All unknown coefficients cancel mod `p`.
    pub unknowns_cancel: bool,
    /// The remaining constant block, which is `-ν`.
    pub residual: Vec<Vec<String>>,
    pub residual_is_minus_nu: bool,
}

impl AlternatingCertificate {
    pub fn holds(&self) -> bool {
        self.unknowns_cancel && self.residual_is_minus_nu
    }
}

#[derive(Clone, Debug)]
pub struct CounterexampleSystem {
    pub p: u64,
    pub n: usize,
    pub nu_choice: NuChoice,
    pub base: Field,
    pub field: Field,
    /// `α = t ∈ K`, embedded in `L`.
    pub alpha: Elem,
    pub tau: Elem,
    pub nu: Matrix,
    /// Number of blocks in each window.
    pub window_blocks: usize,
    pub n_band: BlockBand,
    pub t_band: BlockBand,
    pub y_window: Matrix,
    pub unknowns: usize,
    /// Rows of `eN - Ne = 0`, one per entry of each block `D_rc` with
    /// `0 <= r, c <= n + 1`; the constant part moved to `rhs`.
    pub system: Matrix,
    pub rhs: Vector,
}

#[derive(Clone, Debug)]
pub enum FeasibilityVerdict {
    /// `certificate · system = 0` and `certificate · rhs = 1`.
    Infeasible {
        certificate: Vector,
        alternating: Option<AlternatingCertificate>,
        descended_to_prime_field: bool,
    },
    /// A solution, assembled as the `(n + 2)`-block window of `e`.
    Feasible { e_window: Matrix, descended_to_prime_field: bool },
}

impl FeasibilityVerdict {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, FeasibilityVerdict::Infeasible { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleJson {
    pub p: u64,
    pub n: usize,
    pub nu: NuChoice,
    pub field: String,
    pub window_blocks: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub verdict: &'static str,
    pub descended_to_prime_field: bool,
    pub certificate_support: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternating: Option<AlternatingCertificate>,
}

impl CounterexampleSystem {
    pub fn report(&self, verdict: &FeasibilityVerdict) -> CounterexampleJson {
        let (name, descended, support, alternating) = match verdict {
            FeasibilityVerdict::Infeasible { certificate, alternating, descended_to_prime_field } => (
                "infeasible",
                *descended_to_prime_field,
                certificate.iter().filter(|c| !self.field.is_zero(c)).count(),
                alternating.clone(),
            ),
            FeasibilityVerdict::Feasible { descended_to_prime_field, .. } => {
                ("feasible", *descended_to_prime_field, 0, None)
            }
        };
        CounterexampleJson {
            p: self.p,
            n: self.n,
            nu: self.nu_choice,
            field: self.field.to_string(),
            window_blocks: self.window_blocks,
            unknowns: self.unknowns,
            equations: self.system.rows,
            verdict: name,
            descended_to_prime_field: descended,
            certificate_support: support,
            alternating,
        }
    }

    fn block_dim(&self) -> usize {
        self.p as usize
    }

    fn unknown_index(&self, i: usize, j: usize, a: usize, c: usize) -> usize {
        let b = self.block_dim();
        (((i - 1) * self.n + (j - 1)) * b + a) * b + c
    }

    /// Window checks: `t^p = α I`, `y² = y` with corner `I_p`, `ν^p = 0`,
    /// and `ν^{p-1} != 0`, `ν != 0` unless in the sanity run.
    pub fn check_window(&self) -> Result<()> {
        let l = &self.field;
        let b = self.block_dim();
        let w = self.window_blocks;
        let tw = self.t_band.window(l, w);
        let tp = mat_pow(l, &tw, self.p as usize);
        ensure!(tp == Matrix::identity(l, w * b).scale(l, &self.alpha), "t^p != α I on the window");
        ensure!(self.y_window.mul(l, &self.y_window) == self.y_window, "y^2 != y");
        ensure!(get_block(l, &self.y_window, 0, 0, b) == Matrix::identity(l, b), "y corner is not I_p");
        ensure!(mat_pow(l, &self.nu, self.p as usize).is_zero(l), "ν^p != 0");
        if self.nu_choice == NuChoice::Jordan {
            ensure!(!self.nu.is_zero(l), "ν = 0");
            ensure!(!mat_pow(l, &self.nu, self.p as usize - 1).is_zero(l), "ν^(p-1) = 0");
        }
        Ok(())
    }

    /// The affine block form of `D_rc = (eN - Ne)_rc`.
    fn block_form(&self, r: usize, c: usize) -> BlockForm {
        let l = &self.field;
        let b = self.block_dim();
        let n = self.n;
        let mut constant = Matrix::zeros(l, b, b);
        let mut terms = vec![(0i64, 0i64); n * n];
        let inner = |i: usize| (1..=n).contains(&i);
        // (eN)_rc = E_rc ν + E_{r,c-1} ν
        for cc in [Some(c), c.checked_sub(1)].into_iter().flatten() {
            if r == 0 && cc == 0 {
                constant = constant.add(l, &self.nu);
            } else if inner(r) && inner(cc) {
                terms[(r - 1) * n + cc - 1].1 += 1;
            }
        }
        // (Ne)_rc = ν E_rc + ν E_{r+1,c}
        for rr in [r, r + 1] {
            if rr == 0 && c == 0 {
                constant = constant.sub(l, &self.nu);
            } else if inner(rr) && inner(c) {
                terms[(rr - 1) * n + c - 1].0 -= 1;
            }
        }
        BlockForm { constant, terms }
    }

    fn assemble(&mut self) {
        let l = self.field.clone();
        let b = self.block_dim();
        let side = self.n + 2;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for r in 0..side {
            for c in 0..side {
                let form = self.block_form(r, c);
                for a in 0..b {
                    for cc in 0..b {
                        let mut row = linalg::zero_vec(&l, self.unknowns);
                        for (ij, &(left, right)) in form.terms.iter().enumerate() {
                            let (i, j) = (ij / self.n + 1, ij % self.n + 1);
                            // (ν B)[a][cc] = Σ_k ν[a][k] B[k][cc]
                            if left != 0 {
                                let s = l.from_i64(left);
                                for k in 0..b {
                                    let v = l.mul(&s, self.nu.get(a, k));
                                    let idx = self.unknown_index(i, j, k, cc);
                                    row[idx] = l.add(&row[idx], &v);
                                }
                            }
                            // (B ν)[a][cc] = Σ_k B[a][k] ν[k][cc]
                            if right != 0 {
                                let s = l.from_i64(right);
                                for k in 0..b {
                                    let v = l.mul(&s, self.nu.get(k, cc));
                                    let idx = self.unknown_index(i, j, a, k);
                                    row[idx] = l.add(&row[idx], &v);
                                }
                            }
                        }
                        rows.push(row);
                        rhs.push(l.neg(form.constant.get(a, cc)));
                    }
                }
            }
        }
        self.system = Matrix::from_rows(self.unknowns, rows);
        self.rhs = rhs;
    }

    /// The alternating sum over the top row, the last column and the inner
    /// square of block equations (valid for even `n`).
    pub fn alternating_certificate(&self) -> AlternatingCertificate {
        let l = &self.field;
        let n = self.n;
        let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
        let mut combination = Vec::new();
        for j in 1..=n {
            combination.push((0, j, sign(j)));
        }
        for i in 1..=n {
            combination.push((i, n + 1, -sign(i)));
        }
        for i in 1..=n {
            for j in 1..=n {
                combination.push((i, j, sign(i + j)));
            }
        }
        let b = self.block_dim();
        let mut constant = Matrix::zeros(l, b, b);
        let mut terms = vec![(0i64, 0i64); n * n];
        for &(r, c, s) in &combination {
            let form = self.block_form(r, c);
            constant = constant.add(l, &form.constant.scale(l, &l.from_i64(s)));
            for (acc, t) in terms.iter_mut().zip(&form.terms) {
                acc.0 += s * t.0;
                acc.1 += s * t.1;
            }
        }
        let p = self.p as i64;
        let unknowns_cancel = terms.iter().all(|&(x, y)| x.rem_euclid(p) == 0 && y.rem_euclid(p) == 0);
        let minus_nu = self.nu.scale(l, &l.from_i64(-1));
        AlternatingCertificate {
            residual: constant.row_vecs().iter().map(|row| row.iter().map(|x| l.format(x)).collect()).collect(),
            residual_is_minus_nu: constant == minus_nu,
            combination,
            unknowns_cancel,
        }
    }

    /// `diag(I_p, (b_ij), 0)` over `n + 2` blocks from a solution vector.
    fn e_window(&self, x: &[Elem]) -> Matrix {
        let l = &self.field;
        let b = self.block_dim();
        let side = self.n + 2;
        let mut m = Matrix::zeros(l, side * b, side * b);
        put_block(&mut m, 0, 0, &Matrix::identity(l, b));
        for i in 1..=self.n {
            for j in 1..=self.n {
                for a in 0..b {
                    for c in 0..b {
                        m.set(i * b + a, j * b + c, x[self.unknown_index(i, j, a, c)].clone());
                    }
                }
            }
        }
        m
    }
}

/// Builds the window data for prime `p ∈ {2, 3, 5}` and even `n ∈ [2, 8]`.
pub fn counterexample_build(p: u64, n: usize, nu_choice: NuChoice) -> Result<CounterexampleSystem> {
    if ![2, 3, 5].contains(&p) {
        return Err(AlgError::UnsupportedParameters(format!("p = {p}, expected 2, 3 or 5")));
    }
    if !(2..=8).contains(&n) || !n.is_multiple_of(2) {
        return Err(AlgError::UnsupportedParameters(format!("n = {n}, expected an even value in 2..=8")));
    }
    let base = Field::rational_functions(p, "t")?;
    let alpha_k = base.generator().ok_or_else(|| AlgError::Invariant("F_p(t) has a variable".into()))?;
    let mut minpoly = vec![base.zero(); p as usize + 1];
    minpoly[0] = base.neg(&alpha_k);
    minpoly[p as usize] = base.one();
    let l = Field::extension(&base, minpoly, "tau")?;
    let tau = l.generator().ok_or_else(|| AlgError::Invariant("extension has a generator".into()))?;
    let alpha = l.embed_base(&alpha_k);
    ensure!(l.pow_u64(&tau, p) == alpha, "τ^p != t");

    let b = p as usize;
    let mut nu = Matrix::zeros(&l, b, b);
    if nu_choice == NuChoice::Jordan {
        for i in 0..b - 1 {
            nu.set(i, i + 1, l.one());
        }
    }
    let n_band = BlockBand { diag: nu.clone(), sup: nu.clone() };
    let t_band = BlockBand {
        diag: Matrix::identity(&l, b).scale(&l, &tau).add(&l, &nu),
        sup: nu.clone(),
    };
    let window_blocks = n + b;
    let mut y_window = Matrix::zeros(&l, window_blocks * b, window_blocks * b);
    put_block(&mut y_window, 0, 0, &Matrix::identity(&l, b));
    let unknowns = n * n * b * b;
    let mut sys = CounterexampleSystem {
        p,
        n,
        nu_choice,
        base,
        field: l.clone(),
        alpha,
        tau,
        nu,
        window_blocks,
        n_band,
        t_band,
        y_window,
        unknowns,
        system: Matrix::zeros(&l, 0, unknowns),
        rhs: vec![],
    };
    sys.check_window()?;
    sys.assemble();
    Ok(sys)
}

/// `c` when `x` is the image of `c ∈ F_p`.
fn prime_value(l: &Field, p: u64, x: &Elem) -> Option<u64> {
    (0..p).find(|&c| l.from_i64(c as i64) == *x)
}

/// Solves the window system. When every coefficient lies in `F_p` the solve
/// runs over `F_p` (rank does not change under field extension) and the
/// answer is embedded back into `L` and re-checked there.
pub fn counterexample_verify(sys: &CounterexampleSystem) -> Result<FeasibilityVerdict> {
    let l = &sys.field;
    let fp = Field::prime(sys.p)?;
    let lower = |v: &[Elem]| -> Option<Vector> {
        v.iter().map(|x| prime_value(l, sys.p, x).map(|c| fp.from_i64(c as i64))).collect()
    };
    let raise = |v: &[Elem]| -> Vector { v.iter().map(|x| l.from_i64(fp.as_u64(x).unwrap_or(0) as i64)).collect() };
    let descended = sys
        .system
        .row_vecs()
        .iter()
        .map(|r| lower(r))
        .collect::<Option<Vec<_>>>()
        .zip(lower(&sys.rhs));
    let (solution, descended_flag) = match descended {
        Some((rows, rhs)) => {
            let a = Matrix::from_rows(sys.unknowns, rows);
            let sol = match linalg::solve_with_certificate(&fp, &a, &rhs) {
                Solution::Solved(x) => Solution::Solved(raise(&x)),
                Solution::Infeasible(y) => Solution::Infeasible(raise(&y)),
            };
            (sol, true)
        }
        None => (linalg::solve_with_certificate(l, &sys.system, &sys.rhs), false),
    };
    match solution {
        Solution::Infeasible(y) => {
            let ya = sys.system.transpose().mul_vec(l, &y);
            ensure!(linalg::is_zero_vec(l, &ya), "certificate y fails y A = 0");
            let yb = y.iter().zip(&sys.rhs).fold(l.zero(), |acc, (a, b)| l.add(&acc, &l.mul(a, b)));
            ensure!(l.is_one(&yb), "certificate y fails y b = 1");
            let alternating = (sys.nu_choice == NuChoice::Jordan).then(|| sys.alternating_certificate());
            Ok(FeasibilityVerdict::Infeasible { certificate: y, alternating, descended_to_prime_field: descended_flag })
        }
        Solution::Solved(x) => {
            ensure!(sys.system.mul_vec(l, &x) == sys.rhs, "solution fails the system");
            let e = sys.e_window(&x);
            let side = (sys.n + 2) * sys.block_dim();
            let nw = sys.n_band.window(l, sys.n + 2);
            // e vanishes beyond block n, so the (n + 2)-window products are exact
            ensure!(e.mul(l, &nw) == nw.mul(l, &e), "e N != N e on the window");
            ensure!(e.rows == side, "window size");
            Ok(FeasibilityVerdict::Feasible { e_window: e, descended_to_prime_field: descended_flag })
        }
    }
}
