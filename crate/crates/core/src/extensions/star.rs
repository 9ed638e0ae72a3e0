//! Deciding whether a finite `Y ⊆ J` sits in `eJe` for an idempotent
//! `e ∈ J` centralizing `T`.
//!
//! Routes are tried in order: matrix units of `T`, the separable splitting
//! (with a corner reduction when `1_T != 1_R`), and finally a direct linear
//! search. The search is complete: the affine space of `z ∈ J` with
//! `[z, T] = 0` and `z y = y = y z` contains an idempotent whenever it is
//! nonempty, namely the Fitting projection of any of its points onto the
//! eigenvalue `1`.

use serde::Serialize;

use super::centralize::centralizing_idempotent;
use super::counterexample::{counterexample_build, counterexample_verify, FeasibilityVerdict, NuChoice};
use super::tensor::{check_idempotent, separability_check, t_stable_idempotent};
use super::Complement;
use crate::algebra::{AlgElement, Algebra};
use crate::error::{ensure, AlgError, Result};
use crate::linalg::{self, Matrix, Solution, Subspace};
use crate::poly;
use crate::regular::corner_capture;
use crate::structure::{is_matricial, radical};

/// Input: an algebra instance, or the window model of the counterexample.
#[derive(Clone, Debug)]
pub enum StarProblem {
    Algebra { r: Algebra, j: Subspace, t: Subspace, y: Vec<AlgElement> },
    Counterexample { p: u64, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarRoute {
    Matricial,
    Tensor,
    CornerTensor,
    LinearSearch,
    Counterexample,
}

/// Why no idempotent exists, with a left certificate of the linear system.
#[derive(Clone, Debug, Serialize)]
pub struct FailureReport {
    pub route: StarRoute,
    pub reason: String,
    pub unknowns: usize,
    pub equations: usize,
    /// `c` with `c A = 0` and `c b = 1`.
    pub certificate: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum StarOutcome {
    Found { e: AlgElement, route: StarRoute },
    Failed(FailureReport),
}

impl StarOutcome {
    pub fn route(&self) -> StarRoute {
        match self {
            StarOutcome::Found { route, .. } => *route,
            StarOutcome::Failed(f) => f.route,
        }
    }
}

/// Runs the route ladder. Errors signal malformed input only; a negative
/// answer is a [`StarOutcome::Failed`].
pub fn condition_star_check(problem: &StarProblem) -> Result<StarOutcome> {
    match problem {
        StarProblem::Counterexample { p, n } => counterexample_route(*p, *n),
        StarProblem::Algebra { r, j, t, y } => algebra_route(r, j, t, y),
    }
}

fn counterexample_route(p: u64, n: usize) -> Result<StarOutcome> {
    let sys = counterexample_build(p, n, NuChoice::Jordan)?;
    match counterexample_verify(&sys)? {
        FeasibilityVerdict::Infeasible { certificate, .. } => Ok(StarOutcome::Failed(FailureReport {
            route: StarRoute::Counterexample,
            reason: "eN = Ne with corner I_p forces ν = 0".into(),
            unknowns: sys.unknowns,
            equations: sys.system.rows,
            certificate: certificate.iter().map(|c| sys.field.format(c)).collect(),
        })),
        FeasibilityVerdict::Feasible { .. } => {
            Err(AlgError::Invariant("the window system with ν != 0 has a solution".into()))
        }
    }
}

fn algebra_route(r: &Algebra, j: &Subspace, t: &Subspace, ys: &[AlgElement]) -> Result<StarOutcome> {
    let k = r.field();
    let one = r.one().map_err(|_| AlgError::PreconditionFailed("R has no identity".into()))?;
    Complement::new(k, t, j)?;
    for y in ys {
        if !j.contains(k, y) {
            return Err(AlgError::PreconditionFailed("an element of Y lies outside J".into()));
        }
    }
    let t_alg = r.reduced_subalgebra(t)?;
    if t.dim() > 0 && (!t_alg.algebra.is_unital() || radical(&t_alg.algebra)?.dim() != 0) {
        return Err(AlgError::PreconditionFailed("T is not semisimple".into()));
    }
    if is_matricial(&t_alg.algebra)?.is_matricial() {
        let (e, _) = centralizing_idempotent(r, j, t, ys)?;
        return Ok(StarOutcome::Found { e, route: StarRoute::Matricial });
    }
    if separability_check(&t_alg.algebra)?.separable() {
        let one_t = t_alg.to_ambient(&t_alg.algebra.one()?);
        if one_t == one {
            let (e, _) = t_stable_idempotent(r, j, t, ys)?;
            return Ok(StarOutcome::Found { e, route: StarRoute::Tensor });
        }
        let e = corner_tensor(r, j, t, ys, &one, &one_t)?;
        return Ok(StarOutcome::Found { e, route: StarRoute::CornerTensor });
    }
    linear_search(r, j, t, ys)
}

/// With `p = 1_T`: capture `Y ∪ {1 - p}` by `g ∈ J`, so `g = pg + 1 - p`;
/// split `pg` inside `pRp`, where `1_T` is the identity, and add `1 - p`.
fn corner_tensor(
    r: &Algebra,
    j: &Subspace,
    t: &Subspace,
    ys: &[AlgElement],
    one: &AlgElement,
    p: &AlgElement,
) -> Result<AlgElement> {
    let k = r.field();
    let one_minus_p = r.sub(one, p);
    let mut captured = ys.to_vec();
    captured.push(one_minus_p.clone());
    let g = corner_capture(r, &captured, None)?;
    let pg = r.mul(p, &g);
    ensure!(r.mul(&pg, p) == pg, "p g != p g p");
    let corner = r.corner(p)?;
    let local = |x: &AlgElement| {
        corner
            .from_ambient(x)
            .ok_or_else(|| AlgError::Invariant("element outside the corner pRp".into()))
    };
    let c = &corner.algebra;
    let t_local = c.span(t.basis().iter().map(local).collect::<Result<_>>()?);
    let j_local = c.span(
        j.basis()
            .iter()
            .map(|x| local(&r.mul3(p, x, p)))
            .collect::<Result<_>>()?,
    );
    let (h, _) = t_stable_idempotent(c, &j_local, &t_local, &[local(&pg)?])?;
    let e = r.add(&corner.to_ambient(&h), &one_minus_p);
    check_idempotent(r, j, t, ys, &e)?;
    ensure!(j.contains(k, &e), "e outside J");
    Ok(e)
}

/// Solves `z ∈ J`, `[z, t] = 0`, `z y = y`, `y z = y` and turns a solution
/// into an idempotent.
fn linear_search(r: &Algebra, j: &Subspace, t: &Subspace, ys: &[AlgElement]) -> Result<StarOutcome> {
    let k = r.field();
    let n = r.dim();
    let jb = j.basis();
    let blocks = t.dim() + 2 * ys.len();
    let mut m = Matrix::zeros(k, blocks * n, jb.len());
    let mut rhs = Vec::with_capacity(blocks * n);
    let mut row = 0;
    let mut push = |m: &mut Matrix, f: &dyn Fn(&AlgElement) -> AlgElement, target: Vec<crate::Elem>| {
        for (c, z) in jb.iter().enumerate() {
            for (i, x) in f(z).into_iter().enumerate() {
                m.set(row + i, c, x);
            }
        }
        row += n;
        rhs.extend(target);
    };
    for tb in t.basis() {
        push(&mut m, &|z| r.commutator(z, tb), linalg::zero_vec(k, n));
    }
    for y in ys {
        push(&mut m, &|z| r.mul(z, y), y.clone());
        push(&mut m, &|z| r.mul(y, z), y.clone());
    }
    match linalg::solve_with_certificate(k, &m, &rhs) {
        Solution::Infeasible(c) => Ok(StarOutcome::Failed(FailureReport {
            route: StarRoute::LinearSearch,
            reason: "no element of J centralizes T and fixes Y on both sides".into(),
            unknowns: jb.len(),
            equations: m.rows,
            certificate: c.iter().map(|x| k.format(x)).collect(),
        })),
        Solution::Solved(c) => {
            let z = linalg::combine(k, n, &c, jb);
            let e = fitting_idempotent(r, &z)?;
            check_idempotent(r, j, t, ys, &e)?;
            Ok(StarOutcome::Found { e, route: StarRoute::LinearSearch })
        }
    }
}

/// The idempotent `P(z)` projecting onto the generalized `1`-eigenspace of
/// `z`, with `P` a polynomial without constant term.
fn fitting_idempotent(r: &Algebra, z: &AlgElement) -> Result<AlgElement> {
    let k = r.field();
    let m = r.min_poly_in(z, None);
    let x_minus_one = vec![k.neg(&k.one()), k.one()];
    let mut rest = m.clone();
    let mut power = vec![k.one()];
    loop {
        let (q, rem) = poly::divrem(k, &rest, &x_minus_one);
        if !rem.iter().all(|c| k.is_zero(c)) {
            break;
        }
        rest = q;
        power = poly::mul(k, &power, &x_minus_one);
    }
    // s (x - 1)^b + u rest = 1
    let (gcd, _s, u) = poly::ext_gcd(k, &power, &rest);
    ensure!(poly::is_one(k, &gcd), "(x - 1)^b and its cofactor are not coprime");
    let proj = poly::mul(k, &u, &rest);
    ensure!(proj.first().is_none_or(|c| k.is_zero(c)), "projection polynomial has a constant term");
    let mut e = r.zero();
    let mut power = z.clone();
    for c in proj.iter().skip(1) {
        e = r.add(&e, &r.scale(c, &power));
        power = r.mul(&power, z);
    }
    ensure!(r.is_idempotent(&e), "Fitting projection is not idempotent");
    Ok(e)
}
