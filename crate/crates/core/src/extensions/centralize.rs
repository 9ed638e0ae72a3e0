//! An idempotent `e ∈ J` with `Y ⊆ eJe` commuting with a complement `T`.
//!
//! `T` is given by matrix units over division algebras `D_s = e^{(s)}_{11} T
//! e^{(s)}_{11}`. For split blocks the corner idempotents `g_s` come from a
//! plain corner capture; for `d_s > 1` they must also commute with `D_s`,
//! which is the separable splitting problem inside `e^{(s)}_{11} R e^{(s)}_{11}`.

use serde::Serialize;

use super::tensor::{check_idempotent, t_stable_idempotent};
use super::{fmt_vecs, Complement};
use crate::algebra::{AlgElement, Algebra};
use crate::error::{ensure, AlgError, Result};
use crate::linalg::Subspace;
use crate::regular::{corner_capture, quasi_inverse};
use crate::structure::{is_matricial, DivisionBlock};

/// How a block idempotent `g_s` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockRoute {
    Capture,
    Tensor,
}

#[derive(Clone, Debug)]
pub struct QuasiInverseEntry {
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub u: AlgElement,
}

#[derive(Clone, Debug)]
pub struct CentralizerTrace {
    pub p: AlgElement,
    pub f: AlgElement,
    pub quasi_inverses: Vec<QuasiInverseEntry>,
    pub g: Vec<AlgElement>,
    pub routes: Vec<BlockRoute>,
    pub q_blocks: Vec<AlgElement>,
    pub q: AlgElement,
    pub e: AlgElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerJson {
    pub p: Vec<String>,
    pub f: Vec<String>,
    pub quasi_inverse_count: usize,
    pub g: Vec<Vec<String>>,
    pub routes: Vec<BlockRoute>,
    pub q_blocks: Vec<Vec<String>>,
    pub q: Vec<String>,
    pub e: Vec<String>,
}

impl CentralizerTrace {
    pub fn to_json(&self, r: &Algebra) -> CentralizerJson {
        CentralizerJson {
            p: r.format_element(&self.p),
            f: r.format_element(&self.f),
            quasi_inverse_count: self.quasi_inverses.len(),
            g: fmt_vecs(r, &self.g),
            routes: self.routes.clone(),
            q_blocks: fmt_vecs(r, &self.q_blocks),
            q: r.format_element(&self.q),
            e: r.format_element(&self.e),
        }
    }

    pub fn verify(
        &self,
        r: &Algebra,
        j: &Subspace,
        t: &Subspace,
        blocks: &[DivisionBlock],
        ys: &[AlgElement],
    ) -> Result<()> {
        for (s, b) in blocks.iter().enumerate() {
            let qs = &self.q_blocks[s];
            let mut expect = r.zero();
            for i in 0..b.n() {
                expect = r.add(&expect, &r.mul3(&b.units[i][0], &self.g[s], &b.units[0][i]));
            }
            ensure!(*qs == expect, "q_s != sum e_i1 g_s e_1i");
            for other in blocks {
                for u in other.units.iter().flatten() {
                    ensure!(r.is_zero(&r.commutator(qs, u)), "q_s does not commute with a matrix unit");
                }
            }
        }
        let pfp = r.mul3(&self.p, &self.f, &self.p);
        ensure!(r.mul3(&self.q, &pfp, &self.q) == pfp, "p f p is not in qJq");
        check_idempotent(r, j, t, ys, &self.e)
    }
}

/// The matricial case: `T` must carry a full set of matrix units.
pub fn centralizing_idempotent(
    r: &Algebra,
    j: &Subspace,
    t: &Subspace,
    ys: &[AlgElement],
) -> Result<(AlgElement, CentralizerTrace)> {
    Complement::new(r.field(), t, j)?;
    let emb = r.reduced_subalgebra(t)?;
    let verdict = is_matricial(&emb.algebra)?;
    let sys = match (verdict.reason, verdict.units) {
        (None, Some(sys)) => sys,
        (reason, _) => return Err(AlgError::NotMatricial(format!("T fails: {reason:?}"))),
    };
    let blocks: Vec<DivisionBlock> = sys
        .units
        .iter()
        .map(|b| {
            let units: Vec<Vec<AlgElement>> =
                b.iter().map(|row| row.iter().map(|x| emb.to_ambient(x)).collect()).collect();
            let division_basis = vec![units[0][0].clone()];
            DivisionBlock { units, division_basis }
        })
        .collect();
    centralizing_idempotent_over_division(r, j, t, &blocks, ys)
}

/// The general semisimple case, with `T = ⊕ M_{n_s}(D_s)` described by
/// `blocks` in ambient coordinates.
pub fn centralizing_idempotent_over_division(
    r: &Algebra,
    j: &Subspace,
    t: &Subspace,
    blocks: &[DivisionBlock],
    ys: &[AlgElement],
) -> Result<(AlgElement, CentralizerTrace)> {
    let k = r.field();
    let one = r.one().map_err(|_| AlgError::PreconditionFailed("R has no identity".into()))?;
    Complement::new(k, t, j)?;
    for y in ys {
        if !j.contains(k, y) {
            return Err(AlgError::PreconditionFailed("an element of Y lies outside J".into()));
        }
    }
    let mut p = r.zero();
    for b in blocks {
        for i in 0..b.n() {
            p = r.add(&p, &b.units[i][i]);
        }
    }
    let one_minus_p = r.sub(&one, &p);
    let mut captured = ys.to_vec();
    captured.push(one_minus_p.clone());
    let f = corner_capture(r, &captured, None)?;

    // u^{(rs)}_{ij} ∈ e^{(r)}_{11} J e^{(s)}_{11}
    let mut quasi_inverses = Vec::new();
    let z_of = |s: usize, i: usize, rr: usize, jj: usize| r.mul3(&blocks[s].units[0][i], &f, &blocks[rr].units[jj][0]);
    for (s, bs) in blocks.iter().enumerate() {
        for (rr, br) in blocks.iter().enumerate() {
            for i in 0..bs.n() {
                for jj in 0..br.n() {
                    let z = z_of(s, i, rr, jj);
                    let y = quasi_inverse(r, &z)?;
                    let u = r.mul3(&br.units[0][0], &y, &bs.units[0][0]);
                    ensure!(r.mul3(&z, &u, &z) == z, "trimmed quasi-inverse fails z u z = z");
                    quasi_inverses.push(QuasiInverseEntry { r: rr, s, i, j: jj, u });
                }
            }
        }
    }
    let u_of = |rr: usize, s: usize, i: usize, jj: usize| -> &AlgElement {
        &quasi_inverses
            .iter()
            .find(|q| q.r == rr && q.s == s && q.i == i && q.j == jj)
            .expect("every index quadruple has an entry")
            .u
    };

    let mut g = Vec::with_capacity(blocks.len());
    let mut routes = Vec::with_capacity(blocks.len());
    for (s, bs) in blocks.iter().enumerate() {
        let mut targets = Vec::new();
        for (rr, br) in blocks.iter().enumerate() {
            for i in 0..bs.n() {
                for jj in 0..br.n() {
                    targets.push(r.mul(&z_of(s, i, rr, jj), u_of(rr, s, i, jj)));
                }
            }
            for i in 0..br.n() {
                for jj in 0..bs.n() {
                    targets.push(r.mul(u_of(s, rr, i, jj), &z_of(rr, i, s, jj)));
                }
            }
        }
        let e11 = &bs.units[0][0];
        let (gs, route) = if bs.d() <= 1 {
            (corner_capture(r, &targets, Some(e11))?, BlockRoute::Capture)
        } else {
            (division_corner_idempotent(r, j, bs, &targets)?, BlockRoute::Tensor)
        };
        g.push(gs);
        routes.push(route);
    }

    let q_blocks: Vec<AlgElement> = blocks
        .iter()
        .zip(&g)
        .map(|(b, gs)| {
            (0..b.n()).fold(r.zero(), |acc, i| r.add(&acc, &r.mul3(&b.units[i][0], gs, &b.units[0][i])))
        })
        .collect();
    let q = q_blocks.iter().fold(r.zero(), |acc, x| r.add(&acc, x));
    let e = r.add(&q, &one_minus_p);
    let trace = CentralizerTrace { p, f, quasi_inverses, g, routes, q_blocks, q, e: e.clone() };
    trace.verify(r, j, t, blocks, ys)?;
    Ok((e, trace))
}

/// `g ∈ e_11 J e_11` idempotent, commuting with `D = e_11 T e_11` and
/// capturing `targets`, computed inside the corner algebra.
fn division_corner_idempotent(
    r: &Algebra,
    j: &Subspace,
    b: &DivisionBlock,
    targets: &[AlgElement],
) -> Result<AlgElement> {
    let k = r.field();
    let e11 = &b.units[0][0];
    let corner = r.corner(e11)?;
    let local = |x: &AlgElement| -> Result<AlgElement> {
        corner
            .from_ambient(x)
            .ok_or_else(|| AlgError::Invariant("element outside the corner e_11 R e_11".into()))
    };
    let c = &corner.algebra;
    let d_local = c.span(b.division_basis.iter().map(&local).collect::<Result<_>>()?);
    let j_local = c.span(
        j.basis()
            .iter()
            .map(|x| local(&r.mul3(e11, x, e11)))
            .collect::<Result<_>>()?,
    );
    let ys_local: Vec<AlgElement> = targets.iter().map(&local).collect::<Result<_>>()?;
    let (g_local, _) = t_stable_idempotent(c, &j_local, &d_local, &ys_local)?;
    let g = corner.to_ambient(&g_local);
    ensure!(j.contains(k, &g), "corner idempotent outside J");
    Ok(g)
}
