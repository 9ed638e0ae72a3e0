//! A certified semisimple (or matricial) subalgebra of `R` containing a
//! finite set `X`, for an extension `R` of certified algebras.
//!
//! Pipeline: corner reduction when `R` has no identity, a lift `T` of the
//! whole quotient, the split `x = t + y` along `R = T ⊕ J`, an idempotent
//! `e ∈ J` with `Y ⊆ eJe` centralizing `T`, and finally
//! `S = (1 - e) T ⊕ eJe`.

use serde::Serialize;

use super::centralize::{centralizing_idempotent, centralizing_idempotent_over_division};
use super::lift::{lift_subalgebra, LiftTrace};
use super::tensor::{separability_check, Separability};
use super::{fmt_vecs, Complement};
use crate::algebra::{quotient, AlgElement, Algebra, ClassLabel, ExtensionInstance, QuotientPresentation};
use crate::error::{ensure, AlgError, Result};
use crate::linalg::Subspace;
use crate::regular::corner_capture;
use crate::structure::{
    division_matrix_units, is_matricial, require_certificates, wedderburn, DivisionBlock, MatrixUnitsSystem,
    WedderburnReport,
};

/// Which branch produced the envelope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnvelopeRoute {
    /// `X` is empty or zero: `S = 0`.
    Empty,
    /// `J = 0`: `S` is the whole (corner) algebra.
    ZeroIdeal,
    /// Matricial quotient: matrix units of the lifted complement.
    MatricialQuotient,
    /// Semisimple quotient over division algebras, separable.
    DivisionQuotient,
}

#[derive(Clone, Debug)]
pub struct EnvelopeTrace {
    pub route: EnvelopeRoute,
    /// Corner idempotent used when `R` has no identity.
    pub corner: Option<AlgElement>,
    pub lift: Option<LiftTrace>,
    pub complement: Option<Subspace>,
    pub separability: Option<Separability>,
    pub y: Vec<AlgElement>,
    pub e: Option<AlgElement>,
    pub s_prime_dim: usize,
    pub u_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeJson {
    pub route: EnvelopeRoute,
    pub corner: Option<Vec<String>>,
    pub complement_dim: Option<usize>,
    pub separability: Option<Separability>,
    pub y: Vec<Vec<String>>,
    pub e: Option<Vec<String>>,
    pub s_prime_dim: usize,
    pub u_dim: usize,
}

impl EnvelopeTrace {
    pub fn to_json(&self, r: &Algebra) -> EnvelopeJson {
        EnvelopeJson {
            route: self.route,
            corner: self.corner.as_ref().map(|c| r.format_element(c)),
            complement_dim: self.complement.as_ref().map(Subspace::dim),
            separability: self.separability.clone(),
            y: fmt_vecs(r, &self.y),
            e: self.e.as_ref().map(|e| r.format_element(e)),
            s_prime_dim: self.s_prime_dim,
            u_dim: self.u_dim,
        }
    }
}

/// Output of an envelope computation. The certificate lives on `algebra`,
/// the materialized `S`, whose basis vectors (in `R`) are `basis`.
#[derive(Clone, Debug)]
pub struct EnvelopeResult<C> {
    pub space: Subspace,
    pub basis: Vec<AlgElement>,
    pub algebra: Algebra,
    pub certificate: C,
    pub trace: EnvelopeTrace,
}

/// Matricial ideal and matricial quotient: `S` is matricial.
pub fn matricial_envelope(
    ext: &ExtensionInstance,
    xs: &[AlgElement],
) -> Result<EnvelopeResult<MatrixUnitsSystem>> {
    require_certificates(ext, &[ClassLabel::Matricial], &[ClassLabel::Matricial])?;
    let (space, trace) = envelope_space(ext, xs)?;
    let emb = ext.algebra().reduced_subalgebra(&space)?;
    let verdict = is_matricial(&emb.algebra)?;
    let units = match (verdict.reason, verdict.units) {
        (None, Some(u)) => u,
        (reason, _) => return Err(AlgError::Invariant(format!("envelope is not matricial: {reason:?}"))),
    };
    units.verify(&emb.algebra)?;
    ensure!(units.span(&emb.algebra).dim() == space.dim(), "matrix units do not span S");
    Ok(EnvelopeResult { space, basis: emb.basis().to_vec(), algebra: emb.algebra, certificate: units, trace })
}

/// Semisimple ideal and semisimple quotient (separable unless matricial):
/// `S` is semisimple.
pub fn fdss_envelope(ext: &ExtensionInstance, xs: &[AlgElement]) -> Result<EnvelopeResult<WedderburnReport>> {
    let ok = [ClassLabel::Fdss, ClassLabel::Matricial];
    require_certificates(ext, &ok, &ok)?;
    let (space, trace) = envelope_space(ext, xs)?;
    let emb = ext.algebra().reduced_subalgebra(&space)?;
    let report = wedderburn(&emb.algebra)?;
    ensure!(report.is_semisimple(), "envelope has nonzero radical");
    Ok(EnvelopeResult { space, basis: emb.basis().to_vec(), algebra: emb.algebra, certificate: report, trace })
}

/// Map from corner coordinates back to `R`.
type ToAmbient = Box<dyn Fn(&AlgElement) -> AlgElement>;

fn envelope_space(ext: &ExtensionInstance, xs: &[AlgElement]) -> Result<(Subspace, EnvelopeTrace)> {
    let r = ext.algebra();
    let k = r.field();
    for x in xs {
        if !r.contains(x) {
            return Err(AlgError::DimensionMismatch("element of X does not belong to R".into()));
        }
    }
    let mut trace = EnvelopeTrace {
        route: EnvelopeRoute::Empty,
        corner: None,
        lift: None,
        complement: None,
        separability: None,
        y: vec![],
        e: None,
        s_prime_dim: 0,
        u_dim: 0,
    };
    if xs.iter().all(|x| r.is_zero(x)) {
        return Ok((Subspace::zero(r.dim()), trace));
    }

    // work inside εRε when R has no identity
    let (pres, to_ambient): (QuotientPresentation, ToAmbient) = if r.is_unital() {
        (ext.presentation.clone(), Box::new(|x: &AlgElement| x.clone()))
    } else {
        let eps = corner_capture(r, xs, None)?;
        let corner = r.corner(&eps)?;
        let j_local: Vec<AlgElement> = ext
            .ideal()
            .basis()
            .iter()
            .map(|x| {
                corner
                    .from_ambient(&r.mul3(&eps, x, &eps))
                    .ok_or_else(|| AlgError::Invariant("εJε outside the corner".into()))
            })
            .collect::<Result<_>>()?;
        let c_alg = corner.algebra.clone();
        let j_space = c_alg.span(j_local);
        trace.corner = Some(eps);
        (quotient(&c_alg, &j_space)?, Box::new(move |x: &AlgElement| corner.to_ambient(x)))
    };
    let local_xs: Vec<AlgElement> = match &trace.corner {
        None => xs.to_vec(),
        Some(eps) => {
            let corner = r.corner(eps)?;
            xs.iter()
                .map(|x| corner.from_ambient(x).ok_or_else(|| AlgError::Invariant("x outside εRε".into())))
                .collect::<Result<_>>()?
        }
    };
    let rc = &pres.ambient;
    let jc = &pres.ideal;
    let lift_back = |s: &Subspace| -> Subspace { r.span(s.basis().iter().map(&to_ambient).collect()) };

    if jc.dim() == 0 {
        trace.route = EnvelopeRoute::ZeroIdeal;
        trace.s_prime_dim = rc.dim();
        let space = lift_back(&Subspace::full(k, rc.dim()));
        check_contains(r, &space, xs)?;
        return Ok((space, trace));
    }

    let full_quotient = Subspace::full(k, pres.quotient.dim());
    let (t, lift) = lift_subalgebra(&pres, &full_quotient)?;
    let split = Complement::new(k, &t, jc)?;
    let ys: Vec<AlgElement> = local_xs.iter().map(|x| split.split(x).1).collect();
    let t_emb = rc.reduced_subalgebra(&t)?;
    let t_matricial = is_matricial(&t_emb.algebra)?;
    let e = if let (None, Some(_)) = (&t_matricial.reason, &t_matricial.units) {
        trace.route = EnvelopeRoute::MatricialQuotient;
        centralizing_idempotent(rc, jc, &t, &ys)?.0
    } else {
        trace.route = EnvelopeRoute::DivisionQuotient;
        let sep = separability_check(&t_emb.algebra)?;
        let separable = sep.separable();
        trace.separability = Some(sep);
        if !separable {
            return Err(AlgError::NotSeparable);
        }
        let blocks: Vec<DivisionBlock> = division_matrix_units(&t_emb.algebra)?
            .into_iter()
            .map(|b| DivisionBlock {
                units: b.units.iter().map(|row| row.iter().map(|x| t_emb.to_ambient(x)).collect()).collect(),
                division_basis: b.division_basis.iter().map(|x| t_emb.to_ambient(x)).collect(),
            })
            .collect();
        centralizing_idempotent_over_division(rc, jc, &t, &blocks, &ys)?.0
    };
    let one = rc.one()?;
    let one_minus_e = rc.sub(&one, &e);
    let s_prime = rc.span(t.basis().iter().map(|x| rc.mul(&one_minus_e, x)).collect());
    let u = rc.span(jc.basis().iter().map(|x| rc.mul3(&e, x, &e)).collect());
    ensure!(s_prime.intersect(k, &u).dim() == 0, "(1 - e)T meets eJe");
    let s_local = s_prime.sum(k, &u);
    ensure!(rc.is_subalgebra(&s_local), "(1 - e)T + eJe is not a subalgebra");
    trace.s_prime_dim = s_prime.dim();
    trace.u_dim = u.dim();
    trace.lift = Some(lift);
    trace.complement = Some(t);
    trace.y = ys.iter().map(&to_ambient).collect();
    trace.e = Some(to_ambient(&e));
    let space = lift_back(&s_local);
    check_contains(r, &space, xs)?;
    Ok((space, trace))
}

fn check_contains(r: &Algebra, s: &Subspace, xs: &[AlgElement]) -> Result<()> {
    for x in xs {
        ensure!(s.contains(r.field(), x), "X is not contained in S");
    }
    ensure!(r.is_subalgebra(s), "S is not a subalgebra");
    Ok(())
}
