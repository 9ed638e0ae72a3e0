//! Wedderburn decomposition of `A/rad(A)` into simple components.
//!
//! Primitive central idempotents come from splitting the center: a central
//! element whose minimal polynomial factors as `g h` with `gcd(g, h) = 1`
//! gives the idempotent `(t h)(z)` where `s g + t h = 1`. Inside a simple
//! component, a zero divisor `x` of a corner `eSe` yields the idempotent
//! generator of the right ideal `x eSe`, which splits `e`. A corner whose
//! dimension equals that of the component's center is a field, so the
//! idempotent is primitive.

use rand::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use super::quaternion::quaternion_zero_divisor;
use super::radical::radical;
use crate::algebra::{quotient, AlgElement, Algebra, QuotientPresentation};
use crate::error::{ensure, AlgError, Result};
use crate::factor::{self, Split};
use crate::linalg::{self, Matrix, Subspace};
use crate::par::par_map;
use crate::poly;
use crate::regular::right_generator_of;

const RANDOM_CANDIDATES: usize = 48;
const SEARCH_SEED: u64 = 0x005e_ed0f_1dea;

/// One simple component `M_n(D)` of the semisimple quotient.
#[derive(Clone, Debug)]
pub struct Component {
    /// Primitive central idempotent, in coordinates of the semisimple quotient.
    pub central_idempotent: AlgElement,
    pub dim: usize,
    /// Matrix size `n`.
    pub n: usize,
    /// `dim_K D`.
    pub d: usize,
    /// `dim_K Z(D)`.
    pub center_dim: usize,
    /// Orthogonal primitive idempotents summing to the central idempotent.
    pub primitive_idempotents: Vec<AlgElement>,
}

impl Component {
    /// `D = K`, so the component is a full matrix algebra over the ground field.
    pub fn split(&self) -> bool {
        self.d == 1
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnReport {
    pub radical: Subspace,
    /// `A/rad(A)`; `None` when `A` is already semisimple.
    pub presentation: Option<QuotientPresentation>,
    /// The algebra the components live in (`A` or `A/rad(A)`).
    pub semisimple: Algebra,
    pub components: Vec<Component>,
}

impl WedderburnReport {
    pub fn is_semisimple(&self) -> bool {
        self.radical.dim() == 0
    }

    pub fn is_matricial(&self) -> bool {
        self.is_semisimple() && self.components.iter().all(Component::split)
    }

    pub fn is_fdss(&self) -> bool {
        self.is_semisimple()
    }

    /// Checks orthogonality, centrality, completeness and the dimension count.
    pub fn verify(&self) -> Result<()> {
        let s = &self.semisimple;
        let mut sum = s.zero();
        let mut total = 0;
        for (i, c) in self.components.iter().enumerate() {
            let e = &c.central_idempotent;
            ensure!(s.is_idempotent(e), "central idempotent {i} is not idempotent");
            for b in 0..s.dim() {
                ensure!(s.mul_right_basis(e, b) == s.mul_left_basis(b, e), "idempotent {i} is not central");
            }
            for (j, c2) in self.components.iter().enumerate().skip(i + 1) {
                ensure!(s.is_zero(&s.mul(e, &c2.central_idempotent)), "idempotents {i} and {j} are not orthogonal");
            }
            ensure!(c.n * c.n * c.d == c.dim, "component {i}: n^2 d != dim");
            total += c.dim;
            sum = s.add(&sum, e);
        }
        ensure!(total + self.radical.dim() == self.radical.ambient, "component dimensions do not add up");
        if s.dim() > 0 {
            ensure!(Some(&sum) == s.identity(), "central idempotents do not sum to the identity");
        }
        Ok(())
    }

    pub fn to_json(&self) -> WedderburnJson {
        let s = &self.semisimple;
        let f = s.field();
        WedderburnJson {
            radical: self.radical.basis().iter().map(|v| v.iter().map(|c| f.format(c)).collect()).collect(),
            is_semisimple: self.is_semisimple(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    central_idempotent: s.format_element(&c.central_idempotent),
                    dim: c.dim,
                    n: c.n,
                    d: c.d,
                    split: c.split(),
                })
                .collect(),
            is_matricial: self.is_matricial(),
            is_fdss: self.is_fdss(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub central_idempotent: Vec<String>,
    pub dim: usize,
    pub n: usize,
    pub d: usize,
    pub split: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedderburnJson {
    pub radical: Vec<Vec<String>>,
    pub is_semisimple: bool,
    pub components: Vec<ComponentJson>,
    pub is_matricial: bool,
    pub is_fdss: bool,
}

pub fn wedderburn(a: &Algebra) -> Result<WedderburnReport> {
    let rad = radical(a)?;
    let (presentation, s) = if rad.dim() == 0 {
        (None, a.clone())
    } else {
        let p = quotient(a, &rad)?;
        let s = p.quotient.clone();
        (Some(p), s)
    };
    let components = if s.dim() == 0 { Vec::new() } else { decompose_semisimple(&s)? };
    let report = WedderburnReport {
        radical: rad,
        presentation,
        semisimple: s,
        components,
    };
    report.verify()?;
    Ok(report)
}

/// Components of a semisimple unital algebra.
pub(crate) fn decompose_semisimple(s: &Algebra) -> Result<Vec<Component>> {
    let one = s.one().map_err(|_| AlgError::Invariant("semisimple algebra without identity".into()))?;
    let z = s.center();
    let central = split_completely(s, &one, z.basis(), &|_, _| false)?;
    let results = par_map(&central, |c| component_of(s, &z, c));
    results.into_iter().collect()
}

fn component_of(s: &Algebra, z: &Subspace, c: &AlgElement) -> Result<Component> {
    let center_dim = corner_space(s, c, z.basis()).dim();
    let dim = corner_space(s, c, &s.basis()).dim();
    let ambient = s.basis();
    let stop = |_: &AlgElement, corner_dim: usize| corner_dim == center_dim;
    let prims = match rank_one_primitives(s, c, dim, center_dim)? {
        Some(p) => p,
        None => split_completely(s, c, &ambient, &stop)?,
    };
    let d = corner_space(s, &prims[0], &ambient).dim();
    let n = prims.len();
    ensure!(n * n * d == dim, "component of dimension {dim} has n = {n}, d = {d}");
    Ok(Component {
        central_idempotent: c.clone(),
        dim,
        n,
        d,
        center_dim,
        primitive_idempotents: prims,
    })
}

/// Primitive idempotents of a split component `C = M_n(K)` from a single
/// right ideal of dimension `n`.
///
/// Right ideals `xC` of zero divisors `x`, together with the complementary
/// ideals `(c - g)C` of their idempotent generators `g`, are intersected
/// until one of dimension `n` remains: generically `dim (I ∩ I') = dim I +
/// dim I' - n²`. Its idempotent generator `g` is primitive, `Cg` and `gC` are
/// dual under `(w, v) ↦ w v ∈ Kg`, and a dual pair of bases `v_i`, `w_i`
/// gives the primitive idempotents `v_i w_i`. These have far smaller
/// coefficients than those reached by splitting corners one at a time.
/// Returns `None` when `C` is not split or no such ideal turns up, leaving
/// the generic search to decide.
fn rank_one_primitives(s: &Algebra, c: &AlgElement, dim: usize, center_dim: usize) -> Result<Option<Vec<AlgElement>>> {
    let f = s.field();
    let n = (1..=dim).find(|n| n * n >= dim).unwrap_or(1);
    if center_dim != 1 || n * n != dim || n < 2 {
        return Ok(None);
    }
    let basis = s.basis();
    let right_ideal = |x: &AlgElement| s.span(basis.iter().map(|b| s.mul(x, b)).collect());
    let proper = |i: &Subspace| i.dim() > 0 && i.dim() < dim;
    let compressed: Vec<AlgElement> = basis.iter().map(|b| s.mul3(c, b, c)).filter(|x| !s.is_zero(x)).collect();

    let mut ideals: Vec<Subspace> = Vec::new();
    let push_with_complement = |ideal: Subspace, ideals: &mut Vec<Subspace>| -> Result<()> {
        let g = right_generator_of(s, &ideal)?;
        let comp = right_ideal(&s.sub(c, &g));
        ideals.push(ideal);
        if proper(&comp) {
            ideals.push(comp);
        }
        Ok(())
    };
    const WANTED: usize = 6;
    for x in &compressed {
        if ideals.len() >= WANTED {
            break;
        }
        let ideal = right_ideal(x);
        if proper(&ideal) {
            push_with_complement(ideal, &mut ideals)?;
        }
    }
    if ideals.is_empty() {
        // g(x) for a proper factor g of the minimal polynomial of x
        for x in &compressed {
            if ideals.len() >= WANTED {
                break;
            }
            let m = s.min_poly_in(x, Some(c));
            if let Split::Factor(g) = factor::find_factor(f, &m)? {
                let ideal = right_ideal(&s.eval_poly_in(&g, x, c));
                if proper(&ideal) {
                    push_with_complement(ideal, &mut ideals)?;
                }
            }
        }
    }
    let Some(mut best) = ideals.iter().min_by_key(|i| i.dim()).cloned() else {
        return Ok(None);
    };
    while best.dim() > n {
        let smaller = ideals
            .iter()
            .map(|i| best.intersect(f, i))
            .filter(|j| j.dim() > 0 && j.dim() < best.dim())
            .min_by_key(|j| j.dim());
        match smaller {
            Some(j) => {
                let g = right_generator_of(s, &j)?;
                let comp = right_ideal(&s.sub(c, &g));
                if proper(&comp) && comp.dim() < j.dim() {
                    best = comp;
                } else {
                    best = j;
                }
            }
            None => return Ok(None),
        }
    }
    let g = right_generator_of(s, &best)?;
    if corner_space(s, &g, &basis).dim() != 1 {
        return Ok(None);
    }
    let v = s.span(basis.iter().map(|b| s.mul(b, &g)).collect());
    let w = s.span(basis.iter().map(|b| s.mul(&g, b)).collect());
    ensure!(v.dim() == n && w.dim() == n, "Cg or gC has the wrong dimension");
    let k = g.iter().position(|x| !f.is_zero(x)).expect("nonzero idempotent");
    let mut pairing = Matrix::zeros(f, n, n);
    for (j, wj) in w.basis().iter().enumerate() {
        for (i, vi) in v.basis().iter().enumerate() {
            pairing.set(j, i, f.div(&s.mul(wj, vi)[k], &g[k])?);
        }
    }
    let inv = linalg::inverse(f, &pairing).ok_or_else(|| AlgError::Invariant("degenerate pairing Cg x gC".into()))?;
    let mut prims = Vec::with_capacity(n);
    let mut sum = s.zero();
    for i in 0..n {
        let dual = linalg::combine(f, s.dim(), &(0..n).map(|l| inv.get(i, l).clone()).collect::<Vec<_>>(), w.basis());
        let e = s.mul(&v.basis()[i], &dual);
        ensure!(s.is_idempotent(&e), "v_i w_i is not idempotent");
        sum = s.add(&sum, &e);
        prims.push(e);
    }
    ensure!(sum == *c, "primitive idempotents do not sum to the central idempotent");
    Ok(Some(prims))
}

/// `span{ e x e : x in gens }`
fn corner_space(s: &Algebra, e: &[crate::Elem], gens: &[AlgElement]) -> Subspace {
    s.span(gens.iter().map(|x| s.mul3(e, x, e)).collect())
}

/// Splits `e` into orthogonal idempotents until each corner `e' C e'` (where
/// `C` is spanned by `gens`) is a field. `is_primitive(e', dim)` may declare
/// a corner primitive early.
fn split_completely(
    s: &Algebra,
    e: &AlgElement,
    gens: &[AlgElement],
    is_primitive: &dyn Fn(&AlgElement, usize) -> bool,
) -> Result<Vec<AlgElement>> {
    let mut done = Vec::new();
    let mut stack = vec![e.clone()];
    while let Some(cur) = stack.pop() {
        let b = corner_space(s, &cur, gens);
        if b.dim() == 1 || is_primitive(&cur, b.dim()) {
            done.push(cur);
            continue;
        }
        match split_idempotent(s, &cur, gens, &b)? {
            Outcome::Split(g) => {
                let rest = s.sub(&cur, &g);
                stack.push(rest);
                stack.push(g);
            }
            Outcome::Field => done.push(cur),
            Outcome::Exhausted => {
                return Err(AlgError::Unsupported(format!(
                    "no zero divisor found in a corner of dimension {}; noncommutative division algebras are not supported",
                    b.dim()
                )))
            }
        }
    }
    Ok(done)
}

enum Outcome {
    Split(AlgElement),
    /// Some element has an irreducible minimal polynomial of full degree.
    Field,
    Exhausted,
}

fn candidates(s: &Algebra, e: &AlgElement, gens: &[AlgElement]) -> impl Iterator<Item = AlgElement> {
    let f = s.field().clone();
    let s1 = s.clone();
    let e1 = e.clone();
    let g = gens.to_vec();
    let n = g.len();
    let singles = (0..n).map(move |i| g[i].clone());
    let g2 = gens.to_vec();
    let pairs = (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).flat_map(move |(i, j)| {
        [s1.add(&g2[i], &g2[j]), s1.sub(&g2[i], &g2[j])]
    });
    let s2 = s.clone();
    let g3 = gens.to_vec();
    let mut rng = SplitMix64::seed_from_u64(SEARCH_SEED);
    let randoms = (0..RANDOM_CANDIDATES).map(move |_| {
        let mut acc = s2.zero();
        for x in &g3 {
            acc = s2.add(&acc, &s2.scale(&f.random(&mut rng), x));
        }
        acc
    });
    let s3 = s.clone();
    singles.chain(pairs).chain(randoms).map(move |x| s3.mul3(&e1, &x, &e1))
}

fn split_idempotent(s: &Algebra, e: &AlgElement, gens: &[AlgElement], b: &Subspace) -> Result<Outcome> {
    let f = s.field();
    let dim_b = b.dim();
    let pair_count = gens.len() * gens.len().saturating_sub(1);
    if dim_b == 4 {
        if let Some(z) = quaternion_zero_divisor(s, e, b, candidates(s, e, gens)) {
            if let Some(g) = zero_divisor_split(s, &z, b)? {
                return Ok(Outcome::Split(g));
            }
        }
    }
    for (idx, x) in candidates(s, e, gens).enumerate() {
        if s.is_zero(&x) {
            continue;
        }
        if let Some(g) = zero_divisor_split(s, &x, b)? {
            return Ok(Outcome::Split(g));
        }
        let m = s.min_poly_in(&x, Some(e));
        match factor::find_factor(f, &m)? {
            Split::Factor(g) => {
                let (h, r) = poly::divrem(f, &m, &g);
                ensure!(poly::degree(&r).is_none(), "factor does not divide the minimal polynomial");
                let (d, _, t) = poly::ext_gcd(f, &g, &h);
                if poly::is_one(f, &d) {
                    // (t h)(x) is 1 mod g and 0 mod h
                    let th = poly::mul(f, &t, &h);
                    let idem = s.eval_poly_in(&th, &x, e);
                    ensure!(s.is_idempotent(&idem), "CRT element is not idempotent");
                    return Ok(Outcome::Split(idem));
                }
                let y = s.eval_poly_in(&g, &x, e);
                if let Some(g) = zero_divisor_split(s, &y, b)? {
                    return Ok(Outcome::Split(g));
                }
            }
            Split::Irreducible => {
                if poly::degree(&m) == Some(dim_b) {
                    return Ok(Outcome::Field);
                }
            }
        }
        // give up on pairs for large corners once enough has been tried
        if idx > gens.len() + pair_count.min(4096) + RANDOM_CANDIDATES {
            break;
        }
    }
    Ok(Outcome::Exhausted)
}

/// If `x` is a nonzero non-unit of the corner `B`, the idempotent generator
/// of `xB`.
fn zero_divisor_split(s: &Algebra, x: &AlgElement, b: &Subspace) -> Result<Option<AlgElement>> {
    if s.is_zero(x) {
        return Ok(None);
    }
    let w = s.span(b.basis().iter().map(|y| s.mul(x, y)).collect());
    if w.dim() == b.dim() {
        return Ok(None);
    }
    right_generator_of(s, &w).map(Some)
}
