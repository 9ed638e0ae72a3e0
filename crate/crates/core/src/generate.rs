//! Seeded random instances.
//!
//! Every random choice is drawn from one [`SplitMix64`] stream seeded by the
//! caller, so a seed fully determines the output.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    change_basis, direct_sum, matrix_algebra, polynomial_quotient, tensor_product, Algebra, ClassLabel,
    ExtensionInstance,
};
use crate::error::{AlgError, Result};
use crate::factor;
use crate::field::Field;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::poly::Poly;

pub type Rng64 = SplitMix64;

/// A random invertible change of basis.
///
/// Over finite fields the matrix is uniform among invertible ones. Over
/// infinite fields it is `L U` with unit triangular factors whose off-diagonal
/// entries lie in `{-1, 0, 1}`, which keeps coordinates small.
pub fn random_basis_change<R: Rng + ?Sized>(f: &Field, n: usize, rng: &mut R) -> Matrix {
    if f.is_finite() {
        loop {
            let mut m = Matrix::zeros(f, n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, f.random(rng));
                }
            }
            if linalg::rank(f, &m) == n {
                return m;
            }
        }
    }
    let mut l = Matrix::identity(f, n);
    let mut u = Matrix::identity(f, n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, f.from_i64(small_sign(rng)));
            u.set(j, i, f.from_i64(small_sign(rng)));
        }
    }
    l.mul(f, &u)
}

fn small_sign<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    match rng.random_range(0..4) {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

/// One simple block `M_n(E)` with `[E : K] = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub n: usize,
    pub d: usize,
}

impl BlockSpec {
    pub fn dim(&self) -> usize {
        self.n * self.n * self.d
    }
}

/// Block shapes of the ideal and of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimProfile {
    pub ideal: Vec<BlockSpec>,
    pub quotient: Vec<BlockSpec>,
}

/// Largest total dimension a generated instance may have.
pub const MAX_GENERATED_DIM: usize = 64;

impl DimProfile {
    pub fn split(ideal: &[usize], quotient: &[usize]) -> DimProfile {
        let blocks = |v: &[usize]| v.iter().map(|&n| BlockSpec { n, d: 1 }).collect();
        DimProfile { ideal: blocks(ideal), quotient: blocks(quotient) }
    }

    /// Parses `"J=2,1;Q=1,1:2"`: blocks are `n` or `n:d`.
    pub fn parse(s: &str) -> Result<DimProfile> {
        let bad = |m: &str| AlgError::Parse(format!("profile {s:?}: {m}"));
        let mut ideal = None;
        let mut quotient = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, list) = part.split_once('=').ok_or_else(|| bad("expected KEY=blocks"))?;
            let mut blocks = Vec::new();
            for b in list.split(',').map(str::trim).filter(|b| !b.is_empty()) {
                let (n, d) = match b.split_once(':') {
                    Some((n, d)) => (n, d),
                    None => (b, "1"),
                };
                let n: usize = n.parse().map_err(|_| bad("block size is not an integer"))?;
                let d: usize = d.parse().map_err(|_| bad("degree is not an integer"))?;
                if n == 0 || d == 0 {
                    return Err(bad("block sizes and degrees must be positive"));
                }
                blocks.push(BlockSpec { n, d });
            }
            match key.trim() {
                "J" => ideal = Some(blocks),
                "Q" => quotient = Some(blocks),
                _ => return Err(bad("keys are J and Q")),
            }
        }
        Ok(DimProfile { ideal: ideal.unwrap_or_default(), quotient: quotient.unwrap_or_default() })
    }

    pub fn total_dim(&self) -> usize {
        self.ideal.iter().chain(&self.quotient).map(BlockSpec::dim).sum()
    }

    pub fn is_split(&self) -> bool {
        self.ideal.iter().chain(&self.quotient).all(|b| b.d == 1)
    }
}

/// A generated extension together with the construction data that tests use
/// as an oracle.
#[derive(Clone, Debug)]
pub struct GeneratedExtension {
    pub instance: ExtensionInstance,
    pub profile: DimProfile,
    /// A subalgebra complementary to `J`, twisted into `J` where block
    /// shapes allow.
    pub complement: Subspace,
}

/// Monic irreducible of degree `d` used for division blocks: `X^2 + 1` and
/// `X^d - 2` over `Q`, the least irreducible over `F_q`, `X^d - t` over
/// `F_p(t)`.
pub fn division_modulus(f: &Field, d: usize) -> Result<Poly> {
    let mut m = vec![f.zero(); d + 1];
    m[d] = f.one();
    if d == 1 {
        return Ok(m);
    }
    if f.is_finite() {
        // coefficients from the prime field, in lexicographic order
        let p = f.characteristic();
        let total = p.checked_pow(d as u32).unwrap_or(u64::MAX);
        for mut code in 0..total {
            for c in m.iter_mut().take(d) {
                *c = f.from_i64((code % p) as i64);
                code /= p;
            }
            if factor::is_irreducible(f, &m)? {
                return Ok(m);
            }
        }
        return Err(AlgError::Unsupported(format!("no degree-{d} irreducible with prime-field coefficients over {f}")));
    }
    if f.characteristic() == 0 && f.base().is_none() {
        m[0] = if d == 2 { f.one() } else { f.from_i64(-2) };
        return Ok(m);
    }
    if f.is_rational_functions() {
        let t = f.generator().ok_or_else(|| AlgError::Invariant("F_p(t) has a variable".into()))?;
        m[0] = f.neg(&t);
        return Ok(m);
    }
    Err(AlgError::UnsupportedField(format!("division blocks over {f}")))
}

fn block_algebra(f: &Field, b: BlockSpec) -> Result<Algebra> {
    let mat = matrix_algebra(f, b.n);
    if b.d == 1 {
        return Ok(mat);
    }
    let e = polynomial_quotient(f, &division_modulus(f, b.d)?)?;
    tensor_product(&mat, &e)
}

fn class_of(blocks: &[BlockSpec]) -> ClassLabel {
    if blocks.iter().all(|b| b.d == 1) {
        ClassLabel::Matricial
    } else {
        ClassLabel::Fdss
    }
}

/// Builds `R = Q ⊕ J` for the profile, with a complement to `J` twisted by a
/// block embedding of `Q` into `J`, and scrambles everything by a seeded
/// change of basis.
pub fn generate_random_extension(seed: u64, f: &Field, profile: &DimProfile) -> Result<GeneratedExtension> {
    let total = profile.total_dim();
    if total == 0 || total > MAX_GENERATED_DIM {
        return Err(AlgError::UnsupportedParameters(format!(
            "total dimension {total} outside 1..={MAX_GENERATED_DIM}"
        )));
    }
    let mut rng = Rng64::seed_from_u64(seed);
    let q_parts: Vec<Algebra> = profile.quotient.iter().map(|&b| block_algebra(f, b)).collect::<Result<_>>()?;
    let j_parts: Vec<Algebra> = profile.ideal.iter().map(|&b| block_algebra(f, b)).collect::<Result<_>>()?;
    let parts: Vec<Algebra> = q_parts.iter().chain(&j_parts).cloned().collect();
    let r0 = direct_sum(&parts)?;
    let q_dim: usize = q_parts.iter().map(Algebra::dim).sum();
    let j_dim = total - q_dim;

    // twist: block s of Q goes to the first ideal block with the same
    // division degree and room left, as a ↦ diag(a, 0) ⊗ 1
    let mut room: Vec<usize> = profile.ideal.iter().map(|b| b.n).collect();
    let j_offsets: Vec<usize> = profile
        .ideal
        .iter()
        .scan(q_dim, |acc, b| {
            let o = *acc;
            *acc += b.dim();
            Some(o)
        })
        .collect();
    let mut t0 = Vec::with_capacity(q_dim);
    let mut q_off = 0;
    for b in &profile.quotient {
        let target = profile
            .ideal
            .iter()
            .enumerate()
            .find(|(r, jb)| jb.d == b.d && room[*r] >= b.n && rng.random_bool(0.75))
            .map(|(r, jb)| (r, jb.n, jb.n - room[r]));
        if let Some((r, _, _)) = target {
            room[r] -= b.n;
        }
        for i in 0..b.n {
            for jj in 0..b.n {
                for k in 0..b.d {
                    let mut v = linalg::zero_vec(f, total);
                    v[q_off + (i * b.n + jj) * b.d + k] = f.one();
                    if let Some((r, m, off)) = target {
                        v[j_offsets[r] + ((off + i) * m + off + jj) * b.d + k] = f.one();
                    }
                    t0.push(v);
                }
            }
        }
        q_off += b.dim();
    }
    let j0: Vec<Vector> = (q_dim..total).map(|i| linalg::unit_vec(f, total, i)).collect();

    let p = random_basis_change(f, total, &mut rng);
    let pinv = linalg::inverse(f, &p).expect("basis change is invertible");
    let r = change_basis(&r0, &p)?;
    let to_new = |v: &Vector| pinv.mul_vec(f, v);
    let j_basis: Vec<Vector> = j0.iter().map(to_new).collect();
    let complement = r.span(t0.iter().map(to_new).collect());
    debug_assert_eq!(j_basis.len(), j_dim);
    let instance = ExtensionInstance::new(r, j_basis, class_of(&profile.ideal), class_of(&profile.quotient))?;
    Ok(GeneratedExtension { instance, profile: profile.clone(), complement })
}
