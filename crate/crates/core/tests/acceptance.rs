//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Every check re-derives its postconditions from the public API rather than
//! trusting the traces returned by the constructions.

mod common;

use std::time::{Duration, Instant};

use algext::algebra::{
    direct_sum, matrix_algebra, opposite, polynomial_quotient, tensor_product, upper_triangular, Algebra,
};
use algext::extensions::{
    centralizing_idempotent, counterexample_build, counterexample_verify, fdss_envelope, lift_subalgebra,
    matricial_envelope, separability_check, t_stable_idempotent, FeasibilityVerdict, NuChoice,
};
use algext::generate::{generate_random_extension, GeneratedExtension};
use algext::linalg::{Matrix, Subspace};
use algext::par::par_map;
use algext::regular::{embed_unit_regular_witness, lift_unit_through_splitting, quasi_inverse, unit_regular_witness};
use algext::structure::{is_matricial, is_nilpotent_subspace, radical, wedderburn};
use algext::{AlgElement, AlgError, Field};
use common::{profile_for, random_in, rng, scrambled, unital_hull};
use rand::Rng;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lift_err<T>(r: algext::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Outcome {
    passed: usize,
    total: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn from_batch(results: Vec<(u64, Check)>) -> Outcome {
        let total = results.len();
        let failures: Vec<String> = results
            .into_iter()
            .filter_map(|(seed, r)| r.err().map(|e| format!("seed {seed}: {e}")))
            .collect();
        Outcome { passed: total - failures.len(), total, failures, notes: vec![] }
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.passed += other.passed;
        self.total += other.total;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }

    fn note(mut self, n: impl Into<String>) -> Outcome {
        self.notes.push(n.into());
        self
    }
}

fn batch(seeds: std::ops::Range<u64>, f: impl Fn(u64) -> Check + Sync + Send) -> Outcome {
    let seeds: Vec<u64> = seeds.collect();
    Outcome::from_batch(par_map(&seeds, |&s| (s, f(s))))
}

fn field_by_seed(seed: u64, fields: &[&Field]) -> Field {
    fields[(seed as usize / 2) % fields.len()].clone()
}

/// `e² = e ∈ J`, `[e, T] = 0`, `e y e = y`, from scratch.
fn idempotent_postconditions(r: &Algebra, j: &Subspace, t: &Subspace, ys: &[AlgElement], e: &AlgElement) -> Check {
    let k = r.field();
    ensure(r.mul(e, e) == *e, "e^2 != e")?;
    ensure(j.contains(k, e), "e outside J")?;
    for tb in t.basis() {
        ensure(r.mul(e, tb) == r.mul(tb, e), "e does not commute with T")?;
    }
    for y in ys {
        ensure(r.mul(&r.mul(e, y), e) == *y, "e y e != y")?;
    }
    Ok(())
}

// 1 ---------------------------------------------------------------------

const LIFT_PROFILES: &[&str] = &[
    "J=1;Q=1",
    "J=2;Q=1",
    "J=1,1;Q=2",
    "J=2;Q=2,1",
    "J=3;Q=2",
    "J=2,1;Q=1,1",
    "J=1;Q=3",
    "J=2,2;Q=2,2",
    "J=3;Q=3",
    "J=2;Q=1:2,1",
];

fn lift_case(seed: u64) -> Check {
    let f5 = Field::prime(5).unwrap();
    let q = Field::rationals();
    let f = if seed.is_multiple_of(2) { f5 } else { q };
    let profile = profile_for(seed / 2, LIFT_PROFILES);
    let gen = lift_err(generate_random_extension(seed, &f, &profile))?;
    ensure(gen.instance.algebra().dim() <= 24, "instance too large")?;
    let pres = &gen.instance.presentation;
    let quot = &pres.quotient;
    let mut g = rng(seed ^ 0xa11);
    let a = if seed.is_multiple_of(3) {
        Subspace::full(&f, quot.dim())
    } else {
        let x = random_in(&f, &Subspace::full(&f, quot.dim()), &mut g);
        quot.generated_subalgebra(&[x])
    };
    let (t, _trace) = lift_err(lift_subalgebra(pres, &a))?;
    let r = &pres.ambient;
    ensure(t.dim() == a.dim(), "dim T != dim A")?;
    let image = quot.span(t.basis().iter().map(|v| pres.project(v)).collect());
    ensure(image == a, "π(T) != A")?;
    ensure(t.intersect(&f, &pres.ideal).dim() == 0, "T meets J")?;
    for x in t.basis() {
        for y in t.basis() {
            ensure(t.contains(&f, &r.mul(x, y)), "T is not closed")?;
        }
    }
    Ok(())
}

// 2 ---------------------------------------------------------------------

const CENTRALIZER_PROFILES: &[&str] = &[
    "J=2;Q=1",
    "J=3;Q=2",
    "J=2,2;Q=1,1",
    "J=4;Q=2,1",
    "J=3,2;Q=2,2",
    "J=1,1;Q=2,2",
    "J=4;Q=2",
];

fn centralizer_case(seed: u64) -> Check {
    let f = field_by_seed(seed, &[&Field::prime(5).unwrap(), &Field::rationals(), &Field::prime(3).unwrap()]);
    let profile = profile_for(seed, CENTRALIZER_PROFILES);
    let gen = lift_err(generate_random_extension(seed, &f, &profile))?;
    let r = gen.instance.algebra();
    let j = gen.instance.ideal();
    let mut g = rng(seed ^ 0xce);
    let ys: Vec<AlgElement> = (0..seed % 4).map(|_| random_in(&f, j, &mut g)).collect();
    let (e, _) = lift_err(centralizing_idempotent(r, j, &gen.complement, &ys))?;
    idempotent_postconditions(r, j, &gen.complement, &ys, &e)
}

// 3 ---------------------------------------------------------------------

const MATRICIAL_PROFILES: &[&str] = &["J=1;Q=1", "J=2;Q=1,1", "J=2,1;Q=2", "J=3;Q=2,1", "J=2,2;Q=2", "J=1,1,1;Q=3"];

fn matricial_case(seed: u64) -> Check {
    let f = field_by_seed(seed, &[&Field::prime(5).unwrap(), &Field::rationals(), &Field::prime(3).unwrap()]);
    let profile = profile_for(seed, MATRICIAL_PROFILES);
    let gen = lift_err(generate_random_extension(seed, &f, &profile))?;
    let r = gen.instance.algebra();
    let env = lift_err(matricial_envelope(&gen.instance, &r.basis()))?;
    ensure(env.space.dim() == r.dim(), "envelope of a basis is not R")?;
    ensure(env.certificate.span(&env.algebra).dim() == r.dim(), "matrix units do not span R")?;
    lift_err(env.certificate.verify(&env.algebra))?;
    let verdict = lift_err(is_matricial(r))?;
    ensure(verdict.is_matricial(), "is_matricial(R) disagrees")?;
    let mut sizes_env = env.certificate.sizes.clone();
    let mut sizes_r = verdict.units.map(|u| u.sizes).unwrap_or_default();
    sizes_env.sort_unstable();
    sizes_r.sort_unstable();
    ensure(sizes_env == sizes_r, "block sizes differ")
}

// 4 ---------------------------------------------------------------------

const Q_DIVISION_PROFILES: &[&str] = &["J=2;Q=1:2", "J=1:2,1;Q=1:2,1", "J=1:2;Q=1:2", "J=2;Q=1:2,1:2", "J=1,1;Q=1:3"];
const F2_DIVISION_PROFILES: &[&str] = &["J=2;Q=1:2", "J=1,1:2;Q=1:3", "J=1:2;Q=1:2,1", "J=2;Q=1:2,1:3"];

fn division_instance(seed: u64) -> std::result::Result<GeneratedExtension, String> {
    let (f, profiles) = if seed.is_multiple_of(2) {
        (Field::rationals(), Q_DIVISION_PROFILES)
    } else {
        (Field::prime(2).unwrap(), F2_DIVISION_PROFILES)
    };
    lift_err(generate_random_extension(seed, &f, &profile_for(seed / 2, profiles)))
}

fn fdss_case(seed: u64) -> Check {
    let gen = division_instance(seed)?;
    let f = gen.instance.algebra().field().clone();
    let r = gen.instance.algebra();
    let j = gen.instance.ideal();
    let mut g = rng(seed ^ 0xfd5);
    let xs: Vec<AlgElement> = if seed.is_multiple_of(3) {
        r.basis()
    } else {
        (0..2).map(|_| random_in(&f, &Subspace::full(&f, r.dim()), &mut g)).collect()
    };
    let env = lift_err(fdss_envelope(&gen.instance, &xs))?;
    for x in &xs {
        ensure(env.space.contains(&f, x), "X not inside S")?;
    }
    ensure(r.is_subalgebra(&env.space), "S is not a subalgebra")?;
    ensure(lift_err(radical(&env.algebra))?.dim() == 0, "rad(S) != 0")?;
    ensure(env.certificate.is_semisimple(), "certificate reports a radical")?;

    let t = unital_hull(r, &gen.complement);
    let ys: Vec<AlgElement> = (0..1 + seed % 2).map(|_| random_in(&f, j, &mut g)).collect();
    let (e, _) = lift_err(t_stable_idempotent(r, j, &t, &ys))?;
    idempotent_postconditions(r, j, &t, &ys, &e)
}

// 5 ---------------------------------------------------------------------

fn window_identity(sys: &algext::extensions::CounterexampleSystem) -> Check {
    let f = &sys.field;
    let w = sys.t_band.window(f, sys.window_blocks);
    let mut pw = Matrix::identity(f, w.rows);
    for _ in 0..sys.p {
        pw = pw.mul(f, &w);
    }
    ensure(pw == Matrix::identity(f, w.rows).scale(f, &sys.alpha), "t^p != αI on the window")
}

fn certificate_holds(sys: &algext::extensions::CounterexampleSystem, y: &[algext::Elem]) -> Check {
    let f = &sys.field;
    let a = &sys.system;
    for c in 0..a.cols {
        let mut s = f.zero();
        for (i, yi) in y.iter().enumerate() {
            s = f.add(&s, &f.mul(yi, a.get(i, c)));
        }
        ensure(f.is_zero(&s), "y A != 0")?;
    }
    let mut s = f.zero();
    for (yi, b) in y.iter().zip(&sys.rhs) {
        s = f.add(&s, &f.mul(yi, b));
    }
    ensure(s == f.one(), "y b != 1")
}

fn counterexample_case(p: u64, n: usize) -> Check {
    let sys = lift_err(counterexample_build(p, n, NuChoice::Jordan))?;
    window_identity(&sys)?;
    match lift_err(counterexample_verify(&sys))? {
        FeasibilityVerdict::Infeasible { certificate, alternating, .. } => {
            certificate_holds(&sys, &certificate)?;
            if let Some(alt) = alternating {
                ensure(alt.holds(), "alternating certificate fails")?;
            }
        }
        FeasibilityVerdict::Feasible { .. } => return Err(format!("(p, n) = ({p}, {n}) is feasible")),
    }
    let sane = lift_err(counterexample_build(p, n, NuChoice::Zero))?;
    window_identity(&sane)?;
    match lift_err(counterexample_verify(&sane))? {
        FeasibilityVerdict::Feasible { .. } => Ok(()),
        FeasibilityVerdict::Infeasible { .. } => Err(format!("ν = 0 sanity mode infeasible at ({p}, {n})")),
    }
}

// 6 ---------------------------------------------------------------------

fn tensor_radical_dim(t: &Algebra) -> std::result::Result<usize, String> {
    let env = lift_err(tensor_product(&opposite(t), t))?;
    Ok(lift_err(radical(&env))?.dim())
}

fn inseparable_cases() -> Outcome {
    let mut results = Vec::new();
    for p in [2u64, 3] {
        let check = || -> Check {
            let k = Field::rational_functions(p, "t").map_err(|e| e.to_string())?;
            let tt = k.generator().ok_or("no generator")?;
            // X^p - t
            let mut m = vec![k.neg(&tt)];
            m.extend((1..p).map(|_| k.zero()));
            m.push(k.one());
            let e = lift_err(polynomial_quotient(&k, &m))?;
            ensure(tensor_radical_dim(&e)? > 0, "E ⊗ E is semisimple")?;
            let sep = lift_err(separability_check(&e))?;
            ensure(!sep.separable(), "separability check passes an inseparable field")?;
            let full = Subspace::full(&k, e.dim());
            match t_stable_idempotent(&e, &Subspace::zero(e.dim()), &full, &[]) {
                Err(AlgError::NotSeparable) => {}
                other => return Err(format!("expected NotSeparable, got {other:?}")),
            }
            let profile = algext::generate::DimProfile::parse(&format!("J=1;Q=1:{p}")).unwrap();
            let gen = lift_err(generate_random_extension(p, &k, &profile))?;
            match fdss_envelope(&gen.instance, &gen.instance.algebra().basis()) {
                Err(AlgError::NotSeparable) => Ok(()),
                other => Err(format!("envelope: expected NotSeparable, got {:?}", other.map(|e| e.space.dim()))),
            }
        };
        results.push((p, check()));
    }
    Outcome::from_batch(results)
}

fn separable_case(seed: u64) -> Check {
    let f = match seed % 5 {
        0 => Field::rationals(),
        1 => Field::prime(2).unwrap(),
        2 => Field::prime(3).unwrap(),
        3 => Field::prime(5).unwrap(),
        _ => Field::rational_functions(3, "t").unwrap(),
    };
    let profiles: &[&str] = if f.is_rational_functions() {
        &["J=1;Q=1:2", "J=1;Q=1,1:2", "J=1:2;Q=1"]
    } else {
        &["J=2;Q=1:2", "J=1;Q=1:2,1", "J=1:2;Q=1:3", "J=1,1;Q=2", "J=2;Q=1:2,1:2"]
    };
    let gen = lift_err(generate_random_extension(seed, &f, &profile_for(seed / 5, profiles)))?;
    let r = gen.instance.algebra();
    let j = gen.instance.ideal();
    let t = unital_hull(r, &gen.complement);
    let t_alg = lift_err(r.subalgebra(&t))?.algebra;
    ensure(tensor_radical_dim(&t_alg)? == 0, "oracle: T^op ⊗ T has a radical")?;
    let mut g = rng(seed ^ 0x5e9);
    let ys = vec![random_in(&f, j, &mut g)];
    match t_stable_idempotent(r, j, &t, &ys) {
        Err(AlgError::NotSeparable) => Err("NotSeparable on a separable T".into()),
        Err(e) => Err(e.to_string()),
        Ok((e, _)) => idempotent_postconditions(r, j, &t, &ys, &e),
    }
}

// 7 ---------------------------------------------------------------------

const BLOCK_MULTISETS: &[&[usize]] = &[
    &[1],
    &[2],
    &[1, 1],
    &[2, 1],
    &[3],
    &[2, 2],
    &[3, 1],
    &[4],
    &[3, 2],
    &[4, 2, 1],
    &[4, 4],
    &[3, 3, 1, 1],
    &[5, 2, 1],
    &[2, 2, 2, 1, 1],
];

fn wedderburn_case(seed: u64) -> Check {
    let f = if seed.is_multiple_of(2) { Field::rationals() } else { Field::prime(3).unwrap() };
    let sizes = BLOCK_MULTISETS[(seed as usize / 2) % BLOCK_MULTISETS.len()];
    ensure(sizes.iter().map(|n| n * n).sum::<usize>() <= 32, "profile too large")?;
    let parts: Vec<Algebra> = sizes.iter().map(|&n| matrix_algebra(&f, n)).collect();
    let a = scrambled(&lift_err(direct_sum(&parts))?, seed);
    let report = lift_err(wedderburn(&a))?;
    ensure(report.is_semisimple(), "radical of a semisimple algebra")?;
    let mut got: Vec<usize> = report.components.iter().map(|c| c.n).collect();
    got.sort_unstable();
    let mut want = sizes.to_vec();
    want.sort_unstable();
    ensure(got == want, format!("sizes {got:?} != {want:?}"))?;
    ensure(report.components.iter().all(|c| c.d == 1), "a split block reported as non-split")
}

fn non_semisimple_case(seed: u64) -> Check {
    let f = if seed.is_multiple_of(2) { Field::rationals() } else { Field::prime(3).unwrap() };
    let (a, rad_dim) = match seed % 3 {
        0 => {
            let n = 2 + (seed as usize / 3) % 3;
            let m = 1 + (seed as usize / 9) % 2;
            let a = lift_err(direct_sum(&[upper_triangular(&f, n), matrix_algebra(&f, m)]))?;
            (a, n * (n - 1) / 2)
        }
        1 => {
            // K[x]/(x^a (x - 1)^b)
            let ea = 1 + (seed as usize / 3) % 3;
            let eb = 2 + (seed as usize / 9) % 2;
            let x = vec![f.zero(), f.one()];
            let x1 = vec![f.neg(&f.one()), f.one()];
            let mut m = vec![f.one()];
            for _ in 0..ea {
                m = algext::poly::mul(&f, &m, &x);
            }
            for _ in 0..eb {
                m = algext::poly::mul(&f, &m, &x1);
            }
            (lift_err(polynomial_quotient(&f, &m))?, ea - 1 + eb - 1)
        }
        _ => {
            let n = 2 + (seed as usize / 3) % 2;
            let a = lift_err(tensor_product(&upper_triangular(&f, n), &matrix_algebra(&f, 2)))?;
            (a, 4 * n * (n - 1) / 2)
        }
    };
    let a = scrambled(&a, seed);
    let rad = lift_err(radical(&a))?;
    ensure(rad.dim() == rad_dim, format!("dim rad = {} != {rad_dim}", rad.dim()))?;
    ensure(is_nilpotent_subspace(&a, &rad), "radical is not nilpotent")?;
    lift_err(a.check_ideal(&rad))?;
    let report = lift_err(wedderburn(&a))?;
    ensure(report.radical == rad, "wedderburn radical differs")?;
    let pres = report.presentation.as_ref().ok_or("no quotient presentation")?;
    ensure(lift_err(radical(&pres.quotient))?.dim() == 0, "A/rad A is not semisimple")
}

// 8 ---------------------------------------------------------------------

fn random_matrix<R: Rng>(f: &Field, n: usize, g: &mut R) -> Matrix {
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, f.random(g));
        }
    }
    m
}

fn embed_case(seed: u64) -> Check {
    let f = if seed.is_multiple_of(2) { Field::prime(3).unwrap() } else { Field::rationals() };
    let mut g = rng(seed ^ 0xe3b);
    let n = 1 + (seed as usize / 2) % 4;
    let rank = g.random_range(0..=n);
    let mut left = Matrix::zeros(&f, n, n);
    let mut right = Matrix::zeros(&f, n, n);
    let a = random_matrix(&f, n, &mut g);
    let b = random_matrix(&f, n, &mut g);
    for i in 0..n {
        for k in 0..rank {
            left.set(i, k, a.get(i, k).clone());
            right.set(k, i, b.get(k, i).clone());
        }
    }
    let x = left.mul(&f, &right);
    let mn = matrix_algebra(&f, n);
    let xv: Vec<_> = (0..n * n).map(|i| x.get(i / n, i % n).clone()).collect();
    let yv = lift_err(quasi_inverse(&mn, &xv))?;
    let y = Matrix::from_rows(n, (0..n).map(|i| yv[i * n..(i + 1) * n].to_vec()).collect());
    let w = lift_err(embed_unit_regular_witness(&f, &x, &y))?;
    let id = Matrix::identity(&f, 2 * n);
    ensure(w.u.mul(&f, &w.u_inv) == id && w.u_inv.mul(&f, &w.u) == id, "u is not invertible")?;
    ensure(w.x_hat.mul(&f, &w.u).mul(&f, &w.x_hat) == w.x_hat, "x^ u x^ != x^")?;
    for i in 0..2 * n {
        for j in 0..2 * n {
            let want = if i < n && j < n { x.get(i, j).clone() } else { f.zero() };
            ensure(*w.x_hat.get(i, j) == want, "x^ is not x in the corner")?;
        }
    }
    Ok(())
}

fn lift_unit_case(seed: u64) -> Check {
    let f = field_by_seed(seed, &[&Field::prime(5).unwrap(), &Field::rationals(), &Field::prime(2).unwrap()]);
    let profile = profile_for(seed, &["J=1;Q=1", "J=2;Q=2", "J=1,1;Q=2,1", "J=2;Q=1:2", "J=1;Q=3"]);
    let gen = lift_err(generate_random_extension(seed, &f, &profile))?;
    let pres = &gen.instance.presentation;
    let quot = &pres.quotient;
    let mut g = rng(seed ^ 0x1f7);
    let full = Subspace::full(&f, quot.dim());
    let u_bar = (0..200)
        .map(|_| random_in(&f, &full, &mut g))
        .find(|u| quot.inverse(u).is_ok())
        .ok_or("no unit found")?;
    let w = lift_err(lift_unit_through_splitting(pres, &gen.complement, &u_bar))?;
    let r = &pres.ambient;
    let w_inv = lift_err(r.inverse(&w))?;
    let one = lift_err(r.one())?;
    ensure(r.mul(&w, &w_inv) == one && r.mul(&w_inv, &w) == one, "w is not a unit")?;
    ensure(pres.project(&w) == u_bar, "π(w) != u_bar")
}

fn unit_regular_case(seed: u64) -> Check {
    let f = field_by_seed(seed, &[&Field::prime(3).unwrap(), &Field::prime(2).unwrap(), &Field::rationals()]);
    let sizes = BLOCK_MULTISETS[(seed as usize) % 10];
    let parts: Vec<Algebra> = sizes.iter().map(|&n| matrix_algebra(&f, n)).collect();
    let a = scrambled(&lift_err(direct_sum(&parts))?, seed);
    let full = Subspace::full(&f, a.dim());
    let mut g = rng(seed ^ 0x0e6);
    for k in 0..10 {
        let x = match k % 3 {
            0 => random_in(&f, &full, &mut g),
            // products of random elements with a random one-sided ideal element
            1 => {
                let z = a.generated_right_ideal(&[random_in(&f, &full, &mut g)]);
                let l = a.mul(&random_in(&f, &full, &mut g), &random_in(&f, &z, &mut g));
                a.mul(&l, &a.basis_element(g.random_range(0..a.dim())))
            }
            _ => a.basis_element(g.random_range(0..a.dim())),
        };
        let w = lift_err(unit_regular_witness(&a, &x))?;
        let (u, u_inv) = w.unit.as_ref().ok_or("no unit")?;
        let one = lift_err(a.one())?;
        ensure(a.mul(u, u_inv) == one && a.mul(u_inv, u) == one, "u is not a unit")?;
        ensure(a.mul(&a.mul(&x, u), &x) == x, "x u x != x")?;
        ensure(a.mul(&a.mul(&x, &w.y), &x) == x, "x y x != x")?;
    }
    Ok(())
}

// -----------------------------------------------------------------------

fn report(n: usize, name: &str, out: &Outcome, elapsed: Duration, budget: Option<Duration>) -> bool {
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let ok = out.failures.is_empty() && in_time && out.total > 0;
    let budget_note = budget.map(|b| format!(", budget {}s", b.as_secs())).unwrap_or_default();
    let notes = if out.notes.is_empty() { String::new() } else { format!("; {}", out.notes.join("; ")) };
    println!(
        "criterion {n} [{name}]: {} ({}/{} cases, {:.2}s{budget_note}{notes})",
        if ok { "PASS" } else { "FAIL" },
        out.passed,
        out.total,
        elapsed.as_secs_f64(),
    );
    for f in out.failures.iter().take(5) {
        println!("    {f}");
    }
    if !in_time {
        println!("    over the time budget");
    }
    ok
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() {
    let suite = Instant::now();
    let mut all = true;

    let (o, t) = timed(|| batch(0..100, lift_case));
    all &= report(1, "lift pipeline", &o, t, Some(Duration::from_secs(30)));

    let (o, t) = timed(|| batch(0..50, centralizer_case));
    all &= report(2, "centralizing idempotent", &o, t, None);

    let (o, t) = timed(|| batch(0..50, matricial_case));
    all &= report(3, "matricial envelope", &o, t, None);

    let (o, t) = timed(|| batch(0..50, fdss_case));
    all &= report(4, "semisimple envelope", &o, t, None);

    let (o, t) = timed(|| {
        let cases: Vec<(u64, usize)> = [2u64, 3].iter().flat_map(|&p| [2usize, 4, 6].map(|n| (p, n))).collect();
        let results = par_map(&cases, |&(p, n)| (p * 100 + n as u64, counterexample_case(p, n)));
        Outcome::from_batch(results).note("seed label = 100 p + n")
    });
    all &= report(5, "counterexample verifier", &o, t, Some(Duration::from_secs(60)));

    let (o, t) = timed(|| {
        let insep = inseparable_cases().note("2 inseparable fields raise NotSeparable");
        insep.merge(batch(0..100, separable_case).note("100 separable seeds never raise it"))
    });
    all &= report(6, "separability gate", &o, t, None);

    let (o, t) = timed(|| {
        let scr = batch(0..100, wedderburn_case).note("100 scrambles");
        scr.merge(batch(0..100, non_semisimple_case).note("100 non-semisimple"))
    });
    all &= report(7, "Wedderburn oracle", &o, t, None);

    let (o, t) = timed(|| {
        let e = batch(0..100, embed_case).note("100 embedded witnesses");
        let l = batch(0..50, lift_unit_case).note("50 lifted units");
        let u = batch(0..50, unit_regular_case).note("500 unit-regular elements");
        e.merge(l).merge(u)
    });
    let total = suite.elapsed();
    all &= report(8, "regularity constructions", &o, t, None);
    let in_budget = total <= Duration::from_secs(300);
    println!(
        "suite: {} in {:.2}s (budget 300s)",
        if all && in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    if !(all && in_budget) {
        std::process::exit(1);
    }
}
