//! Property tests over seeded random inputs for every library layer.

mod common;

use algext::algebra::{
    change_basis, direct_sum, matrix_algebra, opposite, polynomial_quotient, quotient, tensor_product,
    upper_triangular,
};
use algext::generate::{generate_random_extension, random_basis_change, DimProfile};
use algext::linalg::{self, Matrix, Solution, Subspace};
use algext::regular::{corner_capture, quasi_inverse, unit_regular_witness};
use algext::structure::{is_matricial, is_nilpotent_subspace, radical, wedderburn};
use algext::{poly, AlgElement, Algebra, Elem, Field};
use common::{random_in, rng, scrambled};
use proptest::prelude::*;
use rand::Rng;

fn fields() -> Vec<Field> {
    let q = Field::rationals();
    let f2 = Field::prime(2).unwrap();
    let f4 = Field::extension(&f2, vec![f2.one(), f2.one(), f2.one()], "w").unwrap();
    let qi = Field::extension(&q, vec![q.one(), q.zero(), q.one()], "i").unwrap();
    vec![
        q,
        Field::prime(5).unwrap(),
        Field::prime(7).unwrap(),
        f4,
        qi,
        Field::rational_functions(3, "t").unwrap(),
    ]
}

fn field_strategy() -> impl Strategy<Value = Field> {
    let fs = fields();
    (0..fs.len()).prop_map(move |i| fs[i].clone())
}

fn random_matrix<R: Rng>(f: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(f, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, f.random(rng));
        }
    }
    m
}

/// A product `A B` with inner dimension `inner`, so its rank is usually deficient.
fn low_rank<R: Rng>(f: &Field, rows: usize, cols: usize, inner: usize, rng: &mut R) -> Matrix {
    random_matrix(f, rows, inner, rng).mul(f, &random_matrix(f, inner, cols, rng))
}

fn random_element<R: Rng>(a: &Algebra, rng: &mut R) -> AlgElement {
    let f = a.field();
    (0..a.dim()).map(|_| f.random(rng)).collect()
}

/// Small algebras with known shape, picked by index.
fn small_algebra(f: &Field, which: usize) -> Algebra {
    match which % 5 {
        0 => matrix_algebra(f, 2),
        1 => upper_triangular(f, 3),
        2 => direct_sum(&[matrix_algebra(f, 2), upper_triangular(f, 2)]).unwrap(),
        3 => {
            // K[x]/(x^2 (x - 1))
            let m = vec![f.zero(), f.zero(), f.neg(&f.one()), f.one()];
            polynomial_quotient(f, &m).unwrap()
        }
        _ => tensor_product(&upper_triangular(f, 2), &matrix_algebra(f, 2)).unwrap(),
    }
}

fn brute_force_associative(f: &Field, dim: usize, table: &[(usize, usize, usize, Elem)]) -> bool {
    let mut dense = vec![linalg::zero_vec(f, dim); dim * dim];
    for (i, j, k, c) in table {
        dense[i * dim + j][*k] = f.add(&dense[i * dim + j][*k], c);
    }
    let mul = |x: &[Elem], y: &[Elem]| -> Vec<Elem> {
        let mut out = linalg::zero_vec(f, dim);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let c = f.mul(xi, yj);
                if !f.is_zero(&c) {
                    linalg::axpy(f, &mut out, &c, &dense[i * dim + j]);
                }
            }
        }
        out
    };
    let e = |i| linalg::unit_vec(f, dim, i);
    (0..dim).all(|i| {
        (0..dim).all(|j| (0..dim).all(|k| mul(&mul(&e(i), &e(j)), &e(k)) == mul(&e(i), &mul(&e(j), &e(k)))))
    })
}

// six fields, so about 1000 triples and 200 matrices per field
proptest! {
    #![proptest_config(ProptestConfig::with_cases(6000))]

    #[test]
    fn field_axioms(f in field_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (f.random(&mut r), f.random(&mut r), f.random(&mut r));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn canonical_forms_are_unique(f in field_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (f.random(&mut r), f.random(&mut r));
        // the same value reached along two routes must be the same representation
        let via_sum = f.sub(&f.add(&a, &b), &b);
        prop_assert_eq!(&via_sum, &a);
        prop_assert_eq!(a == b, f.is_zero(&f.sub(&a, &b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn extension_generator_is_a_root(f in field_strategy()) {
        if let (Some(m), Some(g)) = (f.minimal_polynomial(), f.generator()) {
            let lifted: Vec<Elem> = m.iter().map(|c| f.embed_base(c)).collect();
            prop_assert!(f.is_zero(&poly::eval(&f, &lifted, &g)));
        }
    }

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(
        f in field_strategy(),
        seed in any::<u64>(),
        rows in 1usize..7,
        cols in 1usize..7,
        inner in 1usize..7,
    ) {
        let mut r = rng(seed);
        let a = low_rank(&f, rows, cols, inner, &mut r);
        let once = linalg::rref(&f, &a);
        let twice = linalg::rref(&f, &once.reduced);
        prop_assert_eq!(&once.reduced, &twice.reduced);
        let kernel = linalg::kernel(&f, &a);
        prop_assert_eq!(linalg::rank(&f, &a) + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(linalg::is_zero_vec(&f, &a.mul_vec(&f, v)));
        }
    }

    #[test]
    fn solve_is_sound(f in field_strategy(), seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
        let mut r = rng(seed);
        let a = low_rank(&f, rows, cols, 1 + (seed as usize % 4), &mut r);
        let b: Vec<Elem> = (0..rows).map(|_| f.random(&mut r)).collect();
        match linalg::solve_with_certificate(&f, &a, &b) {
            Solution::Solved(x) => prop_assert_eq!(a.mul_vec(&f, &x), b),
            Solution::Infeasible(y) => {
                prop_assert!(linalg::is_zero_vec(&f, &a.transpose().mul_vec(&f, &y)));
                let yb = y.iter().zip(&b).fold(f.zero(), |s, (u, v)| f.add(&s, &f.mul(u, v)));
                prop_assert!(!f.is_zero(&yb));
            }
        }
        // a consistent right-hand side is always solved
        let x0: Vec<Elem> = (0..cols).map(|_| f.random(&mut r)).collect();
        let b0 = a.mul_vec(&f, &x0);
        let x = linalg::solve(&f, &a, &b0);
        prop_assert!(x.is_some());
        prop_assert_eq!(a.mul_vec(&f, &x.unwrap()), b0);
    }

    #[test]
    fn integral_basis_spans_the_same_space(seed in any::<u64>(), dim in 1usize..5) {
        let f = Field::rationals();
        let mut r = rng(seed);
        let vs: Vec<_> = (0..dim).map(|_| (0..6).map(|_| f.random(&mut r)).collect()).collect();
        let space = Subspace::span(&f, 6, vs);
        let basis = linalg::reduced_integral_basis(&f, &space).unwrap();
        prop_assert_eq!(basis.len(), space.dim());
        prop_assert_eq!(Subspace::span(&f, 6, basis.clone()), space);
        for v in &basis {
            prop_assert!(v.iter().all(|c| f.as_rational(c).unwrap().is_integer()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn associativity_scan_matches_brute_force(seed in any::<u64>(), which in 0usize..5, perturb in any::<bool>()) {
        let f = Field::prime(3).unwrap();
        let a = small_algebra(&f, which);
        let mut table = a.structure_constants();
        if perturb {
            let mut r = rng(seed);
            let n = a.dim();
            table.push((r.random_range(0..n), r.random_range(0..n), r.random_range(0..n), f.one()));
        }
        let built = Algebra::from_structure_constants(&f, a.dim(), &table);
        prop_assert_eq!(built.is_ok(), brute_force_associative(&f, a.dim(), &table));
    }

    #[test]
    fn corner_products_agree_with_the_ambient(seed in any::<u64>(), which in 0usize..5) {
        let f = Field::prime(5).unwrap();
        let a = scrambled(&small_algebra(&f, which), seed);
        let mut r = rng(seed ^ 1);
        let x = random_element(&a, &mut r);
        let Ok(e) = corner_capture(&a, &[x], None) else { return Ok(()) };
        let c = a.corner(&e).unwrap();
        for (i, bi) in c.basis().iter().enumerate() {
            for (j, bj) in c.basis().iter().enumerate() {
                let inside = c.to_ambient(&c.algebra.mul(&c.algebra.basis_element(i), &c.algebra.basis_element(j)));
                prop_assert_eq!(inside, a.mul3(&e, &a.mul(bi, &a.mul3(&e, bj, &e)), &e));
            }
        }
    }

    #[test]
    fn quotient_section_is_a_right_inverse(seed in any::<u64>(), which in 0usize..5) {
        let f = Field::rationals();
        let a = small_algebra(&f, which);
        let rad = radical(&a).unwrap();
        let pres = quotient(&a, &rad).unwrap();
        let mut r = rng(seed);
        let q = random_element(&pres.quotient, &mut r);
        prop_assert_eq!(pres.project(&pres.section(&q)), q);
        let x = random_element(&a, &mut r);
        let y = random_element(&a, &mut r);
        prop_assert_eq!(
            pres.project(&a.mul(&x, &y)),
            pres.quotient.mul(&pres.project(&x), &pres.project(&y))
        );
    }

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>(), which in 0usize..5) {
        let f = Field::prime(7).unwrap();
        let a = scrambled(&small_algebra(&f, which), seed);
        prop_assert_eq!(opposite(&opposite(&a)).structure_constants(), a.structure_constants());
    }

    #[test]
    fn radical_is_nilpotent_with_semisimple_quotient(seed in any::<u64>(), which in 0usize..5, over_q in any::<bool>()) {
        let f = if over_q { Field::rationals() } else { Field::prime(3).unwrap() };
        let a = scrambled(&small_algebra(&f, which), seed);
        let rad = radical(&a).unwrap();
        prop_assert!(is_nilpotent_subspace(&a, &rad));
        let pres = quotient(&a, &rad).unwrap();
        prop_assert_eq!(radical(&pres.quotient).unwrap().dim(), 0);
    }

    #[test]
    fn wedderburn_dimensions_add_up(seed in any::<u64>(), which in 0usize..5) {
        let f = Field::rationals();
        let a = scrambled(&small_algebra(&f, which), seed);
        let w = wedderburn(&a).unwrap();
        let simple: usize = w.components.iter().map(|c| c.n * c.n * c.d).sum();
        prop_assert_eq!(simple + w.radical.dim(), a.dim());
        let s = &w.semisimple;
        for (i, c) in w.components.iter().enumerate() {
            prop_assert!(s.is_idempotent(&c.central_idempotent));
            for b in s.basis() {
                prop_assert!(s.is_zero(&s.commutator(&c.central_idempotent, &b)));
            }
            for d in &w.components[i + 1..] {
                prop_assert!(s.is_zero(&s.mul(&c.central_idempotent, &d.central_idempotent)));
            }
        }
    }

    #[test]
    fn matrix_units_certificate_spans(seed in any::<u64>(), sizes in prop::collection::vec(1usize..4, 1..3)) {
        let f = Field::prime(5).unwrap();
        let blocks: Vec<Algebra> = sizes.iter().map(|&n| matrix_algebra(&f, n)).collect();
        let a = scrambled(&direct_sum(&blocks).unwrap(), seed);
        let v = is_matricial(&a).unwrap();
        prop_assert!(v.is_matricial());
        let units = v.units.unwrap();
        units.verify(&a).unwrap();
        prop_assert_eq!(units.span(&a).dim(), a.dim());
        let mut got = units.sizes.clone();
        let mut want = sizes.clone();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn quasi_inverses_and_unit_witnesses(seed in any::<u64>(), n in 1usize..4, over_q in any::<bool>()) {
        let f = if over_q { Field::rationals() } else { Field::prime(2).unwrap() };
        let a = scrambled(&matrix_algebra(&f, n), seed);
        let mut r = rng(seed ^ 7);
        // a product of two elements is singular often enough to matter
        let x = a.mul(&random_element(&a, &mut r), &a.pow(&random_element(&a, &mut r), 2).unwrap());
        let y = quasi_inverse(&a, &x).unwrap();
        prop_assert_eq!(a.mul3(&x, &y, &x), x.clone());
        prop_assert_eq!(a.mul3(&y, &x, &y), y);
        let w = unit_regular_witness(&a, &x).unwrap();
        let (u, u_inv) = w.unit.unwrap();
        prop_assert_eq!(a.mul(&u, &u_inv), a.one().unwrap());
        prop_assert_eq!(a.mul3(&x, &u, &x), x);
    }

    #[test]
    fn corner_capture_fixes_its_inputs(seed in any::<u64>(), which in 0usize..5) {
        let f = Field::prime(3).unwrap();
        let a = scrambled(&small_algebra(&f, which), seed);
        let mut r = rng(seed ^ 3);
        let w = wedderburn(&a).unwrap();
        // a few elements of a semisimple corner of the form e A e
        let Some(c) = w.components.first() else { return Ok(()) };
        let s = &w.semisimple;
        let xs: Vec<AlgElement> = (0..2).map(|_| s.mul3(&c.central_idempotent, &random_element(s, &mut r), &c.central_idempotent)).collect();
        let e = corner_capture(s, &xs, None).unwrap();
        prop_assert!(s.is_idempotent(&e));
        for x in &xs {
            prop_assert_eq!(&s.mul(&e, x), x);
            prop_assert_eq!(&s.mul(x, &e), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lifted_complements_satisfy_their_trace(seed in any::<u64>(), over_q in any::<bool>()) {
        let f = if over_q { Field::rationals() } else { Field::prime(5).unwrap() };
        let profile = DimProfile::parse(["J=2;Q=1,1", "J=1,1;Q=2", "J=2,1;Q=1"][seed as usize % 3]).unwrap();
        let gen = generate_random_extension(seed, &f, &profile).unwrap();
        let pres = &gen.instance.presentation;
        let full = Subspace::full(&f, pres.quotient.dim());
        let (t, _) = algext::extensions::lift_subalgebra(pres, &full).unwrap();
        prop_assert_eq!(t.dim(), pres.quotient.dim());
        prop_assert_eq!(t.intersect(&f, &pres.ideal).dim(), 0);
        prop_assert!(pres.ambient.is_subalgebra(&t));
        let mut r = rng(seed);
        let (x, y) = (random_in(&f, &t, &mut r), random_in(&f, &t, &mut r));
        prop_assert_eq!(
            pres.project(&pres.ambient.mul(&x, &y)),
            pres.quotient.mul(&pres.project(&x), &pres.project(&y))
        );
    }

    #[test]
    fn basis_changes_preserve_the_block_multiset(seed in any::<u64>()) {
        let f = Field::prime(3).unwrap();
        let a = direct_sum(&[matrix_algebra(&f, 2), matrix_algebra(&f, 1), matrix_algebra(&f, 2)]).unwrap();
        let mut r = rng(seed);
        let p = random_basis_change(&f, a.dim(), &mut r);
        let b = change_basis(&a, &p).unwrap();
        let mut sizes: Vec<usize> = wedderburn(&b).unwrap().components.iter().map(|c| c.n).collect();
        sizes.sort();
        prop_assert_eq!(sizes, vec![1, 2, 2]);
    }
}
