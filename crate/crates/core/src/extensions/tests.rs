use super::*;
use crate::algebra::{direct_sum, matrix_algebra, polynomial_quotient, tensor_product};
use crate::generate::{generate_random_extension, DimProfile};
use crate::linalg::Subspace;
use crate::Field;

fn f5() -> Field {
    Field::prime(5).unwrap()
}

#[test]
fn lift_with_zero_ideal_is_the_section() {
    let f = f5();
    let r = matrix_algebra(&f, 2);
    let pres = crate::algebra::quotient(&r, &Subspace::zero(4)).unwrap();
    let a = Subspace::full(&f, 4);
    let (t, trace) = lift_subalgebra(&pres, &a).unwrap();
    assert_eq!(t.dim(), 4);
    assert!(trace.defects.iter().all(|v| r.is_zero(v)));
    assert!(r.is_zero(&trace.f));
}

#[test]
fn lift_corrects_perturbed_lifts() {
    let f = f5();
    let r = direct_sum(&[matrix_algebra(&f, 2), matrix_algebra(&f, 1)]).unwrap();
    let j = r.span(vec![r.basis_element(4)]);
    let pres = crate::algebra::quotient(&r, &j).unwrap();
    let a = Subspace::full(&f, 4);
    let noise: Vec<Vec<crate::Elem>> = (0..4).map(|i| vec![f.from_i64(i as i64 + 1)]).collect();
    let lifts = perturbed_lifts(&pres, &a, &noise);
    let (t, trace) = lift_subalgebra_from(&pres, &a, &lifts).unwrap();
    assert_eq!(t.intersect(&f, &j).dim(), 0);
    assert!(r.is_subalgebra(&t));
    assert!(!r.is_zero(&trace.f));
    trace.verify(&pres, &a).unwrap();
}

#[test]
fn lift_rejects_non_subalgebra() {
    let f = f5();
    let r = matrix_algebra(&f, 2);
    let pres = crate::algebra::quotient(&r, &Subspace::zero(4)).unwrap();
    let a = r.span(vec![r.basis_element(1), r.basis_element(2)]);
    assert!(matches!(lift_subalgebra(&pres, &a), Err(crate::AlgError::NotASubalgebra(_))));
}

#[test]
fn lift_on_generated_instances() {
    for seed in 0..10 {
        let g = generate_random_extension(seed, &f5(), &DimProfile::split(&[2], &[1, 1])).unwrap();
        let pres = &g.instance.presentation;
        let a = Subspace::full(pres.quotient.field(), pres.quotient.dim());
        let (t, _) = lift_subalgebra(pres, &a).unwrap();
        assert_eq!(t.dim(), 2);
    }
}

#[test]
fn centralizer_zero_y() {
    let f = f5();
    let g = generate_random_extension(3, &f, &DimProfile::split(&[2], &[1])).unwrap();
    let r = g.instance.algebra();
    let t = r.span(vec![r.one().unwrap()]);
    let (e, _) = centralizing_idempotent(r, g.instance.ideal(), &t, &[r.zero()]).unwrap();
    assert!(r.is_zero(&e));
}

#[test]
fn centralizer_with_empty_complement() {
    let f = f5();
    let r = matrix_algebra(&f, 2);
    let j = Subspace::full(&f, 4);
    let y = vec![r.basis_element(1)];
    let (e, trace) = centralizing_idempotent(&r, &j, &Subspace::zero(4), &y).unwrap();
    assert_eq!(e, r.one().unwrap());
    assert!(trace.q_blocks.is_empty());
}

#[test]
fn centralizer_on_twisted_complement() {
    let f = Field::prime(3).unwrap();
    for seed in 0..5 {
        let g = generate_random_extension(seed, &f, &DimProfile::split(&[4], &[2])).unwrap();
        let r = g.instance.algebra();
        assert_eq!(r.dim(), 20);
        let j = g.instance.ideal();
        let ys = vec![j.basis()[0].clone(), j.basis()[5].clone()];
        let (e, trace) = centralizing_idempotent(r, j, &g.complement, &ys).unwrap();
        assert!(j.contains(&f, &e) && r.is_idempotent(&e));
        assert_eq!(trace.routes, vec![BlockRoute::Capture]);
        for y in &ys {
            assert_eq!(r.mul3(&e, y, &e), *y);
        }
        for t in g.complement.basis() {
            assert!(r.is_zero(&r.commutator(&e, t)));
        }
    }
}

#[test]
fn tensor_route_with_trivial_t_is_a_capture() {
    let f = f5();
    let r = matrix_algebra(&f, 3);
    let one = r.one().unwrap();
    let t = r.span(vec![one]);
    let j = Subspace::full(&f, 9);
    let ys = vec![r.basis_element(1)];
    let (e, trace) = t_stable_idempotent(&r, &j, &t, &ys).unwrap();
    assert_eq!(r.mul3(&e, &ys[0], &e), ys[0]);
    assert_eq!(trace.v_space.dim(), 3);
}

#[test]
fn tensor_route_over_f4() {
    let f2 = Field::prime(2).unwrap();
    let m = vec![f2.one(), f2.one(), f2.one()];
    let e = polynomial_quotient(&f2, &m).unwrap();
    let sep = separability_check(&e).unwrap();
    assert!(sep.separable());
    let g = generate_random_extension(
        11,
        &f2,
        &DimProfile::parse("J=2:2;Q=1:2").unwrap(),
    )
    .unwrap();
    let r = g.instance.algebra();
    let j = g.instance.ideal();
    // T = complement plus (1 - 1_T) so that 1_T = 1_R
    let ys = vec![j.basis()[1].clone(), j.basis()[3].clone()];
    let t_full = unital_hull(r, &g.complement);
    let (e, _) = t_stable_idempotent(r, j, &t_full, &ys).unwrap();
    assert!(r.is_idempotent(&e));
}

fn unital_hull(r: &crate::Algebra, t: &Subspace) -> Subspace {
    let emb = r.subalgebra(t).unwrap();
    let one_t = emb.to_ambient(&emb.algebra.one().unwrap());
    let c = r.sub(&r.one().unwrap(), &one_t);
    let mut v = t.basis().to_vec();
    v.push(c);
    r.span(v)
}

#[test]
fn inseparable_t_is_rejected() {
    let k = Field::rational_functions(2, "t").unwrap();
    let tt = k.generator().unwrap();
    let m = vec![k.neg(&tt), k.zero(), k.one()];
    let e = polynomial_quotient(&k, &m).unwrap();
    let sep = separability_check(&e).unwrap();
    assert_eq!(sep.tensor_radical_dim, Some(2));
    let r = tensor_product(&matrix_algebra(&k, 1), &e).unwrap();
    let t = Subspace::full(&k, 2);
    let res = t_stable_idempotent(&r, &Subspace::zero(2), &t, &[]);
    assert!(matches!(res, Err(crate::AlgError::NotSeparable)));
}

#[test]
fn counterexample_small_cases() {
    for (p, n) in [(2, 2), (3, 4), (2, 6)] {
        let sys = counterexample_build(p, n, NuChoice::Jordan).unwrap();
        let v = counterexample_verify(&sys).unwrap();
        match &v {
            FeasibilityVerdict::Infeasible { alternating, descended_to_prime_field, .. } => {
                assert!(descended_to_prime_field);
                let alt = alternating.as_ref().unwrap();
                assert!(alt.holds(), "p={p} n={n}: {alt:?}");
            }
            _ => panic!("p={p} n={n} feasible"),
        }
        let sanity = counterexample_build(p, n, NuChoice::Zero).unwrap();
        match counterexample_verify(&sanity).unwrap() {
            FeasibilityVerdict::Feasible { e_window, .. } => {
                let y = sanity.y_window.clone();
                let k = e_window.rows;
                assert!((0..k).all(|i| (0..k).all(|j| e_window.get(i, j) == y.get(i, j))));
            }
            _ => panic!("sanity run infeasible"),
        }
    }
}

#[test]
fn counterexample_parameter_bounds() {
    assert!(counterexample_build(7, 2, NuChoice::Jordan).is_err());
    assert!(counterexample_build(2, 3, NuChoice::Jordan).is_err());
    assert!(counterexample_build(2, 10, NuChoice::Jordan).is_err());
}

fn star_on(g: &crate::generate::GeneratedExtension, ys: Vec<crate::AlgElement>) -> StarOutcome {
    let problem = StarProblem::Algebra {
        r: g.instance.algebra().clone(),
        j: g.instance.ideal().clone(),
        t: g.complement.clone(),
        y: ys,
    };
    condition_star_check(&problem).unwrap()
}

#[test]
fn star_dispatch_routes() {
    let f2 = Field::prime(2).unwrap();
    let g = generate_random_extension(5, &f2, &DimProfile::parse("J=2;Q=1").unwrap()).unwrap();
    let y = vec![g.instance.ideal().basis()[2].clone()];
    assert_eq!(star_on(&g, y).route(), StarRoute::Matricial);

    // F_4 as a complement inside an M_2(F_2)-based algebra
    let g = generate_random_extension(5, &f2, &DimProfile::parse("J=2,1:2;Q=1:2").unwrap()).unwrap();
    let j = g.instance.ideal();
    let y = vec![j.basis()[0].clone(), j.basis()[4].clone()];
    let out = star_on(&g, y.clone());
    assert!(matches!(out.route(), StarRoute::Tensor | StarRoute::CornerTensor));
    if let StarOutcome::Found { e, .. } = out {
        let r = g.instance.algebra();
        super::tensor::check_idempotent(r, j, &g.complement, &y, &e).unwrap();
    } else {
        panic!("tensor route failed");
    }

    let out = condition_star_check(&StarProblem::Counterexample { p: 2, n: 2 }).unwrap();
    assert!(matches!(out, StarOutcome::Failed(ref r) if r.route == StarRoute::Counterexample));
}

#[test]
fn star_linear_search_on_inseparable_complement() {
    let k = Field::rational_functions(2, "t").unwrap();
    let g = generate_random_extension(2, &k, &DimProfile::parse("J=1:2;Q=1:2").unwrap()).unwrap();
    let j = g.instance.ideal();
    let y = vec![j.basis()[0].clone()];
    let out = star_on(&g, y.clone());
    match out {
        StarOutcome::Found { e, route } => {
            assert_eq!(route, StarRoute::LinearSearch);
            super::tensor::check_idempotent(g.instance.algebra(), j, &g.complement, &y, &e).unwrap();
        }
        StarOutcome::Failed(r) => panic!("{r:?}"),
    }
}

#[test]
fn envelope_examples() {
    let q = Field::rationals();
    // J = 0
    let r = direct_sum(&[matrix_algebra(&q, 2), matrix_algebra(&q, 1)]).unwrap();
    let ext = crate::ExtensionInstance::new(r.clone(), vec![], crate::ClassLabel::Matricial, crate::ClassLabel::Matricial)
        .unwrap();
    let out = matricial_envelope(&ext, &[r.basis_element(1)]).unwrap();
    assert_eq!(out.space.dim(), 5);
    assert_eq!(out.trace.route, EnvelopeRoute::ZeroIdeal);
    // X empty
    let out = matricial_envelope(&ext, &[]).unwrap();
    assert_eq!(out.space.dim(), 0);

    // J ≅ M_2(Q), R/J ≅ Q ⊕ Q, X a basis
    let g = generate_random_extension(4, &q, &DimProfile::split(&[2], &[1, 1])).unwrap();
    let r = g.instance.algebra();
    let out = matricial_envelope(&g.instance, &r.basis()).unwrap();
    assert_eq!(out.space.dim(), r.dim());
    assert_eq!(out.trace.route, EnvelopeRoute::MatricialQuotient);

    // J ≅ M_2(Q), R/J ≅ Q(i)
    let g = generate_random_extension(4, &q, &DimProfile::parse("J=2;Q=1:2").unwrap()).unwrap();
    let r = g.instance.algebra();
    let out = fdss_envelope(&g.instance, &r.basis()).unwrap();
    let mut ds: Vec<usize> = out.certificate.components.iter().map(|c| c.d).collect();
    ds.sort();
    assert_eq!(ds, vec![1, 2]);
    assert_eq!(out.trace.route, EnvelopeRoute::DivisionQuotient);
    // a single element gives a proper envelope
    let x = r.add(&r.basis_element(0), &r.basis_element(3));
    let out = fdss_envelope(&g.instance, &[x]).unwrap();
    assert!(out.certificate.is_semisimple());
}

#[test]
fn envelope_requires_certificates_and_separability() {
    let q = Field::rationals();
    let g = generate_random_extension(4, &q, &DimProfile::parse("J=2;Q=1:2").unwrap()).unwrap();
    let r = g.instance.algebra();
    assert!(matches!(
        matricial_envelope(&g.instance, &r.basis()),
        Err(crate::AlgError::CertificateMissing(_))
    ));
    let k = Field::rational_functions(2, "t").unwrap();
    let g = generate_random_extension(1, &k, &DimProfile::parse("J=1:2;Q=1:2").unwrap()).unwrap();
    let r = g.instance.algebra();
    assert!(matches!(fdss_envelope(&g.instance, &r.basis()), Err(crate::AlgError::NotSeparable)));
}
