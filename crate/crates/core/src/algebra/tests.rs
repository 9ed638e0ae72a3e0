use super::*;
use crate::field::Field;

fn e(a: &Algebra, i: usize) -> AlgElement {
    a.basis_element(i)
}

#[test]
fn matrix_units_multiply() {
    let f = Field::prime(5).unwrap();
    let m2 = matrix_algebra(&f, 2);
    assert_eq!(m2.dim(), 4);
    assert!(m2.is_unital());
    // e12 e21 = e11
    assert_eq!(m2.mul(&e(&m2, 1), &e(&m2, 2)), e(&m2, 0));
    assert!(m2.check_associativity().is_ok());
}

#[test]
fn zero_table_is_non_unital() {
    let f = Field::rationals();
    let z = Algebra::from_structure_constants(&f, 3, &[]).unwrap();
    assert!(!z.is_unital());
}

#[test]
fn non_associative_table_rejected() {
    let f = Field::rationals();
    let one = f.one();
    let entries = vec![(0, 0, 1, one.clone()), (1, 0, 2, one)];
    match Algebra::from_structure_constants(&f, 3, &entries) {
        Err(AlgError::NonAssociative(..)) => {}
        other => panic!("expected NonAssociative, got {other:?}"),
    }
}

#[test]
fn direct_sum_and_corner() {
    let q = Field::rationals();
    let s = direct_sum(&[matrix_algebra(&q, 1), matrix_algebra(&q, 2)]).unwrap();
    assert_eq!(s.dim(), 5);
    assert!(s.is_unital());
    let m3 = matrix_algebra(&q, 3);
    let p = m3.add(&e(&m3, 0), &e(&m3, 4));
    let c = m3.corner(&p).unwrap();
    assert_eq!(c.algebra.dim(), 4);
    assert_eq!(c.to_ambient(c.algebra.identity().unwrap()), p);
}

#[test]
fn generated_spaces() {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    assert_eq!(m2.generated_subalgebra(&[e(&m2, 1), e(&m2, 2)]).dim(), 4);
    assert_eq!(m2.generated_subalgebra(&[]).dim(), 0);
    assert_eq!(m2.generated_ideal(&[e(&m2, 0)]).dim(), 4);
    let s = direct_sum(&[m2.clone(), m2.clone()]).unwrap();
    assert_eq!(s.generated_ideal(&[s.basis_element(1)]).dim(), 4);
}

#[test]
fn quotient_by_summand() {
    let q = Field::rationals();
    let s = direct_sum(&[matrix_algebra(&q, 2), matrix_algebra(&q, 1)]).unwrap();
    let j = s.span(vec![s.basis_element(4)]);
    let pres = quotient(&s, &j).unwrap();
    assert_eq!(pres.quotient.dim(), 4);
    pres.verify().unwrap();
    let bad = s.span(vec![s.basis_element(1)]);
    assert_eq!(quotient(&s, &bad).unwrap_err().code(), "NotIdeal");
}

#[test]
fn tensor_and_opposite() {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let k = matrix_algebra(&q, 1);
    let t = tensor_product(&k, &m2).unwrap();
    assert_eq!(t.structure_constants(), m2.structure_constants());
    let tri = upper_triangular(&q, 2);
    assert_eq!(opposite(&opposite(&tri)).structure_constants(), tri.structure_constants());
    assert_eq!(tensor_product(&polynomial_quotient(&q, &[q.one(), q.zero(), q.one()]).unwrap(), &m2).unwrap().dim(), 8);
}

#[test]
fn min_poly_and_inverse() {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let x = m2.add(&e(&m2, 1), &e(&m2, 2)); // swap matrix, x^2 = 1
    let mp = m2.min_poly(&x);
    assert_eq!(mp, vec![q.from_i64(-1), q.zero(), q.one()]);
    assert_eq!(m2.inverse(&x).unwrap(), x);
    assert_eq!(m2.inverse(&e(&m2, 0)).unwrap_err().code(), "NotAUnit");
}

#[test]
fn json_round_trip() {
    let f = Field::prime(3).unwrap();
    let a = upper_triangular(&f, 3);
    let text = serde_json::to_string(&a.to_json()).unwrap();
    let b = Algebra::parse_json(&text).unwrap();
    assert_eq!(a, b);
}
