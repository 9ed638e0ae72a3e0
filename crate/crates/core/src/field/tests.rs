use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use super::*;

fn sample_fields() -> Vec<Field> {
    let q = Field::rationals();
    let f5 = Field::prime(5).unwrap();
    let f2t = Field::rational_functions(2, "t").unwrap();
    let t = f2t.generator().unwrap();
    let tau = Field::extension(&f2t, vec![f2t.neg(&t), f2t.zero(), f2t.one()], "tau").unwrap();
    let qi = Field::extension(&q, vec![q.one(), q.zero(), q.one()], "i").unwrap();
    let f9 = Field::extension(&Field::prime(3).unwrap(), vec![f5_like(3, 1), f5_like(3, 0), f5_like(3, 1)], "w")
        .unwrap();
    vec![q, f5, f2t, tau, qi, f9]
}

fn f5_like(p: u64, v: u64) -> Elem {
    Elem::Fp(v % p)
}

#[test]
fn axioms_on_seeded_triples() {
    for f in sample_fields() {
        let mut rng = SplitMix64::seed_from_u64(7);
        for _ in 0..1000 / 6 {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            let c = f.random(&mut rng);
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)), "{f}");
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)), "{f}");
            assert_eq!(f.mul(&a, &b), f.mul(&b, &a), "{f}");
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c)),
                "{f}"
            );
            assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
            if !f.is_zero(&a) {
                assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())), "{f}");
            }
            assert!(f.contains(&f.mul(&a, &b)));
        }
    }
}

#[test]
fn format_parse_round_trip() {
    for f in sample_fields() {
        let mut rng = SplitMix64::seed_from_u64(11);
        for _ in 0..100 {
            let a = f.random(&mut rng);
            let s = f.format(&a);
            assert_eq!(f.parse(&s).unwrap(), a, "{f}: {s}");
        }
    }
}

#[test]
fn generator_satisfies_minimal_polynomial() {
    for f in sample_fields() {
        if let (Some(m), Some(base)) = (f.minimal_polynomial(), f.base()) {
            let g = f.generator().unwrap();
            let lifted: Vec<Elem> = m.iter().map(|c| f.embed_base(c)).collect();
            assert!(f.is_zero(&poly::eval(&f, &lifted, &g)), "{f} over {base}");
        }
    }
}

#[test]
fn worked_examples() {
    let q = Field::rationals();
    let a = q.parse("2/4").unwrap();
    let b = q.parse("1/2").unwrap();
    assert!(q.is_one(&q.add(&a, &b)));

    let f5 = Field::prime(5).unwrap();
    assert_eq!(f5.mul(&f5.from_i64(3), &f5.from_i64(4)), f5.from_i64(2));
    assert_eq!(f5.inv(&f5.from_i64(2)).unwrap(), f5.from_i64(3));

    let k = Field::rational_functions(2, "t").unwrap();
    let t = k.generator().unwrap();
    assert!(k.is_one(&k.mul(&t, &k.inv(&t).unwrap())));
    assert_eq!(k.format(&k.parse("t/(t+1)").unwrap()), "t/(t+1)");

    let l = Field::extension(&k, vec![k.neg(&t), k.zero(), k.one()], "tau").unwrap();
    let tau = l.generator().unwrap();
    assert_eq!(l.mul(&tau, &tau), l.embed_base(&t));
    assert_eq!(l.parse("tau*tau").unwrap(), l.parse("t").unwrap());

    let err = Field::extension(&q, vec![q.from_i64(-1), q.zero(), q.one()], "a").unwrap_err();
    assert_eq!(err.code(), "ReduciblePolynomial");
    assert_eq!(Field::prime(4).unwrap_err().code(), "NotPrime");
    assert!(k.inv(&k.zero()).is_err());
}

#[test]
fn frobenius_root_inverts_power() {
    let f9 = &sample_fields()[5];
    let mut rng = SplitMix64::seed_from_u64(3);
    for _ in 0..50 {
        let a = f9.random(&mut rng);
        let r = f9.frobenius_root(&a, 1).unwrap();
        assert_eq!(f9.pow_u64(&r, 3), a);
    }
}

#[test]
fn power_subfield_decomposition() {
    let k = Field::rational_functions(3, "t").unwrap();
    let t = k.generator().unwrap();
    let mut rng = SplitMix64::seed_from_u64(5);
    for _ in 0..50 {
        let a = k.div(&k.random(&mut rng), &k.add(&k.random(&mut rng), &k.pow_u64(&t, 2))).unwrap();
        let parts = k.split_over_power_subfield(&a, 3);
        let mut acc = k.zero();
        for (r, c) in parts.iter().enumerate() {
            acc = k.add(&acc, &k.mul(&k.pow_u64(&t, r as u64), &k.inflate_ratfn(c, 3)));
        }
        assert_eq!(acc, a);
    }
}

#[test]
fn descriptor_round_trip_and_mismatch() {
    for f in sample_fields() {
        let json = serde_json::to_string(&f.descriptor()).unwrap();
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(Field::make(&back).unwrap(), f);
    }
    let a = Scalar::parse(&Field::rationals(), "1").unwrap();
    let b = Scalar::parse(&Field::prime(5).unwrap(), "1").unwrap();
    assert_eq!(scalar_arith(&a, &b, ArithOp::Add).unwrap_err().code(), "FieldMismatch");
}
