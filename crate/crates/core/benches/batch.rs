use std::hint::black_box;

use algext::algebra::{change_basis, direct_sum, matrix_algebra, upper_triangular};
use algext::generate::{random_basis_change, Rng64};
use algext::par::{map_with, Mode};
use algext::structure::wedderburn;
use algext::{Algebra, Field};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;

/// Scrambled `M_2 ⊕ M_2 ⊕ UT_2` over F_3, one per seed.
fn batch(seeds: u64) -> Vec<Algebra> {
    let f = Field::prime(3).unwrap();
    let base = direct_sum(&[matrix_algebra(&f, 2), matrix_algebra(&f, 2), upper_triangular(&f, 2)]).unwrap();
    (0..seeds)
        .map(|s| {
            let mut rng = Rng64::seed_from_u64(s);
            let p = random_basis_change(&f, base.dim(), &mut rng);
            change_basis(&base, &p).unwrap()
        })
        .collect()
}

fn wedderburn_batch(c: &mut Criterion) {
    let algebras = batch(16);
    let mut group = c.benchmark_group("wedderburn_batch");
    group.sample_size(10);
    for (name, mode) in [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let reports = map_with(mode, &algebras, |a| wedderburn(a).map(|w| w.components.len()));
                black_box(reports)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, wedderburn_batch);
criterion_main!(benches);
