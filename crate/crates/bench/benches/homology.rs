use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use rainbow_matroids_bench::cycle_independence_complex;
use rainbow_matroids_core::homology::{betti_vector, eta};

fn bench_eta(c: &mut Criterion) {
    let mut group = c.benchmark_group("eta");
    for n in [8usize, 10, 12] {
        let complex = cycle_independence_complex(n);
        group.bench_function(format!("independence_complex_c{n}"), |b| {
            b.iter(|| eta(black_box(&complex)).unwrap())
        });
    }
    group.finish();
}

fn bench_betti_vector(c: &mut Criterion) {
    let complex = cycle_independence_complex(12);
    c.bench_function("betti_vector/independence_complex_c12", |b| {
        b.iter(|| betti_vector(black_box(&complex)).unwrap())
    });
}

criterion_group!(benches, bench_eta, bench_betti_vector);
criterion_main!(benches);
