use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use rainbow_matroids_bench::cycle_tightness_instance;
use rainbow_matroids_core::rainbow::find_rainbow;

fn bench_unsolvable_exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_rainbow_unsolvable");
    for n in [3usize, 4, 5] {
        let inst = cycle_tightness_instance(n);
        group.bench_function(format!("cycle_tightness_n{n}"), |b| {
            b.iter(|| {
                let found = find_rainbow(black_box(&inst)).unwrap();
                assert!(found.is_none());
            })
        });
    }
    group.finish();
}

fn bench_solvable(c: &mut Criterion) {
    let mut inst = cycle_tightness_instance(4);
    // One extra matching turns the instance solvable.
    let mut sets = inst.sets().to_vec();
    sets.push(sets[0]);
    inst = rainbow_matroids_core::rainbow::RainbowInstance::new(
        inst.matroid_m().clone(),
        inst.matroid_n().clone(),
        sets,
        inst.target(),
    )
    .unwrap();
    c.bench_function("find_rainbow_solvable/extended_cycle_n4", |b| {
        b.iter(|| {
            let found = find_rainbow(black_box(&inst)).unwrap();
            assert!(found.is_some());
        })
    });
}

criterion_group!(benches, bench_unsolvable_exhaustive, bench_solvable);
criterion_main!(benches);
