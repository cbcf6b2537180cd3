use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use elastic_core::curves::{decide_batch, CurveMeasure};
use elastic_core::region::DirectedRegionDecider;
use elastic_core::{Execution, Radius, Tolerance};
use elastic_testkit::gen;

fn curve_batches(c: &mut Criterion) {
    let mut rng = gen::rng(1);
    let pairs: Vec<_> = (0..256)
        .map(|_| (gen::curve(&mut rng, 24, 2), gen::curve(&mut rng, 24, 2)))
        .collect();
    let tol = Tolerance::default();
    let delta = Radius::new(0.3).unwrap();
    let mut group = c.benchmark_group("frechet_batch");
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| decide_batch(CurveMeasure::Frechet, black_box(&pairs), delta, &tol, exec))
        });
    }
    group.finish();
}

fn region_setup(c: &mut Criterion) {
    let mut rng = gen::rng(2);
    let p = gen::star_region(&mut rng, [0.0, 0.0], 1.0, 24, true);
    let q = gen::star_region(&mut rng, [0.2, 0.1], 1.0, 24, true);
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("region_decider_new");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| DirectedRegionDecider::new(black_box(&p), black_box(&q), &tol, exec).interior_clearance())
        });
    }
    group.finish();
}

criterion_group!(benches, curve_batches, region_setup);
criterion_main!(benches);
