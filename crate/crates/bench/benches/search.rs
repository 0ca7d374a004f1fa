use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mobius_core::{metric_dimension, run_sweep, DistanceMatrix, Ladder, LadderSpec, SweepConfig};

fn all_pairs(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_pairs");
    for (m, n) in [(7, 4), (10, 2), (14, 3), (41, 5)] {
        let ladder = Ladder::build(LadderSpec::new(m, n).unwrap());
        group.bench_with_input(BenchmarkId::from_parameter(format!("M({m},{n})")), &ladder, |b, ladder| {
            b.iter(|| DistanceMatrix::all_pairs(black_box(ladder)))
        });
    }
    group.finish();
}

fn dimension(c: &mut Criterion) {
    let mut group = c.benchmark_group("metric_dimension");
    for (m, n) in [(7, 4), (10, 2), (9, 5), (11, 4)] {
        let matrix = DistanceMatrix::all_pairs(&Ladder::build(LadderSpec::new(m, n).unwrap()));
        group.bench_with_input(BenchmarkId::from_parameter(format!("M({m},{n})")), &matrix, |b, matrix| {
            b.iter(|| metric_dimension(black_box(matrix), None).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let config = SweepConfig::default();
    group.bench_function("default", |b| b.iter(|| run_sweep(black_box(&config)).unwrap()));
    group.finish();
}

criterion_group!(benches, all_pairs, dimension, sweep);
criterion_main!(benches);
