use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zonotopal::algebra::{int, ratio};
use zonotopal::arrangement::{chambers, rational_subspaces, tutte};
use zonotopal::dmspace::dspace_basis;
use zonotopal::gspaces::filtration_report;
use zonotopal::ideals::{hilbert, IdealSpec};
use zonotopal::splines::{eval_t, verify_deletions};
use zonotopal_bench::{planar_five, repeated_unit, spatial_six};

fn combinatorics(c: &mut Criterion) {
    let x = spatial_six();
    c.bench_function("rational_subspaces/spatial_six", |b| b.iter(|| rational_subspaces(black_box(&x))));
    c.bench_function("chambers/spatial_six", |b| b.iter(|| chambers(black_box(&x))));
    c.bench_function("tutte/spatial_six", |b| b.iter(|| tutte(black_box(&x)).unwrap()));
}

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded");
    for (name, x) in [("planar_five", planar_five()), ("spatial_six", spatial_six())] {
        group.bench_with_input(BenchmarkId::new("hilbert", name), &x, |b, x| {
            b.iter(|| hilbert(x, &IdealSpec::CocircuitFull, None).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dspace_basis", name), &x, |b, x| b.iter(|| dspace_basis(x).unwrap()));
        group.bench_with_input(BenchmarkId::new("filtration", name), &x, |b, x| {
            b.iter(|| filtration_report(x).unwrap())
        });
    }
    group.finish();
}

fn splines(c: &mut Criterion) {
    let mut group = c.benchmark_group("truncated_power");
    group.sample_size(20);
    for k in [2, 4, 6] {
        let x = repeated_unit(k);
        group.bench_with_input(BenchmarkId::new("repeated_unit", k), &x, |b, x| {
            b.iter(|| eval_t(x, &[ratio(7, 3)]).unwrap())
        });
    }
    let x = planar_five();
    let p = [ratio(9, 2), ratio(7, 5)];
    assert!(eval_t(&x, &p).is_ok());
    group.bench_function("planar_five/point", |b| b.iter(|| eval_t(&x, black_box(&p)).unwrap()));
    let y = spatial_six();
    let q = [int(5), ratio(13, 3), ratio(7, 2)];
    group.bench_function("spatial_six/point", |b| b.iter(|| eval_t(&y, black_box(&q)).unwrap()));
    group.bench_function("planar_five/deletions", |b| b.iter(|| verify_deletions(&x).unwrap()));
    group.finish();
}

criterion_group!(benches, combinatorics, algebra, splines);
criterion_main!(benches);
