//! Hot-path benchmarks: per-trial sampling cost, the branch-and-bound
//! independence number, the staged Hochster search in both density regimes,
//! and full oracle enumeration at a desk-scale n.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rmi_core::{
    enumerate_event, find_hochster, independence_number, sample_er, EventSpec, Graph, SampleSpec,
};
use std::hint::black_box;

fn fixed_graph(n: usize, p: f64) -> Graph {
    sample_er(&SampleSpec::new(n, p, 0xBE7C4, 0)).unwrap()
}

fn bench_sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_er");
    for &n in &[50usize, 200, 500] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            let mut trial = 0u64;
            b.iter(|| {
                trial += 1;
                black_box(sample_er(&SampleSpec::new(n, 0.1, 42, trial)).unwrap())
            });
        });
    }
    group.finish();
}

fn bench_independence(c: &mut Criterion) {
    let mut group = c.benchmark_group("independence_number");
    for &(n, p) in &[(40usize, 0.2f64), (40, 0.5), (80, 0.5)] {
        let g = fixed_graph(n, p);
        let id = format!("n{n}_p{p}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &g, |b, g| {
            b.iter(|| black_box(independence_number(g)));
        });
    }
    group.finish();
}

fn bench_hochster(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_hochster");
    // sparse graphs exercise the odd-hole stage, dense ones the triangle scan
    for &(n, p) in &[(100usize, 0.03f64), (100, 0.3), (200, 0.1)] {
        let g = fixed_graph(n, p);
        let id = format!("n{n}_p{p}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &g, |b, g| {
            b.iter(|| black_box(find_hochster(g)));
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_event");
    group.sample_size(10);
    group.bench_function("n6_has_cycle", |b| {
        b.iter(|| black_box(enumerate_event(6, &EventSpec::HasCycle, 7).unwrap()));
    });
    group.bench_function("n6_hochster", |b| {
        b.iter(|| black_box(enumerate_event(6, &EventSpec::Hochster, 7).unwrap()));
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_sampling,
    bench_independence,
    bench_hochster,
    bench_oracle
);
criterion_main!(benches);
