use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rootzone::bounds::{self, ub_bp3, ub_bp7};
use rootzone::fuzz::{run_fuzz, Family, FuzzConfig};
use rootzone::{find_roots, BoundId, ComparisonReport};
use rootzone_bench::{fixture, DEGREES};

fn single_bounds(c: &mut Criterion) {
    let mut g = c.benchmark_group("single_bound");
    for n in DEGREES {
        let p = fixture(n);
        g.bench_with_input(BenchmarkId::new("BP3", n), &p, |b, p| {
            b.iter(|| ub_bp3(black_box(p)))
        });
        g.bench_with_input(BenchmarkId::new("BP7", n), &p, |b, p| {
            b.iter(|| ub_bp7(black_box(p)))
        });
    }
    g.finish();
}

fn all_bounds(c: &mut Criterion) {
    let mut g = c.benchmark_group("all_bounds");
    for n in DEGREES {
        let p = fixture(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| bounds::evaluate_all(black_box(p), &BoundId::ALL))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("find_roots");
    for n in DEGREES {
        let p = fixture(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| find_roots(black_box(p)))
        });
    }
    g.finish();
}

fn report(c: &mut Criterion) {
    let p = fixture(15);
    c.bench_function("report_with_oracle/15", |b| {
        b.iter(|| ComparisonReport::build(black_box(&p), &BoundId::ALL, true).unwrap())
    });
}

fn fuzz(c: &mut Criterion) {
    let mut g = c.benchmark_group("fuzz");
    g.sample_size(10);
    g.bench_function("mixed_100", |b| {
        b.iter(|| {
            run_fuzz(FuzzConfig {
                count: 100,
                family: Family::Mixed,
                ..FuzzConfig::default()
            })
        })
    });
    g.finish();
}

criterion_group!(benches, single_bounds, all_bounds, oracle, report, fuzz);
criterion_main!(benches);
