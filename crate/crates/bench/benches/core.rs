use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eulerlab_bench::{dense_system, power_of_sum, regular_part};
use eulerlab_core::cohomology::{verify_flag_ring, FlagRingCheck};
use eulerlab_core::flagsearch::find_free_flag;
use eulerlab_core::sympow::sym_multiplicities;
use eulerlab_core::torusmaps::{circle_example, verify_equivariance, EquivarianceCheck};

fn reduce(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduce");
    for d in [3u32, 5] {
        let sys = dense_system(3, d).unwrap();
        let p = power_of_sum(3, 4 * d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, _| {
            b.iter(|| sys.reduce(black_box(&p)).unwrap())
        });
    }
    g.finish();
}

fn flag_ring(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_flag_ring");
    g.sample_size(10);
    for (n, l) in [(4usize, 2usize), (5, 3), (6, 3)] {
        let opts = FlagRingCheck {
            samples: 20,
            ..Default::default()
        };
        g.bench_function(format!("n{n}_l{l}"), |b| {
            b.iter(|| verify_flag_ring(n, l, &opts).unwrap())
        });
    }
    g.finish();
}

fn sympow(c: &mut Criterion) {
    let u = regular_part(3, 1).unwrap();
    let mut g = c.benchmark_group("sym_multiplicities");
    for d in [7u32, 31, 127] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| sym_multiplicities(black_box(&u), d).unwrap())
        });
    }
    g.finish();
}

fn flag_search(c: &mut Criterion) {
    let u = regular_part(4, 2).unwrap();
    let v = regular_part(4, 1).unwrap();
    c.bench_function("find_free_flag/l4", |b| {
        b.iter(|| find_free_flag(black_box(&u), black_box(&v)).unwrap())
    });
}

fn circle(c: &mut Criterion) {
    let (m, _) = circle_example(5, 7, 2).unwrap();
    let opts = EquivarianceCheck {
        samples: 1000,
        ..Default::default()
    };
    c.bench_function("verify_equivariance/circle_5_7_2", |b| {
        b.iter(|| verify_equivariance(&m, &opts).unwrap())
    });
}

criterion_group!(benches, reduce, flag_ring, sympow, flag_search, circle);
criterion_main!(benches);
