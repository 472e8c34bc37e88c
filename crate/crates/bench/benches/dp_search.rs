use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dpcolor::{
    canonicalize, dp_exact, dp_exact_class_pruned, monte_carlo_mean, random_cover, Budget,
};
use dpcolor_bench::{graph_cycle, loose_cycle};

fn bench_dp_exact(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("dp_exact");
    group.sample_size(20);
    for (name, h, k) in [
        ("loose_cycle_r3_p4_k2", loose_cycle(3, 4), 2usize),
        ("loose_cycle_r3_p4_k3", loose_cycle(3, 4), 3),
        ("graph_cycle_p8_k3", graph_cycle(8), 3),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| dp_exact(black_box(&h), black_box(k), budget).unwrap())
        });
    }
    group.finish();
}

fn bench_class_pruning(c: &mut Criterion) {
    let budget = Budget::default();
    let h = loose_cycle(3, 3);
    let mut group = c.benchmark_group("single_slot_search");
    group.bench_function("full_k4", |b| {
        b.iter(|| dp_exact(black_box(&h), 4, budget).unwrap().value)
    });
    group.bench_function("class_pruned_k4", |b| {
        b.iter(|| {
            dp_exact_class_pruned(black_box(&h), 4, budget)
                .unwrap()
                .value
        })
    });
    group.finish();
}

fn bench_canonicalize(c: &mut Criterion) {
    let h = loose_cycle(3, 5);
    let covers: Vec<_> = (0..64).map(|seed| random_cover(&h, 3, seed)).collect();
    c.bench_function("canonicalize_loose_cycle_r3_p5_k3", |b| {
        let mut i = 0;
        b.iter(|| {
            i = (i + 1) % covers.len();
            canonicalize(black_box(&h), black_box(&covers[i]))
        })
    });
}

fn bench_monte_carlo(c: &mut Criterion) {
    let budget = Budget::default();
    let h = loose_cycle(3, 3);
    let mut group = c.benchmark_group("monte_carlo");
    group.sample_size(20);
    group.bench_function("loose_cycle_r3_p3_k2_x100", |b| {
        b.iter(|| monte_carlo_mean(black_box(&h), 2, 100, 7, budget).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_dp_exact,
    bench_class_pruning,
    bench_canonicalize,
    bench_monte_carlo
);
criterion_main!(benches);
