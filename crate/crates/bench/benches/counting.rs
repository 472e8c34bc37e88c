use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dpcolor::{chromatic_polynomial, count_proper, Budget};
use dpcolor_bench::{graph_cycle, loose_cycle, loose_path};

fn bench_count_proper(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("count_proper");
    for (name, h, k) in [
        ("loose_path_r3_m4_k3", loose_path(3, 4), 3usize),
        ("loose_cycle_r3_p4_k3", loose_cycle(3, 4), 3),
        ("graph_cycle_p10_k3", graph_cycle(10), 3),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| count_proper(black_box(&h), black_box(k), budget).unwrap())
        });
    }
    group.finish();
}

fn bench_chromatic_polynomial(c: &mut Criterion) {
    let budget = Budget::default();
    let h = loose_cycle(3, 3);
    c.bench_function("chromatic_polynomial_loose_cycle_r3_p3", |b| {
        b.iter(|| chromatic_polynomial(black_box(&h), budget).unwrap())
    });
}

criterion_group!(benches, bench_count_proper, bench_chromatic_polynomial);
criterion_main!(benches);
