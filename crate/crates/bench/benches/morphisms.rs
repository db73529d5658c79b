use basephi::morphisms::{gamma, gamma_plus, Letter};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn fixed_points(c: &mut Criterion) {
    let g = gamma();
    c.bench_function("gamma/fixed_point/1e6", |b| {
        b.iter(|| {
            g.fixed_point_prefix(Letter(0), black_box(1_000_000))
                .unwrap()
        })
    });
    c.bench_function("gamma/iterate/25", |b| {
        b.iter(|| g.iterate(&[Letter(0)], black_box(25)).unwrap())
    });
    c.bench_function("gamma_plus/build/k=8", |b| {
        b.iter(|| gamma_plus(black_box(8)).unwrap())
    });
}

criterion_group!(benches, fixed_points);
criterion_main!(benches);
