use basephi::expansion::{digit_mask, expand, expand_recursive};
use basephi::theorems::DigitTable;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use std::hint::black_box;

fn single(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand");
    for n in [1_000u64, 1_000_000, 1_000_000_000_000] {
        let big = BigUint::from(n);
        group.bench_with_input(BenchmarkId::new("greedy", n), &big, |b, n| {
            b.iter(|| expand(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recursive", n), &big, |b, n| {
            b.iter(|| expand_recursive(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("mask", n), &n, |b, &n| {
            b.iter(|| digit_mask(black_box(n)).unwrap())
        });
    }
    let huge = BigUint::from(10u32).pow(60);
    group.bench_function("greedy/1e60", |b| {
        b.iter(|| expand(black_box(&huge)).unwrap())
    });
    group.finish();
}

fn table(c: &mut Criterion) {
    c.bench_function("digit_table/100000", |b| {
        b.iter(|| DigitTable::build(black_box(100_000)).unwrap())
    });
}

criterion_group!(benches, single, table);
criterion_main!(benches);
