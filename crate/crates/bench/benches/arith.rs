use adic_bench::{parse, reciprocal};
use adic_core::{add, from_rational, mul, root_stream, to_rational, Base, Fraction};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use std::hint::black_box;

fn arithmetic(c: &mut Criterion) {
    let x = parse("37'14");
    let y = parse("8'3");
    c.bench_function("add 37'14 + 8'3", |b| b.iter(|| add(black_box(&x), black_box(&y))));
    c.bench_function("mul 37'14 * 8'3", |b| b.iter(|| mul(black_box(&x), black_box(&y))));

    let mut group = c.benchmark_group("mul by reciprocal");
    for n in [7u64, 13, 17, 19] {
        let r = reciprocal(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| b.iter(|| mul(r, &x)));
    }
    group.finish();

    let mut group = c.benchmark_group("div_unit");
    let one = parse("0'1");
    for n in [7u64, 97, 983] {
        let d = BigUint::from(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| adic_core::div_unit(&one, d).unwrap())
        });
    }
    group.finish();
}

fn conversion(c: &mut Criterion) {
    let f = Fraction::new(22, 117).unwrap();
    c.bench_function("from_rational 22/117", |b| b.iter(|| from_rational(black_box(&f), Base::TEN)));
    let q = parse("581196'6");
    c.bench_function("to_rational 581196'6", |b| b.iter(|| to_rational(black_box(&q))));
}

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("sqrt 41 stream");
    for depth in [50usize, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(depth), &depth, |b, &n| {
            b.iter(|| root_stream(41, 2, 0).unwrap().residue(n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, arithmetic, conversion, roots);
criterion_main!(benches);
