use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rescope_bench::{reduction_inputs, telescoper_inputs};
use rescope_core::{diagonal_ode, ez_pipeline, find_telescoper, parse_ratfunc, reduce};

fn reductions(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduce");
    for (name, case, f) in reduction_inputs() {
        g.bench_function(name, |b| b.iter(|| reduce(black_box(&f), &case).unwrap()));
    }
    g.finish();
}

fn telescopers(c: &mut Criterion) {
    let mut g = c.benchmark_group("telescope");
    g.sample_size(10);
    for (name, case, f) in telescoper_inputs() {
        g.bench_function(name, |b| {
            b.iter(|| find_telescoper(black_box(&f), &case, None).unwrap())
        });
    }
    g.finish();
}

fn diagonals(c: &mut Criterion) {
    let mut g = c.benchmark_group("diagonal");
    g.sample_size(10);
    let f = parse_ratfunc("1/(1-t-x)").unwrap();
    g.bench_function("central_binomial", |b| {
        b.iter(|| diagonal_ode(black_box(&f)).unwrap())
    });
    g.bench_function("word_example", |b| {
        b.iter(|| ez_pipeline(black_box(12)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, reductions, telescopers, diagonals);
criterion_main!(benches);
