use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use leibniz_bench::{filiform_i, r_conj, scrambled_zf_model, thm312};
use leibniz_core::catalog::{default_param_samples, verify};
use leibniz_core::format::{parse_algebra, serialize};
use leibniz_core::{adapted_basis_zf, central_series, char_sequence, invariant_profile, leibniz_defects};

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("leibniz_defects");
    for d in [6, 10, 14] {
        let a = thm312(d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &a, |b, a| b.iter(|| leibniz_defects(black_box(a))));
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let a = r_conj(5);
    c.bench_function("central_series R_conj(5)", |b| b.iter(|| central_series(black_box(&a))));
    c.bench_function("profile R_conj(5)", |b| b.iter(|| invariant_profile(black_box(&a))));
    let f = filiform_i(7, 3);
    c.bench_function("char_sequence filiform_I(7,3)", |b| {
        b.iter(|| char_sequence(black_box(&f), 16, 0x5eed))
    });
}

fn adapted(c: &mut Criterion) {
    let a = scrambled_zf_model(5, 4, 11);
    c.bench_function("adapted_basis zf_model(5,4)", |b| b.iter(|| adapted_basis_zf(black_box(&a))));
}

fn text(c: &mut Criterion) {
    let src = serialize(&thm312(12));
    c.bench_function("parse thm312(12)", |b| b.iter(|| parse_algebra(black_box(&src))));
}

fn harness(c: &mut Criterion) {
    let samples = default_param_samples();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("zf_2_3", |b| b.iter(|| verify(Some("zf_2_3"), &samples)));
    g.finish();
}

criterion_group!(benches, identities, invariants, adapted, text, harness);
criterion_main!(benches);
