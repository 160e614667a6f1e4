use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use oadlc_bench::{case_study_assembly, square_layer};
use oadlc_core::{analyze, layer_bending, layer_inplane, triangular_moduli, Assembly};

fn model(c: &mut Criterion) {
    let layer = square_layer(6.0, 40, 30.0);
    c.bench_function("moduli", |b| b.iter(|| triangular_moduli(black_box(&layer)).unwrap()));
    c.bench_function("layer springs n=40", |b| {
        b.iter(|| (layer_inplane(black_box(&layer)).unwrap(), layer_bending(black_box(&layer)).unwrap()))
    });
    let a = case_study_assembly();
    c.bench_function("analyze case study", |b| b.iter(|| analyze(black_box(&a), 0.3, 0.0).unwrap()));
    let wide = Assembly::identical(square_layer(2.0, 200, 60.0));
    c.bench_function("analyze n=200", |b| b.iter(|| analyze(black_box(&wide), 0.3, 0.0).unwrap()));
}

criterion_group!(benches, model);
criterion_main!(benches);
