use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use oadlc_bench::square_layer;
use oadlc_core::pattern::{read_svg, segments_csv, write_svg};
use oadlc_core::{generate_layer_pattern, TabSpec};

fn pattern(c: &mut Criterion) {
    let layer = square_layer(6.0, 40, 30.0);
    let tabs = TabSpec::default();
    c.bench_function("generate n=40", |b| {
        b.iter(|| generate_layer_pattern(black_box(&layer), &tabs, None).unwrap())
    });
    let p = generate_layer_pattern(&layer, &tabs, None).unwrap();
    c.bench_function("write svg n=40", |b| b.iter(|| write_svg(black_box(&p)).unwrap()));
    let svg = write_svg(&p).unwrap();
    c.bench_function("read svg n=40", |b| b.iter(|| read_svg(black_box(&svg)).unwrap()));
    c.bench_function("segments csv n=40", |b| b.iter(|| segments_csv(black_box(&p))));
}

criterion_group!(benches, pattern);
criterion_main!(benches);
