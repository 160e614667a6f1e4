use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use oadlc_bench::case_study_constraints;
use oadlc_core::units::{deg_to_rad, mm_to_m};
use oadlc_core::{check_feasible, exhaustive_search, optimize, GridResolution, Material};

fn design(c: &mut Criterion) {
    let m = Material::dura_lar();
    let constraints = case_study_constraints();
    c.bench_function("check_feasible", |b| {
        b.iter(|| check_feasible(&m, mm_to_m(8.0), deg_to_rad(84.0), black_box(8), &constraints))
    });
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("optimize case study", |b| b.iter(|| optimize(&m, black_box(&constraints)).unwrap()));
    let coarse = GridResolution {
        width_step: mm_to_m(2.0),
        angle_step: deg_to_rad(5.0),
    };
    group.bench_function("exhaustive 2 mm / 5 deg", |b| {
        b.iter(|| exhaustive_search(&m, black_box(&constraints), coarse).unwrap())
    });
    group.finish();
}

criterion_group!(benches, design);
criterion_main!(benches);
