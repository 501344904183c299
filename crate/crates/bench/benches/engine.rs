use std::hint::black_box;

use courant_bench::{flat, sections};
use courant_core::axioms::check_axiom;
use courant_core::{classify, Admissibility, CheckId, DoubledRealization, GenericSectionFamily};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn c_bracket(c: &mut Criterion) {
    let mut g = c.benchmark_group("c_bracket");
    for dim in 1..=3 {
        let r = flat(dim);
        let s = sections(&r, 2);
        g.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, _| {
            b.iter(|| r.c_bracket(black_box(&s[0]), black_box(&s[1])).unwrap())
        });
    }
    g.finish();
}

fn classify_flat(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for (name, adm) in [("unrestricted", Admissibility::unrestricted(2)), ("x-only", Admissibility::x_only(2))] {
        let r = DoubledRealization::flat(2, adm);
        let family = GenericSectionFamily::new(2, 3, 0);
        g.bench_function(name, |b| b.iter(|| classify(&r, &family, None).unwrap()));
    }
    g.finish();
}

fn metric_compatibility(c: &mut Criterion) {
    let mut g = c.benchmark_group("C5");
    g.sample_size(10);
    for dim in 1..=2 {
        let r = flat(dim);
        let family = GenericSectionFamily::new(2, 3, 0);
        g.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, _| {
            b.iter(|| check_axiom(&r, CheckId::C5, &family, None).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, c_bracket, classify_flat, metric_compatibility);
criterion_main!(benches);
