use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ehrlace::certify::{certify_interlace, certify_line, default_center};
use ehrlace::exactcore::isolate_real_roots;
use ehrlace::families::{family_polynomial, FamilyId};

fn line_certificates(c: &mut Criterion) {
    let center = default_center();
    let mut group = c.benchmark_group("certify_line");
    group.sample_size(10);
    for d in [8, 16, 30] {
        let p = family_polynomial(&FamilyId::Stasheff { d }).unwrap();
        group.bench_with_input(BenchmarkId::new("stasheff", d), &p, |b, p| {
            b.iter(|| certify_line(black_box(p), &center))
        });
    }
    group.finish();
}

fn isolation(c: &mut Criterion) {
    let center = default_center();
    let mut group = c.benchmark_group("isolate_real_roots");
    group.sample_size(10);
    for d in [8, 16, 30] {
        let p = family_polynomial(&FamilyId::RootA { d }).unwrap();
        let line = ehrlace::certify::to_line_polynomial(&p, &center).unwrap();
        group.bench_with_input(BenchmarkId::new("roota", d), &line, |b, q| {
            b.iter(|| isolate_real_roots(black_box(q)).unwrap())
        });
    }
    group.finish();
}

fn interlacing(c: &mut Criterion) {
    let center = default_center();
    let mut group = c.benchmark_group("certify_interlace");
    group.sample_size(10);
    for d in [10, 20] {
        let f = family_polynomial(&FamilyId::Cross { d }).unwrap();
        let g = family_polynomial(&FamilyId::Cross { d: d - 1 }).unwrap();
        group.bench_with_input(BenchmarkId::new("cross", d), &(f, g), |b, (f, g)| {
            b.iter(|| certify_interlace(black_box(f), black_box(g), &center).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, line_certificates, isolation, interlacing);
criterion_main!(benches);
