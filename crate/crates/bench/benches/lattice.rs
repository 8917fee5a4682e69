use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ehrlace::latticecount::{count_dilates, GraphSpec};

fn dilates(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_dilates");
    group.sample_size(10);
    for spec in ["cycle:6", "cycle:8", "complete:4", "kab:2,3"] {
        let g: GraphSpec = spec.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| count_dilates(black_box(g), 3, 10_000_000).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, dilates);
criterion_main!(benches);
