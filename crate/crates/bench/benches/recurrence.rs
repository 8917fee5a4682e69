use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ehrlace::recurrence::{default_probe_orders, discover_recurrence, RelationAnsatz};

fn discovery(c: &mut Criterion) {
    let mut group = c.benchmark_group("discover_recurrence");
    group.sample_size(10);
    for name in RelationAnsatz::names() {
        let ansatz = RelationAnsatz::by_name(name).unwrap();
        let probes = default_probe_orders(&ansatz);
        group.bench_function(name, |b| {
            b.iter(|| discover_recurrence(black_box(&ansatz), probes).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, discovery);
criterion_main!(benches);
