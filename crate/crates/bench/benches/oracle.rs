use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use extremal_bench::sequence;
use extremal_core::oracle::{canonical_code, enumerate_realizations, EnumerationOptions};

fn canonical_form(c: &mut Criterion) {
    let opts = EnumerationOptions::default();
    let graphs = enumerate_realizations(&sequence("3^4,2^4"), &opts).unwrap();
    c.bench_function("canonical_code/3^4,2^4 all realizations", |b| {
        b.iter(|| graphs.iter().map(canonical_code).max())
    });
}

fn enumeration(c: &mut Criterion) {
    let opts = EnumerationOptions::default();
    let mut group = c.benchmark_group("enumerate_realizations");
    group.sample_size(10);
    for text in ["3,2^5,1", "4,3,2^4,1^3", "3^4,2^4", "4,3^2,2^2,1^4"] {
        let pi = sequence(text);
        group.bench_with_input(BenchmarkId::from_parameter(text), &pi, |b, pi| {
            b.iter(|| enumerate_realizations(pi, &opts).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, canonical_form, enumeration);
criterion_main!(benches);
