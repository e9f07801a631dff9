use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dimcheck_core::check::check_model;
use dimcheck_core::corpus;
use dimcheck_core::lang::parse_model;

fn corpus_models(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    for (name, src) in corpus::ALL {
        group.bench_function(name, |b| {
            b.iter(|| check_model(&parse_model(black_box(src)).unwrap()).unwrap())
        });
    }
    group.finish();

    let spec = parse_model(corpus::CORRECTED_MODEL).unwrap();
    c.bench_function("check/corrected_model_preparsed", |b| b.iter(|| check_model(black_box(&spec)).unwrap()));
}

criterion_group!(benches, corpus_models);
criterion_main!(benches);
