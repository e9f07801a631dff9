use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dimcheck_core::growth::{integrate, phase_grid, saddle_path, steady_state, GrowthParams, State};

fn numerics(c: &mut Criterion) {
    let p = GrowthParams::default();
    let ss = steady_state(&p).unwrap().state;

    // Below the saddle path, so the run stays inside the domain.
    c.bench_function("integrate_t200_h0.01", |b| {
        b.iter(|| {
            let tr = integrate(black_box(State::new(0.5 * ss.k, 0.5 * ss.c)), &p, 0.01, 200.0).unwrap();
            assert!(tr.is_complete());
            tr
        })
    });

    let mut slow = c.benchmark_group("shooting");
    slow.sample_size(10);
    slow.bench_function("saddle_path_half_k", |b| b.iter(|| saddle_path(&p, black_box(0.5 * ss.k)).unwrap()));
    slow.finish();

    c.bench_function("phase_grid_40x40", |b| {
        b.iter(|| phase_grid(&p, (0.5, 15.0), (0.2, 3.0), 40, 40).unwrap())
    });
}

criterion_group!(benches, numerics);
criterion_main!(benches);
