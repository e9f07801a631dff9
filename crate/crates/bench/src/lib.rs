//! Criterion benchmarks for dimcheck. Run with `cargo bench -p dimcheck-bench`.
