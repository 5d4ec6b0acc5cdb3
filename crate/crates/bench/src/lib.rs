//! Benchmarks live in `benches/`; run them with `cargo bench -p queen-spectra-bench`.
