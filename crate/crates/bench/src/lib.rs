//! Criterion benchmarks for turanlab live in `benches/`.
