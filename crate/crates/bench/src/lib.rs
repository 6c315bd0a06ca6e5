//! Criterion benchmarks for `clutter-core`; see `benches/`.
