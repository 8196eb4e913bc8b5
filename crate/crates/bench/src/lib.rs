//! Criterion benchmarks for `gpi-core`; see `benches/`.
