//! Benchmarks for zariski-core; see `benches/`.
