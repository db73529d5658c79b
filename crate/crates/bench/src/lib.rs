//! Criterion benchmarks for the `basephi` crate; see `benches/`.
