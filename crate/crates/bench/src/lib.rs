//! Criterion benchmarks for `qpolar`; see `benches/`.
