//! Benchmarks for the diagram algebras; see `benches/`.
