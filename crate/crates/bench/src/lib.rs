//! Criterion benchmarks for awfs-core; see benches/core.rs.
