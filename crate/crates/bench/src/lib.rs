//! Criterion benchmarks for the starconfig kernels live in `benches/`.
//!
//! ```text
//! cargo bench -p starconfig-bench
//! ```
