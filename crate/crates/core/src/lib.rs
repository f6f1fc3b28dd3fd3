//! Exact graph invariants and a small conjecture workbench.
//!
//! [`graph`] holds the bitset graph type, parsers and enumeration; [`invariants`]
//! computes the invariant record of a graph; [`dsl`] parses and evaluates
//! conjecture statements; [`engine`] checks them over graph streams; [`lean`]
//! renders them as Lean 4 theorem statements.

pub mod dsl;
pub mod engine;
pub mod graph;
pub mod invariants;
pub mod lean;
pub mod rational;

pub use graph::{Graph, GraphError};
pub use rational::Rational;

/// Runs `f` on a rayon pool with `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}
