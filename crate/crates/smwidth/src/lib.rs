//! Branch decompositions of small graphs under the split-matching cut
//! function, and exact solvers that run dynamic programs over them.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`] — immutable simple graphs with explicit vertex ids;
//! * [`cuts`] — matchings, covers and the split-matching cut value;
//! * [`split_dec`] — split decomposition into prime graphs;
//! * [`branch_dec`] — branch decompositions, widths, exact search;
//! * [`pipeline`] — the end-to-end decomposition pipeline;
//! * [`dp`] — the certificate dynamic-programming framework;
//! * [`solvers`] — max cut, hamiltonian cycle, coloring, edge dominating set;
//! * [`oracles`] — brute-force references and instance generators.

#![forbid(unsafe_code)]

mod bitcut;
pub mod branch_dec;
pub mod corpus;
pub mod cuts;
pub mod dp;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod pipeline;
pub mod solvers;
pub mod split_dec;

pub use error::{Error, Result};
