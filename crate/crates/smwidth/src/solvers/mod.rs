//! Certificate-based solvers built on the dynamic-programming framework:
//! each submodule defines one problem's certificates, their reference
//! combination semantics, and a join that keeps a small preserving set at
//! every node of a branch decomposition.

pub mod coloring;
pub mod eds;
pub mod hamiltonian;
pub mod maxcut;
