//! Induced multipartite graph parameters.
//!
//! This crate computes ten classic graph parameters exactly (order, size,
//! minimum and maximum degree, vertex and edge connectivity, independence
//! number, chromatic index, treewidth and pathwidth), decides
//! k-partiteness, evaluates `p(G, k)` (the maximum of a parameter over all
//! induced k-partite subgraphs of `G`), and solves the "large induced
//! k-partite subgraph" deletion problem both by brute force and by the
//! bounded-search algorithms for the tractable parameters. Constructors for
//! the two hardness reductions live in [`reductions`].
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line tool live in the `impart` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod bits;
mod error;
#[cfg(test)]
mod testutil;

pub mod graph;
pub mod imgp;
pub mod parameters;
pub mod partiteness;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, Partition, VertexSet};
pub use imgp::{f_k, FkTable, ParameterId};
pub use parameters::{PathDecomposition, TreeDecomposition};
pub use partiteness::ColoringWitness;
pub use solvers::{Answer, EarlyExit, ProblemInstance, SolverTrace};
