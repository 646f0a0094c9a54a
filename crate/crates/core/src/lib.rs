//! Exact computation and certification of defensive k-alliances.
//!
//! - [`graph`]: immutable simple graphs, generators, edge-list I/O.
//! - [`alliance`]: alliance and domination predicates, certificates and
//!   the constructive set transformations.
//! - [`solver`]: exact alliance numbers by pruned subset search, plus a
//!   brute-force oracle.
//! - [`bounds`]: closed-form lower and upper bounds.
//! - [`harness`]: corpus certification, reports and the reference suite.

pub mod alliance;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use solver::{solve, Parameter, SolveOptions, SolveResult, Status};
pub use vertex_set::VertexSet;
