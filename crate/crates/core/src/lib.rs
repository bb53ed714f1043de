//! Exact computation and verification of the rainbow vertex-connection
//! number `rvc(G)` and the strong rainbow vertex-connection number `srvc(G)`
//! of small graphs.
//!
//! * [`graph`]: graphs, the edge-list format, distances and geodesics;
//! * [`coloring`] and [`check`]: colorings and the rainbow predicates;
//! * [`solver`]: exact search with independent brute-force oracles;
//! * [`families`]: generators for paths, wheels, two-layers wheels and more;
//! * [`claims`]: closed forms, explicit colorings and verification suites;
//! * [`cli`]: the `rainbow` command line front end.

pub mod check;
pub mod cli;
pub mod claims;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod solver;

pub use check::{check_coloring, CheckReport, Mode};
pub use coloring::VertexColoring;
pub use graph::Graph;
pub use solver::{compute, decide_k, SearchBudget, SolveResult};
