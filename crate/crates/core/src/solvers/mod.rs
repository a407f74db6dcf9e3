//! Certifying algorithms: each returns its answer together with a witness
//! that the matching checker accepts.

use thiserror::Error;

mod bfs;
mod blossom;
mod dijkstra;
mod euclid;

pub use bfs::solve_connectivity;
pub use blossom::{maximum_matching, solve_max_matching};
pub use dijkstra::solve_shortest_paths;
pub use euclid::solve_gcd;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult<O, W> {
    pub output: O,
    pub witness: W,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("source vertex {vertex} is out of range for {num_verts} vertices")]
    SourceOutOfRange { vertex: usize, num_verts: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
