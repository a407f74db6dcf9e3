//! Certifying algorithms and their witness checkers.
//!
//! Each supported problem comes as a solver that returns its answer with a
//! witness, a checker that accepts exactly the triples `(input, output,
//! witness)` satisfying the problem's witness predicate, and brute-force
//! oracles for validating both on small instances:
//!
//! | problem | witness | checker |
//! |---|---|---|
//! | undirected connectivity | spanning tree or cut | [`check_connectivity`] |
//! | single-source shortest paths | shortest-path tree with depths | [`check_shortest_paths`] |
//! | maximum cardinality matching | odd-set cover | [`check_max_matching`] |
//! | gcd | Bézout coefficients | [`check_gcd`] |

pub mod cli;
pub mod connectivity;
pub mod extnat;
pub mod gcd;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod samples;
pub mod shortest_paths;
pub mod solvers;
mod verdict;

pub use connectivity::{check_connectivity, ConnectivityTriple, ConnectivityWitness, CutWitness, SpanningTreeWitness};
pub use extnat::{ExtNat, Nat};
pub use gcd::{check_gcd, GcdTriple};
pub use graph::{Edge, EdgeId, Graph, Vertex};
pub use matching::{check_max_matching, MatchingTriple, MatchingWitness};
pub use oracles::Triple;
pub use shortest_paths::{check_shortest_paths, SpTriple, SpWitness};
pub use verdict::{CheckError, Rejection, Verdict};

/// Runs the checker matching the triple's problem.
pub fn check(t: &Triple) -> Result<Verdict, CheckError> {
    match t {
        Triple::Connectivity(t) => check_connectivity(t),
        Triple::ShortestPaths(t) => check_shortest_paths(t),
        Triple::Matching(t) => check_max_matching(t),
        Triple::Gcd(t) => check_gcd(t),
    }
}
