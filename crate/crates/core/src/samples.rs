//! Small hand-checked instances shared by tests, the CLI docs and the demo.

use crate::connectivity::SpanningTreeWitness;
use crate::extnat::{ExtNat, Nat};
use crate::graph::{Edge, Graph};
use crate::matching::MatchingWitness;
use crate::shortest_paths::SpWitness;

/// Connected multigraph on 5 vertices with a parallel edge (8) and a
/// self-loop (9).
pub fn connected_graph() -> Graph {
    Graph::from_pairs(
        5,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 3),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (0, 1),
            (1, 1),
        ],
    )
}

/// Spanning tree of [`connected_graph`] rooted at 0 using edges 0, 1, 2, 6.
pub fn connected_tree() -> SpanningTreeWitness {
    SpanningTreeWitness {
        root: 0,
        parent_edge: vec![None, Some(0), Some(1), Some(2), Some(6)],
        num: [0u32, 1, 1, 1, 2].iter().map(|&x| Nat::from(x)).collect(),
    }
}

/// Directed graph on `s, t, u, v, w = 0..5`. The cycle `t -> v -> t` costs
/// zero and `w` is unreachable from `s`.
pub fn sp_graph() -> Graph {
    Graph::from_pairs(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 1), (4, 4)])
}

pub fn sp_costs() -> Vec<Nat> {
    [1u32, 1, 1, 0, 0, 2].iter().map(|&c| Nat::from(c)).collect()
}

/// Shortest-path tree of [`sp_graph`] from `s = 0`.
pub fn sp_witness() -> SpWitness {
    let fin = |x: u64| ExtNat::from(x);
    SpWitness {
        source: 0,
        dist: vec![fin(0), fin(1), fin(1), fin(1), ExtNat::Infinity],
        num: vec![fin(0), fin(1), fin(1), fin(2), ExtNat::Infinity],
        parent_edge: vec![None, Some(0), Some(1), Some(3), None],
        cost: sp_costs(),
    }
}

/// Twelve-vertex graph whose maximum matching has five edges.
pub fn matching_graph() -> Graph {
    Graph::from_pairs(
        12,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (2, 7),
            (3, 8),
            (4, 9),
            (6, 7),
            (7, 8),
            (8, 9),
            (6, 10),
            (7, 10),
            (8, 11),
        ],
    )
}

/// Five-edge matching of [`matching_graph`] with an odd-set cover that has
/// four vertices labeled 1 and three labeled 2.
pub fn matching_witness() -> MatchingWitness {
    let g = matching_graph();
    let edge_map = vec![0, 3, 8, 9, 14];
    let matching = Graph::new(12, edge_map.iter().map(|&i| g.edges[i]).collect::<Vec<Edge>>());
    MatchingWitness {
        matching,
        edge_map,
        osc: vec![1, 0, 1, 0, 1, 0, 2, 2, 1, 0, 2, 0],
    }
}
