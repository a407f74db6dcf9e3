use std::collections::VecDeque;

use super::{SolverError, SolverResult};
use crate::connectivity::{ConnectivityWitness, CutWitness, SpanningTreeWitness};
use crate::extnat::Nat;
use crate::graph::{first_malformed_edge, undirected_adjacency, Graph};

/// Breadth-first search from vertex 0 over the undirected reading of `g`.
///
/// Returns `true` with a BFS tree (`num` = depth) when every vertex is
/// reached, otherwise `false` with the reached set as the cut. Neighbors are
/// explored in edge-id order.
pub fn solve_connectivity(g: &Graph) -> Result<SolverResult<bool, ConnectivityWitness>, SolverError> {
    if g.num_verts == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if let Some(e) = first_malformed_edge(g) {
        return Err(SolverError::PreconditionViolated(format!("edge {e} is not wellformed")));
    }
    let adj = undirected_adjacency(g);
    let mut depth: Vec<Option<usize>> = vec![None; g.num_verts];
    let mut parent_edge = vec![None; g.num_verts];
    let mut queue = VecDeque::from([0]);
    depth[0] = Some(0);
    while let Some(u) = queue.pop_front() {
        let du = depth[u].expect("queued vertices have a depth");
        for &(v, e) in &adj[u] {
            if depth[v].is_none() {
                depth[v] = Some(du + 1);
                parent_edge[v] = Some(e);
                queue.push_back(v);
            }
        }
    }

    if depth.iter().all(Option::is_some) {
        let num = depth.into_iter().map(|d| Nat::from(d.unwrap_or_default())).collect();
        let tree = SpanningTreeWitness {
            root: 0,
            parent_edge,
            num,
        };
        Ok(SolverResult {
            output: true,
            witness: ConnectivityWitness::Tree(tree),
        })
    } else {
        let cut_set = (0..g.num_verts).filter(|&v| depth[v].is_some()).collect();
        Ok(SolverResult {
            output: false,
            witness: ConnectivityWitness::Cut(CutWitness { cut_set }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{check_connectivity, ConnectivityTriple};
    use crate::samples::connected_graph;
    use crate::verdict::Verdict;

    fn accepted(g: &Graph) -> bool {
        let r = solve_connectivity(g).unwrap();
        let t = ConnectivityTriple {
            graph: g.clone(),
            connected: r.output,
            witness: r.witness,
        };
        check_connectivity(&t) == Ok(Verdict::Accept)
    }

    #[test]
    fn tree_for_connected_graph() {
        let g = connected_graph();
        let r = solve_connectivity(&g).unwrap();
        assert!(r.output);
        let ConnectivityWitness::Tree(t) = &r.witness else {
            panic!("expected a tree")
        };
        assert_eq!(t.parent_edge, vec![None, Some(0), Some(1), Some(2), Some(6)]);
        assert!(accepted(&g));
    }

    #[test]
    fn cut_for_isolated_vertices() {
        let g = Graph::new(2, vec![]);
        let r = solve_connectivity(&g).unwrap();
        assert!(!r.output);
        assert_eq!(r.witness, ConnectivityWitness::Cut(CutWitness { cut_set: [0].into() }));
        assert!(accepted(&g));
    }

    #[test]
    fn single_vertex() {
        let r = solve_connectivity(&Graph::new(1, vec![])).unwrap();
        assert!(r.output);
        assert_eq!(
            r.witness,
            ConnectivityWitness::Tree(SpanningTreeWitness {
                root: 0,
                parent_edge: vec![None],
                num: vec![Nat::from(0u32)],
            })
        );
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert_eq!(solve_connectivity(&Graph::new(0, vec![])), Err(SolverError::EmptyGraph));
    }

    #[test]
    fn edge_direction_is_ignored() {
        let g = Graph::from_pairs(3, &[(1, 0), (2, 1)]);
        assert!(solve_connectivity(&g).unwrap().output);
        assert!(accepted(&g));
    }
}
