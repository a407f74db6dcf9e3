//! Shortest-path tree certificates over nonnegative edge costs.
//!
//! The witness predicate is the conjunction of four clauses: the source has
//! distance zero (`start_val`), `dist` and `num` agree on which vertices are
//! unreachable (`no_path`), every edge satisfies the triangle inequality
//! (`trian`) and every reachable non-source vertex is justified by its parent
//! edge (`just`). The depth `num` rules out circular justification along
//! zero-cost cycles.

use crate::extnat::{ExtNat, Nat};
use crate::graph::{first_malformed_edge, Graph, OptEdgeId, Vertex};
use crate::verdict::{expect_len, first_rejection, CheckError, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpWitness {
    pub source: Vertex,
    pub dist: Vec<ExtNat>,
    pub num: Vec<ExtNat>,
    pub parent_edge: Vec<OptEdgeId>,
    /// Per-edge cost. Part of the input, carried here with the tree.
    pub cost: Vec<Nat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTriple {
    pub graph: Graph,
    pub witness: SpWitness,
}

fn start_val_clause(w: &SpWitness) -> Verdict {
    let s = w.source;
    if w.dist[s] == ExtNat::zero() {
        Verdict::Accept
    } else {
        Verdict::reject("start_val", format!("dist[{s}] = {} instead of 0", w.dist[s]))
    }
}

fn no_path_clause(g: &Graph, w: &SpWitness) -> Verdict {
    for v in 0..g.num_verts {
        if w.dist[v].is_infinite() != w.num[v].is_infinite() {
            return Verdict::reject(
                "no_path",
                format!("vertex {v}: dist = {} but num = {}", w.dist[v], w.num[v]),
            );
        }
    }
    Verdict::Accept
}

fn trian_clause(g: &Graph, w: &SpWitness) -> Verdict {
    for (i, e) in g.edges.iter().enumerate() {
        let bound = w.dist[e.src].plus(&w.cost[i]);
        if w.dist[e.trg] > bound {
            return Verdict::reject(
                "trian",
                format!(
                    "edge {i} = ({}, {}): dist[{}] = {} > {} + {}",
                    e.src, e.trg, e.trg, w.dist[e.trg], w.dist[e.src], w.cost[i]
                ),
            );
        }
    }
    Verdict::Accept
}

fn just_clause(g: &Graph, w: &SpWitness) -> Verdict {
    for v in 0..g.num_verts {
        if v == w.source || w.num[v].is_infinite() {
            continue;
        }
        let Some(e) = w.parent_edge[v] else {
            return Verdict::reject("just", format!("reachable vertex {v} has no parent edge"));
        };
        let Some(edge) = g.edge(e) else {
            return Verdict::reject("just", format!("parent edge {e} of vertex {v} does not exist"));
        };
        if edge.trg != v {
            return Verdict::reject("just", format!("parent edge {e} of vertex {v} does not end at {v}"));
        }
        let u = edge.src;
        if w.dist[v] != w.dist[u].plus(&w.cost[e]) {
            return Verdict::reject(
                "just",
                format!(
                    "vertex {v}: dist = {} but dist[{u}] + cost[{e}] = {}",
                    w.dist[v],
                    w.dist[u].plus(&w.cost[e])
                ),
            );
        }
        if w.num[v] != w.num[u].succ() {
            return Verdict::reject(
                "just",
                format!("vertex {v}: num = {} but num[{u}] + 1 = {}", w.num[v], w.num[u].succ()),
            );
        }
    }
    Verdict::Accept
}

/// `dist[source] = 0`. Requires `source < n`.
pub fn check_start_val(w: &SpWitness) -> bool {
    start_val_clause(w).is_accept()
}

/// `dist[v] = ∞` exactly when `num[v] = ∞`.
pub fn check_no_path(g: &Graph, w: &SpWitness) -> bool {
    no_path_clause(g, w).is_accept()
}

/// `dist[trg e] <= dist[src e] + cost[e]` for every edge.
pub fn check_trian(g: &Graph, w: &SpWitness) -> bool {
    trian_clause(g, w).is_accept()
}

/// Parent-edge justification of `dist` and `num` for every vertex other than
/// the source with finite `num`.
pub fn check_just(g: &Graph, w: &SpWitness) -> bool {
    just_clause(g, w).is_accept()
}

fn precondition(t: &SpTriple) -> Result<(), CheckError> {
    let g = &t.graph;
    let w = &t.witness;
    if let Some(e) = first_malformed_edge(g) {
        return Err(CheckError::PreconditionViolated(format!(
            "edge {e} has an endpoint outside 0..{}",
            g.num_verts
        )));
    }
    if w.source >= g.num_verts {
        return Err(CheckError::PreconditionViolated(format!(
            "source {} is not a vertex of a graph with {} vertices",
            w.source, g.num_verts
        )));
    }
    expect_len("dist", w.dist.len(), g.num_verts)?;
    expect_len("num", w.num.len(), g.num_verts)?;
    expect_len("parent_edge", w.parent_edge.len(), g.num_verts)?;
    expect_len("cost", w.cost.len(), g.num_edges())
}

/// Full shortest-path checker: the four clauses in order, stopping at the
/// first failure.
pub fn check_shortest_paths(t: &SpTriple) -> Result<Verdict, CheckError> {
    precondition(t)?;
    let (g, w) = (&t.graph, &t.witness);
    Ok(first_rejection!(
        start_val_clause(w),
        no_path_clause(g, w),
        trian_clause(g, w),
        just_clause(g, w),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{sp_graph, sp_witness};

    const T: usize = 1;
    const U: usize = 2;
    const V: usize = 3;
    const W: usize = 4;

    fn triple(w: SpWitness) -> SpTriple {
        SpTriple {
            graph: sp_graph(),
            witness: w,
        }
    }

    #[test]
    fn start_val_examples() {
        assert!(check_start_val(&sp_witness()));
        let mut w = sp_witness();
        w.dist[0] = ExtNat::Infinity;
        assert!(!check_start_val(&w));
        w.dist[0] = ExtNat::from(1);
        assert!(!check_start_val(&w));
    }

    #[test]
    fn no_path_examples() {
        let g = sp_graph();
        assert!(check_no_path(&g, &sp_witness()));
        let mut w = sp_witness();
        w.num[W] = ExtNat::from(3);
        assert!(!check_no_path(&g, &w));
        let empty = SpWitness {
            source: 0,
            dist: vec![],
            num: vec![],
            parent_edge: vec![],
            cost: vec![],
        };
        assert!(check_no_path(&Graph::new(0, vec![]), &empty));
    }

    #[test]
    fn trian_examples() {
        let g = sp_graph();
        assert!(check_trian(&g, &sp_witness()));
        // t -> u at cost 0: dist[u] = 1 <= dist[t] + 0 = 1
        let mut w = sp_witness();
        w.cost[2] = Nat::from(0u32);
        assert!(check_trian(&g, &w));
        let mut w = sp_witness();
        w.dist[V] = ExtNat::from(2);
        assert!(!check_trian(&g, &w));
        // infinite source never constrains, infinite target always fails
        let mut w = sp_witness();
        w.dist[T] = ExtNat::Infinity;
        assert!(!check_trian(&g, &w));
    }

    #[test]
    fn just_examples() {
        let g = sp_graph();
        assert!(check_just(&g, &sp_witness()));
        let mut w = sp_witness();
        w.parent_edge[V] = Some(4);
        assert!(!check_just(&g, &w));
        let mut w = sp_witness();
        w.num[V] = ExtNat::from(1);
        assert!(!check_just(&g, &w));
        let mut w = sp_witness();
        w.parent_edge[U] = Some(2);
        assert!(!check_just(&g, &w), "t -> u justifies dist 2, not 1");
        let mut w = sp_witness();
        w.parent_edge[U] = None;
        assert!(!check_just(&g, &w));
        let mut w = sp_witness();
        w.parent_edge[U] = Some(99);
        assert!(!check_just(&g, &w));
    }

    #[test]
    fn full_checker_examples() {
        assert_eq!(check_shortest_paths(&triple(sp_witness())), Ok(Verdict::Accept));

        let mut w = sp_witness();
        w.dist[W] = ExtNat::from(7);
        w.num[W] = ExtNat::from(1);
        assert_eq!(check_shortest_paths(&triple(w)).unwrap().clause(), Some("just"));

        let mut w = sp_witness();
        w.dist[V] = ExtNat::from(2);
        assert_eq!(check_shortest_paths(&triple(w)).unwrap().clause(), Some("trian"));

        let mut w = sp_witness();
        w.source = 5;
        assert!(matches!(
            check_shortest_paths(&triple(w)),
            Err(CheckError::PreconditionViolated(_))
        ));

        let mut w = sp_witness();
        w.cost.pop();
        assert!(matches!(
            check_shortest_paths(&triple(w)),
            Err(CheckError::LengthMismatch { what: "cost", .. })
        ));
    }

    #[test]
    fn zero_cost_cycle_cannot_justify_itself() {
        // t and v claim distance 0 via each other around the zero-cost cycle
        let mut w = sp_witness();
        w.dist[T] = ExtNat::from(0);
        w.dist[V] = ExtNat::from(0);
        w.parent_edge[T] = Some(4);
        w.parent_edge[V] = Some(3);
        w.num[T] = ExtNat::from(1);
        w.num[V] = ExtNat::from(2);
        let g = sp_graph();
        assert!(check_start_val(&w) && check_no_path(&g, &w) && check_trian(&g, &w));
        assert!(!check_just(&g, &w));
    }
}
