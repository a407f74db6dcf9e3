use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{SolverError, SolverResult};
use crate::extnat::{ExtNat, Nat};
use crate::graph::{first_malformed_edge, Graph, Vertex};
use crate::shortest_paths::SpWitness;

/// Dijkstra from `source` over nonnegative `cost`.
///
/// Ties pop the lowest vertex id first; a parent edge is replaced only on a
/// strict improvement, so among equal candidates the lowest edge id from the
/// earliest settled vertex wins. `num` is the depth in the final parent
/// tree, computed after the search in settling order.
pub fn solve_shortest_paths(
    g: &Graph,
    cost: &[Nat],
    source: Vertex,
) -> Result<SolverResult<Vec<ExtNat>, SpWitness>, SolverError> {
    let n = g.num_verts;
    if source >= n {
        return Err(SolverError::SourceOutOfRange {
            vertex: source,
            num_verts: n,
        });
    }
    if let Some(e) = first_malformed_edge(g) {
        return Err(SolverError::PreconditionViolated(format!("edge {e} is not wellformed")));
    }
    if cost.len() != g.num_edges() {
        return Err(SolverError::PreconditionViolated(format!(
            "{} costs for {} edges",
            cost.len(),
            g.num_edges()
        )));
    }

    let mut out_edges = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        out_edges[e.src].push(i);
    }

    let mut dist: Vec<Option<Nat>> = vec![None; n];
    let mut parent_edge = vec![None; n];
    let mut settled = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();
    dist[source] = Some(Nat::from(0u32));
    heap.push(Reverse((Nat::from(0u32), source)));

    while let Some(Reverse((d, u))) = heap.pop() {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        order.push(u);
        for &i in &out_edges[u] {
            let v = g.edges[i].trg;
            if settled[v] {
                continue;
            }
            let candidate = &d + &cost[i];
            if dist[v].as_ref().is_none_or(|cur| candidate < *cur) {
                dist[v] = Some(candidate.clone());
                parent_edge[v] = Some(i);
                heap.push(Reverse((candidate, v)));
            }
        }
    }

    // parents are settled before their children
    let mut num = vec![ExtNat::Infinity; n];
    for &v in &order {
        num[v] = match parent_edge[v] {
            None => ExtNat::zero(),
            Some(e) => num[g.edges[e].src].succ(),
        };
    }
    let dist: Vec<ExtNat> = dist
        .into_iter()
        .map(|d| d.map_or(ExtNat::Infinity, ExtNat::Finite))
        .collect();

    Ok(SolverResult {
        output: dist.clone(),
        witness: SpWitness {
            source,
            dist,
            num,
            parent_edge,
            cost: cost.to_vec(),
        },
    })
}
