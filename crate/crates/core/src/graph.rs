//! Edge-array graphs and the walk/path predicates used by checker
//! postconditions.
//!
//! A graph is a vertex count `n` plus a dense array of `m` edges; vertex ids
//! are `0..n` and edge ids are the array indices `0..m`. The same record is
//! read as directed (shortest paths) or undirected (connectivity, matching)
//! depending on the problem.

use std::collections::HashSet;

use crate::extnat::Nat;

pub type Vertex = usize;
pub type EdgeId = usize;

/// Optional edge id; `None` plays the role of the C sentinel `-1`.
pub type OptEdgeId = Option<EdgeId>;

/// A sequence of edge ids, judged against a graph by [`is_walk`].
pub type EdgeWalk = [EdgeId];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: Vertex,
    pub trg: Vertex,
}

impl Edge {
    pub const fn new(src: Vertex, trg: Vertex) -> Self {
        Edge { src, trg }
    }

    pub fn is_loop(&self) -> bool {
        self.src == self.trg
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.src == v || self.trg == v
    }

    /// Endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: Vertex) -> Option<Vertex> {
        if self.src == v {
            Some(self.trg)
        } else if self.trg == v {
            Some(self.src)
        } else {
            None
        }
    }

    /// Same endpoints up to orientation.
    pub fn same_undirected(&self, other: &Edge) -> bool {
        (self.src == other.src && self.trg == other.trg) || (self.src == other.trg && self.trg == other.src)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    pub num_verts: usize,
    pub edges: Vec<Edge>,
}

impl Graph {
    pub fn new(num_verts: usize, edges: Vec<Edge>) -> Self {
        Graph { num_verts, edges }
    }

    pub fn from_pairs(num_verts: usize, pairs: &[(Vertex, Vertex)]) -> Self {
        let edges = pairs.iter().map(|&(s, t)| Edge::new(s, t)).collect();
        Graph { num_verts, edges }
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edges.get(e)
    }

    /// Copy of the graph with edge `e` removed (later ids shift down).
    pub fn without_edge(&self, e: EdgeId) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph::new(self.num_verts, edges)
    }
}

pub fn wellformed(g: &Graph) -> bool {
    g.edges.iter().all(|e| e.src < g.num_verts && e.trg < g.num_verts)
}

/// The first edge whose endpoint lies outside `0..n`, if any.
pub fn first_malformed_edge(g: &Graph) -> Option<EdgeId> {
    g.edges
        .iter()
        .position(|e| e.src >= g.num_verts || e.trg >= g.num_verts)
}

pub fn has_no_self_loops(g: &Graph) -> bool {
    g.edges.iter().all(|e| !e.is_loop())
}

/// No two distinct edge ids carry the same ordered `(src, trg)` pair.
pub fn has_no_duplicate_edges(g: &Graph) -> bool {
    let mut seen = HashSet::with_capacity(g.edges.len());
    g.edges.iter().all(|e| seen.insert((e.src, e.trg)))
}

/// Like [`has_no_duplicate_edges`] but `(u, v)` and `(v, u)` count as the
/// same edge.
pub fn has_no_undirected_duplicates(g: &Graph) -> bool {
    let mut seen = HashSet::with_capacity(g.edges.len());
    g.edges
        .iter()
        .all(|e| seen.insert((e.src.min(e.trg), e.src.max(e.trg))))
}

/// Some edge joins `u` and `v` in either orientation.
pub fn is_edge_undirected(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.edges
        .iter()
        .any(|e| (e.src == u && e.trg == v) || (e.src == v && e.trg == u))
}

/// `p` is a directed chain of edges leading from `u` to `v`.
pub fn is_walk(g: &Graph, p: &EdgeWalk, u: Vertex, v: Vertex) -> bool {
    let mut at = u;
    for &i in p {
        match g.edge(i) {
            Some(e) if e.src == at => at = e.trg,
            _ => return false,
        }
    }
    at == v
}

/// A walk whose visited vertices (`u`, then each edge target) are pairwise
/// distinct.
pub fn is_path(g: &Graph, p: &EdgeWalk, u: Vertex, v: Vertex) -> bool {
    if !is_walk(g, p, u, v) {
        return false;
    }
    let mut seen = HashSet::with_capacity(p.len() + 1);
    seen.insert(u);
    p.iter().all(|&i| seen.insert(g.edges[i].trg))
}

/// Sum of `cost` over the edges of `p`.
///
/// Panics if an edge id of `p` is outside `cost`.
pub fn path_cost(cost: &[Nat], p: &EdgeWalk) -> Nat {
    p.iter().map(|&i| &cost[i]).sum()
}

/// Adjacency lists of the symmetrized graph: `(neighbor, edge id)` pairs in
/// increasing edge-id order. Self-loops are listed once.
pub(crate) fn undirected_adjacency(g: &Graph) -> Vec<Vec<(Vertex, EdgeId)>> {
    let mut adj = vec![Vec::new(); g.num_verts];
    for (i, e) in g.edges.iter().enumerate() {
        adj[e.src].push((e.trg, i));
        if !e.is_loop() {
            adj[e.trg].push((e.src, i));
        }
    }
    adj
}
