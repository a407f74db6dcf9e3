//! Edmonds' blossom algorithm with odd-set cover extraction.
//!
//! The matching is grown by repeated single-root alternating-tree searches
//! with blossom contraction. Once no augmenting path is left, one more search
//! is grown from all exposed vertices at once. Its outer vertices `D`, inner
//! vertices `A` and untouched vertices `C` form the Gallai–Edmonds
//! decomposition, from which the cover is read off:
//!
//! * every vertex of `A` gets label 1;
//! * each component of `G[D]` with at least three vertices gets its own
//!   label `>= 2` (components are odd, singletons get 0);
//! * `C` is perfectly matched within itself: its lowest vertex gets label 1
//!   and, if `|C| >= 4`, the remaining `|C| - 1` vertices share a label `>= 2`.

use std::collections::VecDeque;

use super::{SolverError, SolverResult};
use crate::graph::{first_malformed_edge, has_no_duplicate_edges, has_no_self_loops, Edge, Graph, Vertex};
use crate::matching::{Label, MatchingWitness};

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<Vertex>],
    mate: &'a [usize],
    /// Inner-vertex tree parent (`NONE` when not inner, or for outer vertices
    /// not touched by a blossom).
    parent: Vec<usize>,
    base: Vec<Vertex>,
    outer: Vec<bool>,
    queue: VecDeque<Vertex>,
}

enum Outcome {
    Augment(Vertex),
    Exhausted,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<Vertex>], mate: &'a [usize], roots: &[Vertex]) -> Self {
        let n = adj.len();
        let mut s = Search {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            queue: VecDeque::new(),
        };
        for &r in roots {
            s.outer[r] = true;
            s.queue.push_back(r);
        }
        s
    }

    /// A vertex acts as outer if it is exposed (a root) or its mate has a
    /// tree parent.
    fn is_outer_endpoint(&self, v: Vertex) -> bool {
        self.mate[v] == NONE || self.parent[self.mate[v]] != NONE
    }

    fn lca(&self, a: Vertex, b: Vertex) -> Option<Vertex> {
        let mut seen = vec![false; self.adj.len()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return Some(b);
            }
            if self.mate[b] == NONE {
                return None;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, in_blossom: &mut [bool], mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: Vertex, to: Vertex) {
        let b = self
            .lca(v, to)
            .expect("outer vertices of different trees are never adjacent under a maximum matching");
        let mut in_blossom = vec![false; self.adj.len()];
        self.mark_path(&mut in_blossom, v, b, to);
        self.mark_path(&mut in_blossom, to, b, v);
        for i in 0..self.adj.len() {
            if in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.outer[i] {
                    self.outer[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    fn run(&mut self) -> Outcome {
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if self.is_outer_endpoint(to) && (self.mate[to] != NONE || self.outer[to]) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Outcome::Augment(to);
                    }
                    let w = self.mate[to];
                    self.outer[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        Outcome::Exhausted
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); g.num_verts];
    for e in &g.edges {
        adj[e.src].push(e.trg);
        adj[e.trg].push(e.src);
    }
    adj
}

fn grow(adj: &[Vec<Vertex>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        let mut search = Search::new(adj, &mate, &[root]);
        if let Outcome::Augment(mut v) = search.run() {
            let parent = search.parent;
            while v != NONE {
                let pv = parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    mate
}

/// Maximum matching as a mate array (`None` for exposed vertices).
pub fn maximum_matching(g: &Graph) -> Vec<Option<Vertex>> {
    grow(&adjacency(g))
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn odd_set_cover(g: &Graph, adj: &[Vec<Vertex>], mate: &[usize]) -> Vec<Label> {
    let n = g.num_verts;
    let exposed: Vec<Vertex> = (0..n).filter(|&v| mate[v] == NONE).collect();
    let mut search = Search::new(adj, mate, &exposed);
    if let Outcome::Augment(_) = search.run() {
        unreachable!("matching is maximum, no augmenting path exists");
    }
    let outer = search.outer;
    let inner: Vec<bool> = (0..n).map(|v| !outer[v] && search.parent[v] != NONE).collect();

    let mut uf: Vec<usize> = (0..n).collect();
    for e in &g.edges {
        if outer[e.src] && outer[e.trg] {
            let (a, b) = (find(&mut uf, e.src), find(&mut uf, e.trg));
            uf[a] = b;
        }
    }
    let mut comp_size = vec![0usize; n];
    for v in (0..n).filter(|&v| outer[v]) {
        let r = find(&mut uf, v);
        comp_size[r] += 1;
    }

    let mut labels = vec![0; n];
    let mut next_label = 2;
    let untouched: Vec<Vertex> = (0..n).filter(|&v| !outer[v] && !inner[v]).collect();
    if let Some((&first, rest)) = untouched.split_first() {
        labels[first] = 1;
        if rest.len() >= 3 {
            for &v in rest {
                labels[v] = next_label;
            }
            next_label += 1;
        }
    }
    let mut comp_label = vec![NONE; n];
    for v in 0..n {
        if inner[v] {
            labels[v] = 1;
        } else if outer[v] {
            let r = find(&mut uf, v);
            if comp_size[r] >= 3 {
                if comp_label[r] == NONE {
                    comp_label[r] = next_label;
                    next_label += 1;
                }
                labels[v] = comp_label[r];
            }
        }
    }
    labels
}

fn precondition(g: &Graph) -> Result<(), SolverError> {
    let violated = |s: &str| Err(SolverError::PreconditionViolated(s.to_string()));
    if first_malformed_edge(g).is_some() {
        return violated("graph is not wellformed");
    }
    if !has_no_self_loops(g) {
        return violated("graph has a self-loop");
    }
    if !has_no_duplicate_edges(g) {
        return violated("graph has a duplicate edge");
    }
    Ok(())
}

/// Maximum cardinality matching of the undirected reading of `g`, with an
/// odd-set cover proving it maximum.
///
/// The output is the matched edge ids in increasing order; the witness
/// stores matching edges in the input orientation.
pub fn solve_max_matching(g: &Graph) -> Result<SolverResult<Vec<usize>, MatchingWitness>, SolverError> {
    precondition(g)?;
    let adj = adjacency(g);
    let mate = grow(&adj);

    let mut used = vec![false; g.num_verts];
    let mut edge_map = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if mate[e.src] == e.trg && !used[e.src] {
            used[e.src] = true;
            used[e.trg] = true;
            edge_map.push(i);
        }
    }
    let matching = Graph::new(g.num_verts, edge_map.iter().map(|&i| g.edges[i]).collect::<Vec<Edge>>());
    let osc = odd_set_cover(g, &adj, &mate);

    Ok(SolverResult {
        output: edge_map.clone(),
        witness: MatchingWitness {
            matching,
            edge_map,
            osc,
        },
    })
}
