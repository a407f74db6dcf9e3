//! Connectivity certificates: a spanning tree proves an undirected graph
//! connected, a cut with no crossing edge proves it disconnected.

use std::collections::BTreeSet;

use crate::extnat::Nat;
use crate::graph::{first_malformed_edge, Graph, OptEdgeId, Vertex};
use crate::verdict::{expect_len, first_rejection, CheckError, Verdict};

/// Tree oriented towards `root`: `parent_edge[v]` is the first edge on the
/// tree path from `v` to the root and `num[v]` is that path's length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTreeWitness {
    pub root: Vertex,
    pub parent_edge: Vec<OptEdgeId>,
    pub num: Vec<Nat>,
}

/// A nonempty proper vertex subset that no edge leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub cut_set: BTreeSet<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityWitness {
    Tree(SpanningTreeWitness),
    Cut(CutWitness),
}

impl ConnectivityWitness {
    /// The connectivity claim this witness variant supports.
    pub fn claim(&self) -> bool {
        matches!(self, ConnectivityWitness::Tree(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityTriple {
    pub graph: Graph,
    pub connected: bool,
    pub witness: ConnectivityWitness,
}

fn root_clause(g: &Graph, w: &SpanningTreeWitness) -> Verdict {
    let r = w.root;
    if r >= g.num_verts {
        return Verdict::reject("r", format!("root {r} is not a vertex"));
    }
    if w.num[r] != Nat::from(0u32) {
        return Verdict::reject("r", format!("num[{r}] = {} instead of 0", w.num[r]));
    }
    if let Some(e) = w.parent_edge[r] {
        return Verdict::reject("r", format!("root {r} has parent edge {e}"));
    }
    Verdict::Accept
}

fn parent_num_clause(g: &Graph, w: &SpanningTreeWitness) -> Verdict {
    for v in (0..g.num_verts).filter(|&v| v != w.root) {
        let Some(e) = w.parent_edge[v] else {
            return Verdict::reject("parent_num", format!("vertex {v} has no parent edge"));
        };
        let Some(edge) = g.edge(e) else {
            return Verdict::reject("parent_num", format!("parent edge {e} of vertex {v} does not exist"));
        };
        let justified = |other: Vertex| w.num[v] == &w.num[other] + 1u32;
        if v == edge.src && justified(edge.trg) {
            continue;
        }
        if v == edge.trg && justified(edge.src) {
            continue;
        }
        return Verdict::reject(
            "parent_num",
            format!(
                "vertex {v}: parent edge {e} = ({}, {}) does not decrease num",
                edge.src, edge.trg
            ),
        );
    }
    Verdict::Accept
}

fn cut_clause(g: &Graph, w: &CutWitness) -> Verdict {
    let s = &w.cut_set;
    if s.is_empty() {
        return Verdict::reject("cut", "cut set is empty");
    }
    if let Some(v) = s.iter().find(|&&v| v >= g.num_verts) {
        return Verdict::reject("cut", format!("cut vertex {v} is not a vertex"));
    }
    if s.len() == g.num_verts {
        return Verdict::reject("cut", "cut set contains every vertex");
    }
    for (i, e) in g.edges.iter().enumerate() {
        if s.contains(&e.src) != s.contains(&e.trg) {
            return Verdict::reject("cut", format!("edge {i} = ({}, {}) crosses the cut", e.src, e.trg));
        }
    }
    Verdict::Accept
}

/// `root < n`, `num[root] = 0` and the root has no parent edge.
pub fn check_r(g: &Graph, w: &SpanningTreeWitness) -> bool {
    root_clause(g, w).is_accept()
}

/// Every non-root vertex has an incident parent edge whose other endpoint
/// has `num` one smaller.
pub fn check_parent_num(g: &Graph, w: &SpanningTreeWitness) -> bool {
    parent_num_clause(g, w).is_accept()
}

pub fn check_cut(g: &Graph, w: &CutWitness) -> bool {
    cut_clause(g, w).is_accept()
}

/// Full connectivity checker.
///
/// Rejects when the witness variant disagrees with the claim, otherwise
/// runs the tree clauses (`r`, `parent_num`) or the `cut` clause.
pub fn check_connectivity(t: &ConnectivityTriple) -> Result<Verdict, CheckError> {
    let g = &t.graph;
    if let Some(e) = first_malformed_edge(g) {
        return Err(CheckError::PreconditionViolated(format!(
            "edge {e} has an endpoint outside 0..{}",
            g.num_verts
        )));
    }
    if let ConnectivityWitness::Tree(w) = &t.witness {
        expect_len("parent_edge", w.parent_edge.len(), g.num_verts)?;
        expect_len("num", w.num.len(), g.num_verts)?;
    }
    if t.connected != t.witness.claim() {
        return Ok(Verdict::reject(
            "claim",
            format!(
                "claim connected = {} but witness is a {}",
                t.connected,
                if t.witness.claim() { "tree" } else { "cut" }
            ),
        ));
    }
    Ok(match &t.witness {
        ConnectivityWitness::Tree(w) => first_rejection!(root_clause(g, w), parent_num_clause(g, w)),
        ConnectivityWitness::Cut(w) => cut_clause(g, w),
    })
}
