//! Brute-force ground truth for small instances.
//!
//! Everything here is deliberately naive and shares no code path with the
//! checkers or solvers: transitive closure instead of BFS, Floyd–Warshall
//! instead of Dijkstra, subset enumeration instead of blossoms, and a direct
//! quantifier-by-quantifier evaluation of each witness predicate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::connectivity::{ConnectivityTriple, ConnectivityWitness};
use crate::extnat::{ExtNat, Nat};
use crate::gcd::GcdTriple;
use crate::graph::{wellformed, Graph, Vertex};
use crate::matching::{Label, MatchingTriple};
use crate::shortest_paths::SpTriple;

/// Default edge bound for [`oracle_max_matching_size`].
pub const DEFAULT_MAX_MATCHING_EDGES: usize = 20;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large: {edges} edges, bound {bound}")]
    InstanceTooLarge { edges: usize, bound: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// All vertex pairs mutually reachable in the symmetrized graph, decided by
/// a boolean transitive closure.
#[allow(clippy::needless_range_loop)]
pub fn oracle_connected(g: &Graph) -> bool {
    let n = g.num_verts;
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for e in &g.edges {
        reach[e.src][e.trg] = true;
        reach[e.trg][e.src] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach.iter().all(|row| row.iter().all(|&r| r))
}

/// Shortest distances from `s` (Floyd–Warshall over extended naturals).
#[allow(clippy::needless_range_loop)]
pub fn oracle_mu(g: &Graph, cost: &[Nat], s: Vertex) -> Vec<ExtNat> {
    let n = g.num_verts;
    let mut d = vec![vec![ExtNat::Infinity; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = ExtNat::zero();
    }
    for (i, e) in g.edges.iter().enumerate() {
        let c = ExtNat::Finite(cost[i].clone());
        if c < d[e.src][e.trg] {
            d[e.src][e.trg] = c;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k].value().cloned() else { continue };
            for j in 0..n {
                let through = d[k][j].plus(&ik);
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    d.swap_remove(s)
}

/// Size of a maximum matching, by enumerating every edge subset that is a
/// matching (branches that reuse a vertex are pruned).
pub fn oracle_max_matching_size(g: &Graph) -> Result<usize, OracleError> {
    oracle_max_matching_size_bounded(g, DEFAULT_MAX_MATCHING_EDGES)
}

pub fn oracle_max_matching_size_bounded(g: &Graph, max_edges: usize) -> Result<usize, OracleError> {
    if g.num_edges() > max_edges {
        return Err(OracleError::InstanceTooLarge {
            edges: g.num_edges(),
            bound: max_edges,
        });
    }
    let mut best = 0;
    for_each_matching(g, |chosen| best = best.max(chosen.len()));
    Ok(best)
}

/// Calls `visit` with the edge ids of every matching of the undirected
/// reading of `g` (self-loops never belong to a matching).
pub fn for_each_matching(g: &Graph, mut visit: impl FnMut(&[usize])) {
    fn go(g: &Graph, i: usize, used: &mut Vec<bool>, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == g.num_edges() {
            visit(chosen);
            return;
        }
        go(g, i + 1, used, chosen, visit);
        let e = g.edges[i];
        if e.src != e.trg && !used[e.src] && !used[e.trg] {
            used[e.src] = true;
            used[e.trg] = true;
            chosen.push(i);
            go(g, i + 1, used, chosen, visit);
            chosen.pop();
            used[e.src] = false;
            used[e.trg] = false;
        }
    }
    let mut used = vec![false; g.num_verts];
    go(g, 0, &mut used, &mut Vec::new(), &mut visit);
}

/// Plain Euclid.
pub fn oracle_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut x, mut y) = (a.abs(), b.abs());
    while !y.is_zero() {
        let r = x.mod_floor(&y);
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// Number of the first `i` vertices labeled `c`, by recursion on `i`.
pub fn label_count(labels: &[Label], c: Label, i: usize) -> usize {
    if i == 0 {
        0
    } else {
        usize::from(labels[i - 1] == c) + label_count(labels, c, i - 1)
    }
}

/// `sum_{2 <= j <= i} floor(n_j / 2)` over the first `n` vertices.
pub fn rec_weight(labels: &[Label], n: usize, i: usize) -> usize {
    if i < 2 {
        0
    } else {
        label_count(labels, i, n) / 2 + rec_weight(labels, n, i - 1)
    }
}

pub fn full_weight(labels: &[Label], n: usize, i: usize) -> usize {
    label_count(labels, 1, n) + rec_weight(labels, n, i)
}

/// A certificate triple for any of the supported problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triple {
    Connectivity(ConnectivityTriple),
    ShortestPaths(SpTriple),
    Matching(MatchingTriple),
    Gcd(GcdTriple),
}

/// Truth value of the witness predicate, evaluated by literal expansion of
/// its quantifiers.
pub fn eval_witness_predicate(t: &Triple) -> Result<bool, OracleError> {
    match t {
        Triple::Connectivity(t) => eval_connectivity(t),
        Triple::ShortestPaths(t) => eval_shortest_paths(t),
        Triple::Matching(t) => eval_matching(t),
        Triple::Gcd(t) => eval_gcd(t),
    }
}

fn require(cond: bool, what: &str) -> Result<(), OracleError> {
    if cond {
        Ok(())
    } else {
        Err(OracleError::PreconditionViolated(what.to_string()))
    }
}

fn forall(range: std::ops::Range<usize>, p: impl Fn(usize) -> bool) -> bool {
    range.into_iter().all(p)
}

fn eval_connectivity(t: &ConnectivityTriple) -> Result<bool, OracleError> {
    let g = &t.graph;
    require(wellformed(g), "graph is not wellformed")?;
    let n = g.num_verts;
    let m = g.num_edges();
    Ok(match (&t.witness, t.connected) {
        (ConnectivityWitness::Tree(w), true) => {
            require(
                w.num.len() == n && w.parent_edge.len() == n,
                "tree arrays do not match n",
            )?;
            let r = w.root;
            let root_ok = r < n && w.num[r].is_zero() && w.parent_edge[r].is_none();
            root_ok
                && forall(0..n, |v| {
                    v == r
                        || w.parent_edge[v].is_some_and(|e| {
                            e < m && {
                                let (a, b) = (g.edges[e].src, g.edges[e].trg);
                                (v == a && w.num[v] == &w.num[b] + 1u32) || (v == b && w.num[v] == &w.num[a] + 1u32)
                            }
                        })
                })
        }
        (ConnectivityWitness::Cut(w), false) => {
            let inside = |v: Vertex| w.cut_set.contains(&v);
            let nonempty = (0..n).any(inside);
            let proper = (0..n).any(|v| !inside(v));
            let within_v = w.cut_set.iter().all(|&v| v < n);
            nonempty && proper && within_v && forall(0..m, |i| inside(g.edges[i].src) == inside(g.edges[i].trg))
        }
        _ => false,
    })
}

fn eval_shortest_paths(t: &SpTriple) -> Result<bool, OracleError> {
    let g = &t.graph;
    let w = &t.witness;
    let n = g.num_verts;
    let m = g.num_edges();
    require(wellformed(g), "graph is not wellformed")?;
    require(w.source < n, "source is not a vertex")?;
    require(
        w.dist.len() == n && w.num.len() == n && w.parent_edge.len() == n && w.cost.len() == m,
        "witness arrays do not match the graph",
    )?;
    let s = w.source;
    let start_val = w.dist[s] == ExtNat::zero();
    let no_path = forall(0..n, |v| w.dist[v].is_infinite() == w.num[v].is_infinite());
    let trian = forall(0..m, |i| {
        let e = g.edges[i];
        w.dist[e.trg] <= w.dist[e.src].plus(&w.cost[i])
    });
    let just = forall(0..n, |v| {
        !(v != s && w.num[v].is_finite())
            || w.parent_edge[v].is_some_and(|e| {
                e < m
                    && v == g.edges[e].trg
                    && w.dist[v] == w.dist[g.edges[e].src].plus(&w.cost[e])
                    && w.num[v] == w.num[g.edges[e].src].plus(&Nat::from(1u32))
            })
    });
    Ok(start_val && no_path && trian && just)
}

fn eval_matching(t: &MatchingTriple) -> Result<bool, OracleError> {
    let g = &t.graph;
    let w = &t.witness;
    let mg = &w.matching;
    let (n, m, mm) = (g.num_verts, g.num_edges(), mg.num_edges());
    require(wellformed(g) && wellformed(mg), "graphs are not wellformed")?;
    require(mg.num_verts == n, "matching has a different vertex count")?;
    require(
        forall(0..m, |i| g.edges[i].src != g.edges[i].trg),
        "input graph has a self-loop",
    )?;
    require(
        forall(0..mm, |i| mg.edges[i].src != mg.edges[i].trg),
        "matching has a self-loop",
    )?;
    require(
        forall(0..m, |i1| {
            forall(0..m, |i2| {
                i1 == i2 || g.edges[i1].src != g.edges[i2].src || g.edges[i1].trg != g.edges[i2].trg
            })
        }),
        "input graph has a duplicate edge",
    )?;
    require(
        w.edge_map.len() == mm && w.osc.len() == n,
        "witness arrays do not match",
    )?;

    let f = &w.edge_map;
    let l = &w.osc;
    let subset = forall(0..mm, |i| {
        f[i] < m && {
            let (me, ge) = (mg.edges[i], g.edges[f[i]]);
            (me.src == ge.src && me.trg == ge.trg) || (me.src == ge.trg && me.trg == ge.src)
        }
    });
    let is_matching = forall(0..mm, |i1| {
        forall(0..mm, |i2| {
            let (a, b) = (mg.edges[i1], mg.edges[i2]);
            i1 == i2 || (a.src != b.src && a.src != b.trg && a.trg != b.src && a.trg != b.trg)
        })
    });
    let in_range = forall(0..n, |v| l[v] < n);
    let cover = forall(0..m, |i| {
        let (a, b) = (l[g.edges[i].src], l[g.edges[i].trg]);
        a == 1 || b == 1 || (a == b && a >= 2)
    });
    let max_label = l.iter().copied().max().unwrap_or(0);
    let cardinality = mm == full_weight(l, n, max_label) && forall(0..n, |v| l[v] <= max_label);
    Ok(subset && is_matching && in_range && cover && cardinality)
}

fn eval_gcd(t: &GcdTriple) -> Result<bool, OracleError> {
    require(!t.a.is_negative() && !t.b.is_negative(), "inputs must be nonnegative")?;
    require(!(t.a.is_zero() && t.b.is_zero()), "inputs must not both be zero")?;
    let divides = |d: &BigInt, x: &BigInt| {
        if d.is_zero() {
            x.is_zero()
        } else {
            x.mod_floor(d).is_zero()
        }
    };
    Ok(!t.g.is_negative() && divides(&t.g, &t.a) && divides(&t.g, &t.b) && t.g == &t.s * &t.a + &t.t * &t.b)
}
