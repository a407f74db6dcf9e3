#![allow(dead_code)]

use certcheck::{Edge, ExtNat, Graph, Nat};
use rand::Rng;

/// Candidate edges for undirected sweeps that allow self-loops: `(i, j)`
/// with `i <= j`.
pub fn pairs_with_loops(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Every ordered pair, loops included.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

/// `(i, j)` with `i < j`.
pub fn simple_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// The subgraph of `pairs` selected by the bits of `mask`.
pub fn subgraph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &(a, b))| Edge::new(a, b))
        .collect();
    Graph::new(n, edges)
}

/// Calls `f` on every subgraph of `pairs(n)` for `n` in `ns`.
pub fn for_each_graph(
    ns: std::ops::RangeInclusive<usize>,
    pairs: fn(usize) -> Vec<(usize, usize)>,
    mut f: impl FnMut(Graph),
) {
    for n in ns {
        let ps = pairs(n);
        for mask in 0..1u64 << ps.len() {
            f(subgraph(n, &ps, mask));
        }
    }
}

pub fn flip_some(g: &mut Graph, rng: &mut impl Rng) {
    for e in &mut g.edges {
        if rng.gen_bool(0.5) {
            *e = Edge::new(e.trg, e.src);
        }
    }
}

/// Random multigraph with self-loops and parallel edges.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let edges = (0..m)
        .map(|_| Edge::new(rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Graph::new(n, edges)
}

/// Random loop-free graph without repeated ordered pairs; each unordered
/// pair is present with probability `p`, occasionally in both directions.
pub fn random_simple_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for (a, b) in simple_pairs(n) {
        if rng.gen_bool(p) {
            let e = if rng.gen_bool(0.5) {
                Edge::new(a, b)
            } else {
                Edge::new(b, a)
            };
            edges.push(e);
            if rng.gen_bool(0.05) {
                edges.push(Edge::new(e.trg, e.src));
            }
        }
    }
    Graph::new(n, edges)
}

pub fn nats(xs: impl IntoIterator<Item = u64>) -> Vec<Nat> {
    xs.into_iter().map(Nat::from).collect()
}

pub fn fin(x: u64) -> ExtNat {
    ExtNat::from(x)
}
