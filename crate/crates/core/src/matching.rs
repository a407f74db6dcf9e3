//! Maximum cardinality matching certificates.
//!
//! A matching `M` is certified maximum by an odd-set cover: a vertex
//! labeling where every edge touches a vertex labeled 1 or joins two vertices
//! sharing a label `>= 2`. Any matching then has at most
//! `n_1 + sum_{i>=2} floor(n_i / 2)` edges, where `n_i` counts vertices
//! labeled `i`, so `|M|` reaching that bound proves `M` maximum.

use crate::graph::{first_malformed_edge, has_no_duplicate_edges, has_no_self_loops, EdgeId, Graph};
use crate::verdict::{expect_len, first_rejection, CheckError, Verdict};

pub type Label = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingWitness {
    /// The matching, as a graph over the same vertex set as the input.
    pub matching: Graph,
    /// `edge_map[i]` is the input-graph edge that matching edge `i` stands for.
    pub edge_map: Vec<EdgeId>,
    /// Odd-set cover, one label per vertex.
    pub osc: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingTriple {
    pub graph: Graph,
    pub witness: MatchingWitness,
}

fn subset_clause(g: &Graph, m: &Graph, f: &[EdgeId]) -> Verdict {
    for (i, me) in m.edges.iter().enumerate() {
        let Some(ge) = g.edge(f[i]) else {
            return Verdict::reject("subset", format!("matching edge {i} maps to missing edge {}", f[i]));
        };
        if !me.same_undirected(ge) {
            return Verdict::reject(
                "subset",
                format!(
                    "matching edge {i} = ({}, {}) differs from input edge {} = ({}, {})",
                    me.src, me.trg, f[i], ge.src, ge.trg
                ),
            );
        }
    }
    Verdict::Accept
}

fn matching_clause(m: &Graph) -> Verdict {
    let mut covered = vec![false; m.num_verts];
    for (i, e) in m.edges.iter().enumerate() {
        if covered[e.src] || covered[e.trg] {
            return Verdict::reject(
                "matching",
                format!(
                    "matching edge {i} = ({}, {}) shares an endpoint with an earlier edge",
                    e.src, e.trg
                ),
            );
        }
        covered[e.src] = true;
        covered[e.trg] = true;
    }
    Verdict::Accept
}

fn osc_clause(g: &Graph, osc: &[Label]) -> Verdict {
    if let Some(v) = osc.iter().position(|&l| l >= g.num_verts) {
        return Verdict::reject(
            "osc",
            format!("label {} of vertex {v} is not below {}", osc[v], g.num_verts),
        );
    }
    for (i, e) in g.edges.iter().enumerate() {
        let (a, b) = (osc[e.src], osc[e.trg]);
        if a == 1 || b == 1 || (a == b && a >= 2) {
            continue;
        }
        return Verdict::reject(
            "osc",
            format!("edge {i} = ({}, {}) with labels {a}, {b} is not covered", e.src, e.trg),
        );
    }
    Verdict::Accept
}

/// Every matching edge maps to an input edge with the same endpoints, in
/// either orientation.
///
/// Omitting this clause lets a checker accept "matchings" that use edges
/// the input graph does not have.
pub fn check_subset(g: &Graph, m: &Graph, f: &[EdgeId]) -> bool {
    subset_clause(g, m, f).is_accept()
}

/// No vertex is an endpoint of two matching edges. Requires `m` wellformed
/// and loop-free.
pub fn check_matching(m: &Graph) -> bool {
    matching_clause(m).is_accept()
}

/// All labels are below `n` and every edge is covered.
pub fn check_osc(g: &Graph, osc: &[Label]) -> bool {
    osc_clause(g, osc).is_accept()
}

/// `n_1 + sum_{i>=2} floor(n_i / 2)` for the labeling `osc`.
///
/// Only labels up to the largest one present are summed.
pub fn weight(g: &Graph, osc: &[Label]) -> usize {
    let max = osc.iter().copied().max().unwrap_or(0).max(1);
    let mut count = vec![0usize; (max + 1).max(g.num_verts).max(2)];
    for &l in osc {
        count[l] += 1;
    }
    count[1] + count[2..=max].iter().map(|c| c / 2).sum::<usize>()
}

fn precondition(t: &MatchingTriple) -> Result<(), CheckError> {
    let g = &t.graph;
    let m = &t.witness.matching;
    let violated = |what: String| Err(CheckError::PreconditionViolated(what));
    if let Some(e) = first_malformed_edge(g) {
        return violated(format!("input edge {e} has an endpoint outside 0..{}", g.num_verts));
    }
    if m.num_verts != g.num_verts {
        return violated(format!(
            "matching has {} vertices but the input graph has {}",
            m.num_verts, g.num_verts
        ));
    }
    if let Some(e) = first_malformed_edge(m) {
        return violated(format!("matching edge {e} has an endpoint outside 0..{}", m.num_verts));
    }
    if !has_no_self_loops(g) {
        return violated("input graph has a self-loop".into());
    }
    if !has_no_self_loops(m) {
        return violated("matching has a self-loop".into());
    }
    if !has_no_duplicate_edges(g) {
        return violated("input graph has a duplicate edge".into());
    }
    expect_len("edge_map", t.witness.edge_map.len(), m.num_edges())?;
    expect_len("osc", t.witness.osc.len(), g.num_verts)
}

/// Full matching checker: subset, matching, odd-set cover, then the
/// cardinality equation (clause `weight`).
pub fn check_max_matching(t: &MatchingTriple) -> Result<Verdict, CheckError> {
    precondition(t)?;
    let g = &t.graph;
    let w = &t.witness;
    Ok(first_rejection!(
        subset_clause(g, &w.matching, &w.edge_map),
        matching_clause(&w.matching),
        osc_clause(g, &w.osc),
        {
            let bound = weight(g, &w.osc);
            if w.matching.num_edges() == bound {
                Verdict::Accept
            } else {
                Verdict::reject(
                    "weight",
                    format!(
                        "matching has {} edges but the cover bounds it by {bound}",
                        w.matching.num_edges()
                    ),
                )
            }
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{matching_graph, matching_witness};

    #[test]
    fn subset_examples() {
        let m = Graph::from_pairs(4, &[(0, 1)]);
        let g = Graph::from_pairs(4, &[(2, 3), (1, 0)]);
        assert!(check_subset(&g, &m, &[1]));
        assert!(!check_subset(&g, &m, &[0]));
        assert!(!check_subset(&g, &m, &[2]));
        // matching edge (0, 1) is absent from the graph: no map can help
        let g = Graph::from_pairs(4, &[(2, 3), (1, 2)]);
        assert!(!check_subset(&g, &m, &[0]) && !check_subset(&g, &m, &[1]));
    }

    #[test]
    fn matching_examples() {
        assert!(check_matching(&matching_witness().matching));
        assert!(!check_matching(&Graph::from_pairs(3, &[(0, 1), (1, 2)])));
        assert!(check_matching(&Graph::new(3, vec![])));
    }

    #[test]
    fn osc_examples() {
        let g = matching_graph();
        assert!(check_osc(&g, &matching_witness().osc));
        let mut osc = matching_witness().osc;
        osc[8] = 0;
        assert!(!check_osc(&g, &osc));
        assert!(check_osc(&Graph::new(3, vec![]), &[0, 0, 0]));
        assert!(!check_osc(&Graph::new(3, vec![]), &[0, 3, 0]));
        // two endpoints labeled 2 and 3 are not covered
        assert!(!check_osc(&Graph::from_pairs(4, &[(0, 1)]), &[2, 3, 0, 0]));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&matching_graph(), &matching_witness().osc), 5);
        assert_eq!(weight(&Graph::new(4, vec![]), &[0, 0, 0, 0]), 0);
        assert_eq!(weight(&Graph::new(6, vec![]), &[1, 1, 2, 2, 2, 3]), 3);
        assert_eq!(weight(&Graph::new(0, vec![]), &[]), 0);
    }

    #[test]
    fn full_checker_examples() {
        let accept = MatchingTriple {
            graph: matching_graph(),
            witness: matching_witness(),
        };
        assert_eq!(check_max_matching(&accept), Ok(Verdict::Accept));

        let mut short = accept.clone();
        short.witness.matching.edges.pop();
        short.witness.edge_map.pop();
        assert_eq!(check_max_matching(&short).unwrap().clause(), Some("weight"));

        let looped = MatchingTriple {
            graph: Graph::from_pairs(2, &[(0, 0)]),
            witness: MatchingWitness {
                matching: Graph::new(2, vec![]),
                edge_map: vec![],
                osc: vec![1, 0],
            },
        };
        assert!(matches!(
            check_max_matching(&looped),
            Err(CheckError::PreconditionViolated(_))
        ));

        let mut narrow = accept.clone();
        narrow.witness.matching.num_verts = 11;
        assert!(matches!(
            check_max_matching(&narrow),
            Err(CheckError::PreconditionViolated(_))
        ));

        let mut dup = accept;
        dup.graph.edges.push(dup.graph.edges[0]);
        assert!(matches!(
            check_max_matching(&dup),
            Err(CheckError::PreconditionViolated(_))
        ));
    }
}
