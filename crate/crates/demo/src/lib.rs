//! Browser demo: solve a graph problem, show the witness on the graph, edit
//! the witness and re-check it.
//!
//! Every operation returns a JSON document the page renders:
//!
//! ```text
//! { "n": 5, "edges": [[0, 1], ...], "directed": false,
//!   "highlight": [0, 2], "labels": ["0", "1", ...],
//!   "verdict": "ACCEPT", "detail": "", "witness": "tree 0\n..." }
//! ```

use certcheck::io::{assemble_triple, parse_graph, parse_witness, write_graph, write_witness, Problem, Witness};
use certcheck::solvers::{solve_connectivity, solve_max_matching, solve_shortest_paths};
use certcheck::{check, ConnectivityWitness, Graph, Nat, Triple, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn problem(name: &str) -> Result<Problem, String> {
    match name {
        "connected" => Ok(Problem::Connectivity),
        "sp" => Ok(Problem::ShortestPaths),
        "matching" => Ok(Problem::Matching),
        other => Err(format!("unknown problem `{other}`")),
    }
}

fn view(t: &Triple, witness_text: &str) -> Value {
    let (graph, directed, highlight, labels): (&Graph, bool, Vec<usize>, Vec<String>) = match t {
        Triple::Connectivity(t) => match &t.witness {
            ConnectivityWitness::Tree(w) => (
                &t.graph,
                false,
                w.parent_edge.iter().flatten().copied().collect(),
                w.num.iter().map(|k| format!("num {k}")).collect(),
            ),
            ConnectivityWitness::Cut(w) => (
                &t.graph,
                false,
                vec![],
                (0..t.graph.num_verts)
                    .map(|v| if w.cut_set.contains(&v) { "in cut" } else { "" }.to_string())
                    .collect(),
            ),
        },
        Triple::ShortestPaths(t) => (
            &t.graph,
            true,
            t.witness.parent_edge.iter().flatten().copied().collect(),
            t.witness.dist.iter().map(|d| format!("d {d}")).collect(),
        ),
        Triple::Matching(t) => (
            &t.graph,
            false,
            t.witness.edge_map.clone(),
            t.witness.osc.iter().map(|l| format!("L {l}")).collect(),
        ),
        Triple::Gcd(_) => unreachable!("the demo only builds graph triples"),
    };
    let (verdict, detail) = match check(t) {
        Ok(Verdict::Accept) => ("ACCEPT".to_string(), String::new()),
        Ok(Verdict::Reject(r)) => (format!("REJECT: {}", r.clause), r.detail),
        Err(e) => ("ERROR".to_string(), e.to_string()),
    };
    json!({
        "n": graph.num_verts,
        "edges": graph.edges.iter().map(|e| [e.src, e.trg]).collect::<Vec<_>>(),
        "directed": directed,
        "highlight": highlight,
        "labels": labels,
        "verdict": verdict,
        "detail": detail,
        "witness": witness_text,
    })
}

/// Runs the solver for `problem` (`connected`, `sp` or `matching`) on the
/// graph text. `source` is only used for shortest paths; missing costs
/// default to 1.
pub fn solve_view(problem_name: &str, graph_text: &str, source: usize) -> Result<String, String> {
    let p = problem(problem_name)?;
    let mut input = parse_graph(graph_text).map_err(|e| e.to_string())?;
    let witness = match p {
        Problem::Connectivity => {
            Witness::Connectivity(solve_connectivity(&input.graph).map_err(|e| e.to_string())?.witness)
        }
        Problem::ShortestPaths => {
            let costs = input
                .costs
                .get_or_insert_with(|| vec![Nat::from(1u32); input.graph.num_edges()])
                .clone();
            let r = solve_shortest_paths(&input.graph, &costs, source).map_err(|e| e.to_string())?;
            Witness::ShortestPaths(r.witness)
        }
        Problem::Matching => Witness::Matching(solve_max_matching(&input.graph).map_err(|e| e.to_string())?.witness),
        Problem::Gcd => unreachable!(),
    };
    let text = write_witness(&witness);
    Ok(view(&assemble_triple(input, witness), &text).to_string())
}

/// Parses and checks a (possibly hand-edited) witness against the graph.
pub fn check_view(problem_name: &str, graph_text: &str, witness_text: &str) -> Result<String, String> {
    let p = problem(problem_name)?;
    let input = parse_graph(graph_text).map_err(|e| format!("graph: {e}"))?;
    let witness = parse_witness(p, witness_text, Some(&input)).map_err(|e| format!("witness: {e}"))?;
    Ok(view(&assemble_triple(input, witness), witness_text).to_string())
}

/// Random graph text with `n` vertices where each ordered pair (or each
/// unordered pair if `undirected`) is an edge with probability `p`. Costs in
/// `0..=max_cost` are attached when `max_cost > 0`.
pub fn random_graph_text(n: usize, p: f64, max_cost: u32, undirected: bool, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let candidate = if undirected { a < b } else { a != b };
            if candidate && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_pairs(n, &edges);
    let costs: Vec<Nat> = (0..edges.len())
        .map(|_| Nat::from(rng.gen_range(0..=max_cost)))
        .collect();
    write_graph(&g, (max_cost > 0).then_some(&costs[..]))
}

#[wasm_bindgen]
pub fn solve(problem: &str, graph: &str, source: usize) -> Result<String, JsError> {
    solve_view(problem, graph, source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check_witness(problem: &str, graph: &str, witness: &str) -> Result<String, JsError> {
    check_view(problem, graph, witness).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn random_graph(n: usize, p: f64, max_cost: u32, undirected: bool, seed: u64) -> String {
    random_graph_text(n, p, max_cost, undirected, seed)
}
