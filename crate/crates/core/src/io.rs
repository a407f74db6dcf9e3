//! Line-based text formats for graphs, witnesses and whole triples.
//!
//! ```text
//! graph <n> <m>                 header, then m edge lines
//! <src> <trg> [<cost>]          costs on every edge line or on none
//!
//! tree <root>                   then n lines: <edge-id|-> <num>
//! cut <k>                       then k lines: <vertex>
//! sp <source>                   then n lines: <dist|INF> <num|INF> <edge-id|->
//! matching <k>                  then k lines: <src> <trg> <f>, then one line of n labels
//! gcd <a> <b> <g> <s> <t>
//! ```
//!
//! Tokens are base-10 and separated by whitespace. Only `s` and `t` in the
//! gcd line may be negative. `-` stands for "no edge" and `INF` for an
//! infinite distance or depth. A triple file is a graph section followed
//! directly by a witness section; trailing blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::connectivity::{ConnectivityTriple, ConnectivityWitness, CutWitness, SpanningTreeWitness};
use crate::extnat::{ExtNat, Nat};
use crate::gcd::GcdTriple;
use crate::graph::{Edge, Graph};
use crate::matching::{MatchingTriple, MatchingWitness};
use crate::oracles::Triple;
use crate::shortest_paths::{SpTriple, SpWitness};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: edge {edge} = ({src}, {trg}) has an endpoint outside 0..{num_verts}")]
    Wellformedness {
        line: usize,
        edge: usize,
        src: usize,
        trg: usize,
        num_verts: usize,
    },
    #[error("line {line}: expected {expected} {what}, found {found}")]
    LengthMismatch {
        line: usize,
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0}")]
    MissingCosts(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Connectivity,
    ShortestPaths,
    Matching,
    Gcd,
}

/// A parsed graph file: the graph and, if every edge line had one, the costs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    pub graph: Graph,
    pub costs: Option<Vec<Nat>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Connectivity(ConnectivityWitness),
    ShortestPaths(SpWitness),
    Matching(MatchingWitness),
    Gcd(GcdTriple),
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    /// Line number reported when input ends early.
    end_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str, first_line: usize) -> Self {
        let mut lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (first_line + i, l.split_whitespace().collect()))
            .collect();
        while lines.last().is_some_and(|(_, t)| t.is_empty()) {
            lines.pop();
        }
        let end_line = lines.last().map_or(first_line, |(n, _)| n + 1);
        Lines {
            lines,
            pos: 0,
            end_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.clone())
            }
            None => Err(FormatError::Parse {
                line: self.end_line,
                reason: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn peek_is_blank(&self) -> bool {
        self.lines.get(self.pos).is_some_and(|(_, t)| t.is_empty())
    }

    fn finish(&self) -> Result<(), FormatError> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((line, _)) => Err(FormatError::Parse {
                line: *line,
                reason: "unexpected trailing content".into(),
            }),
        }
    }
}

fn perr(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

fn is_digits(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit())
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    if !is_digits(tok) {
        return Err(perr(line, format!("{what} must be a nonnegative integer, got `{tok}`")));
    }
    tok.parse()
        .map_err(|_| perr(line, format!("{what} `{tok}` is too large")))
}

fn parse_nat(line: usize, tok: &str, what: &str) -> Result<Nat, FormatError> {
    if !is_digits(tok) {
        return Err(perr(line, format!("{what} must be a nonnegative integer, got `{tok}`")));
    }
    Nat::from_str(tok).map_err(|e| perr(line, format!("{what}: {e}")))
}

fn parse_int(line: usize, tok: &str, what: &str) -> Result<BigInt, FormatError> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if !is_digits(digits) {
        return Err(perr(line, format!("{what} must be an integer, got `{tok}`")));
    }
    BigInt::from_str(tok).map_err(|e| perr(line, format!("{what}: {e}")))
}

fn parse_ext(line: usize, tok: &str, what: &str) -> Result<ExtNat, FormatError> {
    if tok == "INF" {
        Ok(ExtNat::Infinity)
    } else {
        parse_nat(line, tok, what).map(ExtNat::Finite)
    }
}

fn parse_opt_edge(line: usize, tok: &str) -> Result<Option<usize>, FormatError> {
    if tok == "-" {
        Ok(None)
    } else {
        parse_usize(line, tok, "edge id").map(Some)
    }
}

fn expect_tokens(line: usize, toks: &[&str], n: usize, shape: &str) -> Result<(), FormatError> {
    if toks.len() == n {
        Ok(())
    } else {
        Err(perr(line, format!("expected `{shape}`, got {} tokens", toks.len())))
    }
}

fn read_graph(lines: &mut Lines<'_>) -> Result<GraphInput, FormatError> {
    let (line, toks) = lines.next("`graph <n> <m>` header")?;
    if toks.first() != Some(&"graph") {
        return Err(perr(line, "expected `graph <n> <m>` header"));
    }
    expect_tokens(line, &toks, 3, "graph <n> <m>")?;
    let n = parse_usize(line, toks[1], "vertex count")?;
    let m = parse_usize(line, toks[2], "edge count")?;

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut costs = Vec::new();
    let mut with_costs = None;
    for i in 0..m {
        let (line, toks) = lines.next("an edge line").map_err(|_| FormatError::LengthMismatch {
            line: lines.end_line,
            what: "edge lines",
            expected: m,
            found: i,
        })?;
        let has_cost = match toks.len() {
            2 => false,
            3 => true,
            k => return Err(perr(line, format!("expected `<src> <trg> [<cost>]`, got {k} tokens"))),
        };
        if *with_costs.get_or_insert(has_cost) != has_cost {
            return Err(perr(line, "either every edge line has a cost or none does"));
        }
        let src = parse_usize(line, toks[0], "source vertex")?;
        let trg = parse_usize(line, toks[1], "target vertex")?;
        if src >= n || trg >= n {
            return Err(FormatError::Wellformedness {
                line,
                edge: i,
                src,
                trg,
                num_verts: n,
            });
        }
        edges.push(Edge::new(src, trg));
        if has_cost {
            costs.push(parse_nat(line, toks[2], "cost")?);
        }
    }
    Ok(GraphInput {
        graph: Graph::new(n, edges),
        costs: with_costs.unwrap_or(false).then_some(costs),
    })
}

/// Parses a standalone graph file.
pub fn parse_graph(text: &str) -> Result<GraphInput, FormatError> {
    let mut lines = Lines::new(text, 1);
    let g = read_graph(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

fn read_tree(lines: &mut Lines<'_>, line: usize, toks: &[&str], n: usize) -> Result<ConnectivityWitness, FormatError> {
    expect_tokens(line, toks, 2, "tree <root>")?;
    let root = parse_usize(line, toks[1], "root")?;
    let mut parent_edge = Vec::with_capacity(n);
    let mut num = Vec::with_capacity(n);
    for i in 0..n {
        let (line, toks) = lines.next("a tree line").map_err(|_| FormatError::LengthMismatch {
            line: lines.end_line,
            what: "tree lines",
            expected: n,
            found: i,
        })?;
        expect_tokens(line, &toks, 2, "<edge-id|-> <num>")?;
        parent_edge.push(parse_opt_edge(line, toks[0])?);
        num.push(parse_nat(line, toks[1], "num")?);
    }
    Ok(ConnectivityWitness::Tree(SpanningTreeWitness {
        root,
        parent_edge,
        num,
    }))
}

fn read_cut(lines: &mut Lines<'_>, line: usize, toks: &[&str]) -> Result<ConnectivityWitness, FormatError> {
    expect_tokens(line, toks, 2, "cut <k>")?;
    let k = parse_usize(line, toks[1], "cut size")?;
    let mut cut_set = BTreeSet::new();
    for i in 0..k {
        let (line, toks) = lines.next("a cut vertex").map_err(|_| FormatError::LengthMismatch {
            line: lines.end_line,
            what: "cut vertices",
            expected: k,
            found: i,
        })?;
        expect_tokens(line, &toks, 1, "<vertex>")?;
        let v = parse_usize(line, toks[0], "cut vertex")?;
        if !cut_set.insert(v) {
            return Err(perr(line, format!("cut vertex {v} listed twice")));
        }
    }
    Ok(ConnectivityWitness::Cut(CutWitness { cut_set }))
}

fn read_sp(lines: &mut Lines<'_>, line: usize, toks: &[&str], input: &GraphInput) -> Result<SpWitness, FormatError> {
    expect_tokens(line, toks, 2, "sp <source>")?;
    let source = parse_usize(line, toks[1], "source")?;
    let cost = match &input.costs {
        Some(c) => Some(c.clone()),
        None if input.graph.num_edges() == 0 => Some(Vec::new()),
        None => None,
    }
    .ok_or(FormatError::MissingCosts(
        "checking shortest paths requires a cost on every edge line",
    ))?;
    let n = input.graph.num_verts;
    let (mut dist, mut num, mut parent_edge) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 0..n {
        let (line, toks) = lines.next("a vertex line").map_err(|_| FormatError::LengthMismatch {
            line: lines.end_line,
            what: "vertex lines",
            expected: n,
            found: i,
        })?;
        expect_tokens(line, &toks, 3, "<dist|INF> <num|INF> <edge-id|->")?;
        dist.push(parse_ext(line, toks[0], "dist")?);
        num.push(parse_ext(line, toks[1], "num")?);
        parent_edge.push(parse_opt_edge(line, toks[2])?);
    }
    Ok(SpWitness {
        source,
        dist,
        num,
        parent_edge,
        cost,
    })
}

fn read_matching(lines: &mut Lines<'_>, line: usize, toks: &[&str], n: usize) -> Result<MatchingWitness, FormatError> {
    expect_tokens(line, toks, 2, "matching <k>")?;
    let k = parse_usize(line, toks[1], "matching size")?;
    let mut edges = Vec::with_capacity(k.min(1 << 20));
    let mut edge_map = Vec::with_capacity(k.min(1 << 20));
    for i in 0..k {
        let (line, toks) = lines.next("a matching edge").map_err(|_| FormatError::LengthMismatch {
            line: lines.end_line,
            what: "matching edges",
            expected: k,
            found: i,
        })?;
        expect_tokens(line, &toks, 3, "<src> <trg> <f>")?;
        let src = parse_usize(line, toks[0], "source vertex")?;
        let trg = parse_usize(line, toks[1], "target vertex")?;
        if src >= n || trg >= n {
            return Err(FormatError::Wellformedness {
                line,
                edge: i,
                src,
                trg,
                num_verts: n,
            });
        }
        edges.push(Edge::new(src, trg));
        edge_map.push(parse_usize(line, toks[2], "edge map entry")?);
    }
    let osc = if n == 0 {
        // the label line of an empty graph is blank and may be omitted
        if lines.peek_is_blank() {
            lines.pos += 1;
        }
        Vec::new()
    } else {
        let (line, toks) = lines.next("the label line")?;
        if toks.len() != n {
            return Err(FormatError::LengthMismatch {
                line,
                what: "labels",
                expected: n,
                found: toks.len(),
            });
        }
        toks.iter()
            .map(|t| parse_usize(line, t, "label"))
            .collect::<Result<_, _>>()?
    };
    Ok(MatchingWitness {
        matching: Graph::new(n, edges),
        edge_map,
        osc,
    })
}

fn read_gcd(line: usize, toks: &[&str]) -> Result<GcdTriple, FormatError> {
    expect_tokens(line, toks, 6, "gcd <a> <b> <g> <s> <t>")?;
    Ok(GcdTriple {
        a: parse_nat(line, toks[1], "a")?.into(),
        b: parse_nat(line, toks[2], "b")?.into(),
        g: parse_nat(line, toks[3], "g")?.into(),
        s: parse_int(line, toks[4], "s")?,
        t: parse_int(line, toks[5], "t")?,
    })
}

fn read_witness(lines: &mut Lines<'_>, problem: Problem, input: Option<&GraphInput>) -> Result<Witness, FormatError> {
    let (line, toks) = lines.next("a witness header")?;
    let tag = toks.first().copied().unwrap_or("");
    let n = input.map_or(0, |g| g.graph.num_verts);
    let witness = match (problem, tag) {
        (Problem::Connectivity, "tree") => Witness::Connectivity(read_tree(lines, line, &toks, n)?),
        (Problem::Connectivity, "cut") => Witness::Connectivity(read_cut(lines, line, &toks)?),
        (Problem::ShortestPaths, "sp") => {
            let input = input.expect("shortest-path witnesses need a graph");
            Witness::ShortestPaths(read_sp(lines, line, &toks, input)?)
        }
        (Problem::Matching, "matching") => Witness::Matching(read_matching(lines, line, &toks, n)?),
        (Problem::Gcd, "gcd") => Witness::Gcd(read_gcd(line, &toks)?),
        _ => {
            let expected = match problem {
                Problem::Connectivity => "`tree` or `cut`",
                Problem::ShortestPaths => "`sp`",
                Problem::Matching => "`matching`",
                Problem::Gcd => "`gcd`",
            };
            return Err(perr(line, format!("expected a {expected} witness header, got `{tag}`")));
        }
    };
    Ok(witness)
}

/// Parses a witness file against an already parsed graph (ignored for gcd).
pub fn parse_witness(problem: Problem, text: &str, input: Option<&GraphInput>) -> Result<Witness, FormatError> {
    if problem != Problem::Gcd && input.is_none() {
        return Err(perr(1, "graph witnesses need a graph"));
    }
    let mut lines = Lines::new(text, 1);
    let w = read_witness(&mut lines, problem, input)?;
    lines.finish()?;
    Ok(w)
}

/// Combines a parsed graph and witness into a triple.
pub fn assemble_triple(input: GraphInput, witness: Witness) -> Triple {
    match witness {
        Witness::Connectivity(w) => Triple::Connectivity(ConnectivityTriple {
            graph: input.graph,
            connected: w.claim(),
            witness: w,
        }),
        Witness::ShortestPaths(w) => Triple::ShortestPaths(SpTriple {
            graph: input.graph,
            witness: w,
        }),
        Witness::Matching(w) => Triple::Matching(MatchingTriple {
            graph: input.graph,
            witness: w,
        }),
        Witness::Gcd(t) => Triple::Gcd(t),
    }
}

/// Parses a triple from a graph file and a witness file.
pub fn parse_triple_parts(problem: Problem, graph_text: &str, witness_text: &str) -> Result<Triple, FormatError> {
    let input = parse_graph(graph_text)?;
    let witness = parse_witness(problem, witness_text, Some(&input))?;
    Ok(assemble_triple(input, witness))
}

/// Parses a single triple file: graph section immediately followed by the
/// witness section (just the gcd line for [`Problem::Gcd`]).
pub fn parse_triple(problem: Problem, text: &str) -> Result<Triple, FormatError> {
    let mut lines = Lines::new(text, 1);
    if problem == Problem::Gcd {
        let Witness::Gcd(t) = read_witness(&mut lines, problem, None)? else {
            unreachable!("gcd header yields a gcd witness")
        };
        lines.finish()?;
        return Ok(Triple::Gcd(t));
    }
    let input = read_graph(&mut lines)?;
    let witness = read_witness(&mut lines, problem, Some(&input))?;
    lines.finish()?;
    Ok(assemble_triple(input, witness))
}

pub fn write_graph(g: &Graph, costs: Option<&[Nat]>) -> String {
    let mut out = format!("graph {} {}\n", g.num_verts, g.num_edges());
    for (i, e) in g.edges.iter().enumerate() {
        match costs {
            Some(c) => writeln!(out, "{} {} {}", e.src, e.trg, c[i]),
            None => writeln!(out, "{} {}", e.src, e.trg),
        }
        .expect("writing to a String cannot fail");
    }
    out
}

fn opt_edge(e: Option<usize>) -> String {
    e.map_or_else(|| "-".to_string(), |e| e.to_string())
}

/// Serializes a witness. Shortest-path costs are not written; they belong to
/// the graph file.
pub fn write_witness(w: &Witness) -> String {
    let mut out = String::new();
    let mut put = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match w {
        Witness::Connectivity(ConnectivityWitness::Tree(t)) => {
            put(format!("tree {}", t.root));
            for (p, num) in t.parent_edge.iter().zip(&t.num) {
                put(format!("{} {num}", opt_edge(*p)));
            }
        }
        Witness::Connectivity(ConnectivityWitness::Cut(c)) => {
            put(format!("cut {}", c.cut_set.len()));
            for v in &c.cut_set {
                put(v.to_string());
            }
        }
        Witness::ShortestPaths(sp) => {
            put(format!("sp {}", sp.source));
            for v in 0..sp.dist.len() {
                put(format!("{} {} {}", sp.dist[v], sp.num[v], opt_edge(sp.parent_edge[v])));
            }
        }
        Witness::Matching(m) => {
            put(format!("matching {}", m.matching.num_edges()));
            for (e, f) in m.matching.edges.iter().zip(&m.edge_map) {
                put(format!("{} {} {f}", e.src, e.trg));
            }
            let labels: Vec<String> = m.osc.iter().map(ToString::to_string).collect();
            put(labels.join(" "));
        }
        Witness::Gcd(t) => put(format!("gcd {} {} {} {} {}", t.a, t.b, t.g, t.s, t.t)),
    }
    out
}
