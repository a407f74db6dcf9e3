//! The `certcheck` command-line driver.
//!
//! `check-*` subcommands print `ACCEPT` (exit 0) or `REJECT: <clause>`
//! (exit 1); `solve-*` subcommands print a witness file (exit 0). Any
//! malformed input or violated precondition prints `ERROR: <reason>` and
//! exits with 2.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::io::{
    assemble_triple, parse_graph, parse_triple, parse_witness, write_witness, GraphInput, Problem, Witness,
};
use crate::solvers::{solve_connectivity, solve_gcd, solve_max_matching, solve_shortest_paths};
use crate::{check, GcdTriple, Nat, Verdict};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "certcheck",
    version,
    about = "Check and produce certificates for graph problems and gcd"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a spanning-tree or cut certificate for undirected connectivity.
    CheckConnected(CheckArgs),
    /// Check a shortest-path tree; the graph must carry edge costs.
    CheckSp(CheckArgs),
    /// Check a matching together with its odd-set cover.
    CheckMatching(CheckArgs),
    /// Check a `gcd <a> <b> <g> <s> <t>` line.
    CheckGcd { file: PathBuf },
    /// Decide connectivity and print a tree or cut witness.
    SolveConnected(SolveArgs),
    /// Run Dijkstra and print a shortest-path witness (missing costs default to 1).
    SolveSp {
        #[command(flatten)]
        args: SolveArgs,
        #[arg(short, long, default_value_t = 0)]
        source: usize,
    },
    /// Compute a maximum matching and print it with an odd-set cover.
    SolveMatching(SolveArgs),
    /// Run extended Euclid and print the resulting gcd line.
    SolveGcd {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    /// Graph file, or a whole triple file when no witness file is given.
    graph: PathBuf,
    witness: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct SolveArgs {
    graph: PathBuf,
    /// Write the witness here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Outcome {
    Verdict(Verdict),
    Witness(String, Option<PathBuf>),
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn in_file(path: &Path, e: impl std::fmt::Display) -> String {
    format!("{}: {e}", path.display())
}

fn run_check(problem: Problem, args: &CheckArgs) -> Result<Outcome, String> {
    let triple = match &args.witness {
        Some(w) => {
            let input = load_graph(&args.graph)?;
            let witness = parse_witness(problem, &read(w)?, Some(&input)).map_err(|e| in_file(w, e))?;
            assemble_triple(input, witness)
        }
        None => parse_triple(problem, &read(&args.graph)?).map_err(|e| in_file(&args.graph, e))?,
    };
    check(&triple).map(Outcome::Verdict).map_err(|e| e.to_string())
}

fn load_graph(path: &Path) -> Result<GraphInput, String> {
    parse_graph(&read(path)?).map_err(|e| in_file(path, e))
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::CheckConnected(a) => run_check(Problem::Connectivity, &a),
        Command::CheckSp(a) => run_check(Problem::ShortestPaths, &a),
        Command::CheckMatching(a) => run_check(Problem::Matching, &a),
        Command::CheckGcd { file } => {
            let triple = parse_triple(Problem::Gcd, &read(&file)?).map_err(|e| in_file(&file, e))?;
            check(&triple).map(Outcome::Verdict).map_err(|e| e.to_string())
        }
        Command::SolveConnected(a) => {
            let input = load_graph(&a.graph)?;
            let r = solve_connectivity(&input.graph).map_err(|e| e.to_string())?;
            Ok(Outcome::Witness(
                write_witness(&Witness::Connectivity(r.witness)),
                a.output,
            ))
        }
        Command::SolveSp { args, source } => {
            let input = load_graph(&args.graph)?;
            let costs = input
                .costs
                .unwrap_or_else(|| vec![Nat::from(1u32); input.graph.num_edges()]);
            let r = solve_shortest_paths(&input.graph, &costs, source).map_err(|e| e.to_string())?;
            Ok(Outcome::Witness(
                write_witness(&Witness::ShortestPaths(r.witness)),
                args.output,
            ))
        }
        Command::SolveMatching(a) => {
            let input = load_graph(&a.graph)?;
            let r = solve_max_matching(&input.graph).map_err(|e| e.to_string())?;
            Ok(Outcome::Witness(write_witness(&Witness::Matching(r.witness)), a.output))
        }
        Command::SolveGcd { a, b, output } => {
            let parse = |s: &str| s.parse::<BigInt>().map_err(|e| format!("`{s}`: {e}"));
            let (a, b) = (parse(&a)?, parse(&b)?);
            let r = solve_gcd(&a, &b).map_err(|e| e.to_string())?;
            let triple = GcdTriple::from_solution(&a, &b, r);
            Ok(Outcome::Witness(write_witness(&Witness::Gcd(triple)), output))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn cli_main<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_ACCEPT };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let result = run(cli.command).and_then(|outcome| match outcome {
        Outcome::Witness(text, Some(path)) => fs::write(&path, text)
            .map(|_| Outcome::Witness(String::new(), None))
            .map_err(|e| in_file(&path, e)),
        other => Ok(other),
    });
    let written = match result {
        Ok(Outcome::Verdict(v)) => {
            let code = if v.is_accept() { EXIT_ACCEPT } else { EXIT_REJECT };
            if let Verdict::Reject(r) = &v {
                let _ = writeln!(stderr, "{}", r.detail);
            }
            writeln!(stdout, "{v}").map(|_| code)
        }
        Ok(Outcome::Witness(text, _)) => write!(stdout, "{text}").map(|_| EXIT_ACCEPT),
        Err(reason) => writeln!(stdout, "ERROR: {reason}").map(|_| EXIT_ERROR),
    };
    written.unwrap_or(EXIT_ERROR)
}
