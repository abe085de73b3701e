//! The `facetray` command line. Every command prints one line of JSON.
//!
//! Exit codes: `0` on success, `1` when input cannot be parsed, `2` when a
//! well-formed input violates a precondition. Errors are reported as
//! `{"error": {"kind": ..., "message": ...}}` on standard output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use facetray::cutpoly::{
    all_cut_vectors, cycle_inequality, facets_k5_free, is_facet, is_valid, switch,
};
use facetray::exact::{is_psd, rat};
use facetray::extremal::{
    certify_frip_k5free, certify_frip_k5free_parallel, delta_matrix,
    extremal_rank_set_series_parallel, is_extremal, polar_point, sparsity_order_bounds,
    ExtremalCertificate,
};
use facetray::graph::CycleSubgraph;
use facetray::json::*;
use facetray::{Edge, Error, Graph};

/// Largest order for commands that enumerate all `2^{p−1}` cuts.
const MAX_CUT_ORDER: usize = 24;

#[derive(Parser)]
#[command(name = "facetray", version, about = "Cut polytope facets and extremal PSD matrices")]
struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All cut vectors of a graph.
    Cuts { graph: PathBuf },
    /// Facets of the cut polytope of a K5-minor-free graph.
    Facets {
        graph: PathBuf,
        /// Re-check every facet against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// The extremal matrix of the p-cycle for an odd set F of edge positions.
    Delta {
        p: usize,
        /// Comma-separated positions, e.g. `2,3,4`.
        f: String,
    },
    /// An extremal certificate for every facet of a K5-minor-free graph.
    Certify {
        graph: PathBuf,
        #[arg(long)]
        parallel: bool,
    },
    /// Extremal ranks of a series-parallel graph.
    Ranks { graph: PathBuf },
    /// Lower and upper bounds on the sparsity order.
    OrderBounds { graph: PathBuf },
    /// Validity and facet-ness of an inequality.
    CheckIneq { graph: PathBuf, ineq: PathBuf },
    /// Switch an inequality by a cut.
    Switch {
        graph: PathBuf,
        ineq: PathBuf,
        cut: PathBuf,
    },
    /// PSD test, rank, zero pattern, extremality and polar point of a matrix.
    VerifyMatrix { graph: PathBuf, matrix: PathBuf },
}

enum Failure {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Lib(e) if e.is_parse() => 1,
            Failure::Lib(_) => 2,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Usage(m) => ("usage", m.clone()),
            Failure::Io(m) => ("io", m.clone()),
            Failure::Lib(e) => (e.kind(), e.to_string()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

/// Runs the command line `argv` (including the program name), writing JSON to
/// `out` unless `--output` is given. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.render().to_string();
            eprint!("{msg}");
            return report(out, &Failure::Usage(msg.trim().to_string()));
        }
    };
    let result = execute(&cli.command).and_then(|value| {
        let text = format!("{value}\n");
        match &cli.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string())),
        }
    });
    match result {
        Ok(()) => 0,
        Err(f) => report(out, &f),
    }
}

fn report(out: &mut dyn Write, f: &Failure) -> i32 {
    let _ = writeln!(out, "{}", f.to_json());
    f.code()
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(graph_from_json(&read(path)?)?)
}

fn guard_cut_order(g: &Graph) -> Result<(), Failure> {
    if g.order() > MAX_CUT_ORDER {
        return Err(Error::ScaleGuard(format!(
            "{} vertices; cut enumeration is limited to {MAX_CUT_ORDER}",
            g.order()
        ))
        .into());
    }
    Ok(())
}

fn certificates_json(certs: &[ExtremalCertificate], g: &Graph) -> Value {
    json!({
        "count": certs.len(),
        "certificates": certs.iter().map(|c| certificate_to_json(c, g)).collect::<Vec<_>>(),
    })
}

fn execute(cmd: &Command) -> Result<Value, Failure> {
    match cmd {
        Command::Cuts { graph } => {
            let g = load_graph(graph)?;
            guard_cut_order(&g)?;
            let cuts: Vec<Value> = all_cut_vectors(&g).iter().map(cut_vector_to_json).collect();
            let edges: Vec<String> = g.edges().iter().map(Edge::key).collect();
            Ok(json!({ "edges": edges, "count": cuts.len(), "cuts": cuts }))
        }
        Command::Facets { graph, oracle } => {
            let g = load_graph(graph)?;
            let facets = facets_k5_free(&g)?;
            let mut out = json!({
                "count": facets.len(),
                "facets": facets.iter().map(|f| ineq_to_json(f, &g)).collect::<Vec<_>>(),
            });
            if *oracle {
                guard_cut_order(&g)?;
                if let Some(bad) = facets.iter().find(|f| !is_facet(&g, f)) {
                    return Err(Error::Certificate(format!(
                        "oracle rejects {}",
                        ineq_to_json(bad, &g)
                    ))
                    .into());
                }
                out["oracle_verified"] = json!(true);
            }
            Ok(out)
        }
        Command::Delta { p, f } => {
            let positions = parse_positions(f)?;
            let m = delta_matrix(*p, &positions)?;
            let c = Graph::cycle(*p);
            let cycle = CycleSubgraph::new(&c, (1..=*p).collect())?;
            let flipped: Vec<Edge> = positions.iter().map(|&s| cycle.edge_at(s)).collect();
            let facet = cycle_inequality(&c, &cycle, &flipped)?;
            let cert = ExtremalCertificate::for_matrix(&c, m.clone(), Some(facet), -1)?;
            cert.verify(&c)?;
            Ok(json!({
                "p": p,
                "F": positions,
                "matrix": matrix_to_json(&m),
                "certificate": certificate_to_json(&cert, &c),
            }))
        }
        Command::Certify { graph, parallel } => {
            let g = load_graph(graph)?;
            let certs = if *parallel {
                certify_frip_k5free_parallel(&g)?
            } else {
                certify_frip_k5free(&g)?
            };
            Ok(certificates_json(&certs, &g))
        }
        Command::Ranks { graph } => {
            let r = extremal_rank_set_series_parallel(&load_graph(graph)?)?;
            Ok(json!({ "ranks": r.ranks, "order": r.order }))
        }
        Command::OrderBounds { graph } => {
            let b = sparsity_order_bounds(&load_graph(graph)?);
            Ok(json!({ "lower": b.lower, "upper": b.upper }))
        }
        Command::CheckIneq { graph, ineq } => {
            let g = load_graph(graph)?;
            let q = ineq_from_json(&read(ineq)?, &g)?;
            guard_cut_order(&g)?;
            Ok(json!({ "valid": is_valid(&g, &q), "facet": is_facet(&g, &q) }))
        }
        Command::Switch { graph, ineq, cut } => {
            let g = load_graph(graph)?;
            let q = ineq_from_json(&read(ineq)?, &g)?;
            let u = cut_from_json(&read(cut)?, g.order())?;
            Ok(ineq_to_json(&switch(&q, &u, &g), &g))
        }
        Command::VerifyMatrix { graph, matrix } => {
            let g = load_graph(graph)?;
            let m = matrix_from_json(&read(matrix)?)?;
            if m.dim() != g.order() {
                return Err(Error::Dimension(format!(
                    "{0}×{0} matrix for a graph on {1} vertices",
                    m.dim(),
                    g.order()
                ))
                .into());
            }
            let pattern_ok = g
                .nonedges()
                .iter()
                .all(|e| *m.get(e.lo() - 1, e.hi() - 1) == rat(0));
            let psd = is_psd(&m);
            let extremal = psd && pattern_ok && is_extremal(&g, &m)?;
            let polar = match polar_point(&m, &g) {
                Ok(y) => vector_to_json(&y),
                Err(_) => Value::Null,
            };
            Ok(json!({
                "psd": psd,
                "rank": m.rank(),
                "zero_pattern_ok": pattern_ok,
                "extremal": extremal,
                "polar_point": polar,
            }))
        }
    }
}

fn parse_positions(f: &str) -> Result<Vec<usize>, Failure> {
    f.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Lib(Error::Parse(format!("{s:?} is not a position"))))
        })
        .collect()
}
