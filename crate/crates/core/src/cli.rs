//! The `flatmorse` command line.
//!
//! Exit codes: 0 success, 1 error (bad usage, unreadable or malformed file),
//! 2 the function or input shape is invalid, 3 the functions are not
//! equivalent, 4 the diagram is inconsistent with the tree.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::counting::{max_pairs, upper_bound_general, ConsistentDiagrams, CountQuery};
use crate::equivalence::{EquivalenceError, Relation, Verdicts};
use crate::graph::Graph;
use crate::io;
use crate::morse::{MorseError, MorseFunction};
use crate::persistence::{compute_diagram_fast, compute_diagram_oracle, PersistenceDiagram};
use crate::realization::{realize, realize_randomized, RealizationError};
use crate::render::{render_barcode, Format, RenderSpec};
use crate::search::enumerate_achievable_diagrams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_EQUIVALENT: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "flatmorse", version, about = "Discrete Morse functions on graphs and their persistence diagrams")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a function file is a valid discrete Morse function.
    Validate {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        function: PathBuf,
    },
    /// Print the persistence diagram of a function.
    Persist {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        function: PathBuf,
        /// Use the persistent Betti number computation instead of union-find.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a function on a tree inducing the given diagram.
    Realize {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        diagram: PathBuf,
        /// Make the construction's free choices at random with this seed.
        #[arg(long, value_name = "SEED")]
        randomize_choices: Option<u64>,
    },
    /// Print the upper bound on the number of diagrams.
    Count {
        #[arg(long)]
        simplices: usize,
        #[arg(long)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        betti1: usize,
    },
    /// Compare two functions on the same graph.
    Equiv {
        #[arg(short, long)]
        graph: PathBuf,
        first: PathBuf,
        second: PathBuf,
        /// persistence, forman, homological or graph. Without it all four
        /// verdicts are printed.
        #[arg(long)]
        relation: Option<Relation>,
    },
    /// List the consistent diagrams for a tree, one JSON object per line.
    Enumerate {
        #[arg(long)]
        tree: PathBuf,
        /// Only diagrams with this many finite pairs.
        #[arg(long)]
        pairs: Option<usize>,
        /// Realize every diagram and check that it comes back unchanged.
        #[arg(long)]
        check_roundtrip: bool,
    },
    /// List every diagram some function on the graph induces.
    Achievable {
        #[arg(short, long)]
        graph: PathBuf,
    },
    /// Draw a diagram as a barcode.
    Render {
        #[arg(short, long)]
        diagram: PathBuf,
        #[arg(long, default_value = "ascii")]
        format: Format,
        #[arg(long, default_value_t = 80)]
        width: usize,
        #[arg(long)]
        no_grid: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl ToString) -> Failure {
    Failure { code, message: message.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_ERROR, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| fail(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<PersistenceDiagram, Failure> {
    io::parse_diagram(&read(path)?).map_err(|e| fail(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn invalid(e: MorseError) -> Failure {
    fail(EXIT_INVALID, format!("invalid function: {}: {e}", e.kind()))
}

fn load_function(g: &Graph, path: &Path) -> Result<MorseFunction, Failure> {
    let raw = io::parse_function(&read(path)?).map_err(|e| fail(EXIT_ERROR, format!("{}: {e}", path.display())))?;
    raw.validate(g).map_err(invalid)
}

fn realization_failure(e: RealizationError) -> Failure {
    match e {
        RealizationError::InconsistentDiagram { .. } | RealizationError::TooManyPairs { .. } => fail(EXIT_INCONSISTENT, e),
        RealizationError::NotATree => fail(EXIT_INVALID, e),
        _ => fail(EXIT_ERROR, e),
    }
}

fn equivalence_failure(e: EquivalenceError) -> Failure {
    match e {
        EquivalenceError::DifferentGraphs => fail(EXIT_INVALID, e),
        _ => fail(EXIT_ERROR, e),
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let w = |e: std::io::Error| fail(EXIT_ERROR, format!("write failed: {e}"));
    match command {
        Command::Validate { graph, function } => {
            let g = load_graph(&graph)?;
            let f = load_function(&g, &function)?;
            let (m0, m1) = f.critical_counts();
            let report = f.check_morse_inequalities();
            writeln!(out, "valid: {} critical vertices, {} critical edges", m0, m1).map_err(w)?;
            let values: Vec<String> = f.criticals().iter().map(|(s, v)| format!("{s}={v}")).collect();
            writeln!(out, "critical: {}", values.join(" ")).map_err(w)?;
            writeln!(out, "betti: b0={} b1={}; weak Morse inequalities hold: {}", report.b0, report.b1, report.holds)
                .map_err(w)?;
        }
        Command::Persist { graph, function, oracle } => {
            let g = load_graph(&graph)?;
            let f = load_function(&g, &function)?;
            let d = if oracle { compute_diagram_oracle(&f) } else { compute_diagram_fast(&f) }
                .map_err(|e| fail(EXIT_INVALID, e))?;
            writeln!(out, "{}", io::diagram_to_json(&d)).map_err(w)?;
        }
        Command::Realize { graph, diagram, randomize_choices } => {
            let t = load_graph(&graph)?;
            let d = load_diagram(&diagram)?;
            let f = match randomize_choices {
                Some(seed) => realize_randomized(&t, &d, seed).map(|(f, _)| f),
                None => realize(&t, &d),
            }
            .map_err(realization_failure)?;
            writeln!(out, "{}", io::function_to_json(&f)).map_err(w)?;
        }
        Command::Count { simplices, pairs, betti1 } => {
            let q = CountQuery::new(simplices, betti1, pairs).map_err(|e| fail(EXIT_INVALID, e))?;
            let n = upper_bound_general(q).map_err(|e| fail(EXIT_INVALID, e))?;
            writeln!(out, "{n}").map_err(w)?;
        }
        Command::Equiv { graph, first, second, relation } => {
            let g = load_graph(&graph)?;
            let f1 = load_function(&g, &first)?;
            let f2 = load_function(&g, &second)?;
            match relation {
                Some(r) => {
                    let holds = r.holds(&f1, &f2).map_err(equivalence_failure)?;
                    writeln!(out, "{r}: {}", if holds { "equivalent" } else { "not equivalent" }).map_err(w)?;
                    if !holds {
                        return Ok(EXIT_NOT_EQUIVALENT);
                    }
                }
                None => {
                    let v = Verdicts::compute(&f1, &f2).map_err(equivalence_failure)?;
                    writeln!(out, "{v}").map_err(w)?;
                }
            }
        }
        Command::Enumerate { tree, pairs, check_roundtrip } => {
            let t = load_graph(&tree)?;
            if !t.is_tree() {
                return Err(fail(EXIT_INVALID, "the graph is not a tree"));
            }
            let n = t.simplex_count();
            let ks: Vec<usize> = match pairs {
                Some(k) => vec![k],
                None => (0..=max_pairs(n)).collect(),
            };
            let mut failures = 0usize;
            let mut total = 0usize;
            for k in ks {
                for d in ConsistentDiagrams::new(n, k).map_err(|e| fail(EXIT_INVALID, e))? {
                    writeln!(out, "{}", io::diagram_to_json(&d)).map_err(w)?;
                    total += 1;
                    if check_roundtrip {
                        let ok = realize(&t, &d).ok().and_then(|f| compute_diagram_fast(&f).ok()).as_ref() == Some(&d);
                        if !ok {
                            failures += 1;
                            writeln!(err, "round trip failed: {d}").map_err(w)?;
                        }
                    }
                }
            }
            if check_roundtrip {
                writeln!(err, "round trip: {}/{} diagrams reproduced", total - failures, total).map_err(w)?;
                if failures > 0 {
                    return Ok(EXIT_ERROR);
                }
            }
        }
        Command::Achievable { graph } => {
            let g = load_graph(&graph)?;
            let all = enumerate_achievable_diagrams(&g).map_err(|e| fail(EXIT_INVALID, e))?;
            for d in &all {
                writeln!(out, "{}", io::diagram_to_json(d)).map_err(w)?;
            }
            writeln!(out, "count: {}", all.len()).map_err(w)?;
        }
        Command::Render { diagram, format, width, no_grid } => {
            let d = load_diagram(&diagram)?;
            let spec = RenderSpec { format, width, show_grid: !no_grid };
            let text = render_barcode(&d, &spec).map_err(|e| fail(EXIT_ERROR, e))?;
            write!(out, "{text}").map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the command line `argv` (program name first), writing results to
/// `stdout` or the `--out` file and diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let mut buffer = Vec::new();
    let result = execute(cli.command, &mut buffer, stderr);
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            // Partial output is still useful for streams, so it is kept.
            f.code
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &buffer).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(&buffer).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// [`run`] on the process's own streams.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
