//! The `steiner` command-line front end.
//!
//! Every result is printed as one JSON object per line with fields `cmd`,
//! `input` and `result`. Big integers are decimal strings and ratios are
//! reduced `p/q` strings accompanied by a truncated decimal marked
//! approximate.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::count::{all_vertex_index, steiner_wiener, vertex_index};
use crate::error::{Error, Result};
use crate::extremal::{
    comet, global_local_bounds, internal_pair_ratio_bound, leaf_centroid_lower_bound,
    leaf_pair_ratio_bound, path_vertex_distance_closed, pendant_path_distance_closed, RatioBound,
};
use crate::median::{median_report, GapBounds};
use crate::oracle::IndexMode;
use crate::ratio::Ratio;
use crate::tree::{parse_tree, Tree};
use crate::verify::{verify, Check, KPolicy};

const APPROX_PLACES: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "steiner", version, about = "Exact Steiner distance invariants on trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Steiner distance of a vertex set.
    Dist {
        #[command(flatten)]
        tree: TreeArg,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Steiner k-distance of one vertex or of every vertex.
    VertexIndex {
        #[command(flatten)]
        tree: TreeArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "all")]
        mode: IndexMode,
        #[arg(long, required_unless_present = "all_vertices", conflicts_with = "all_vertices")]
        v: Option<usize>,
        #[arg(long)]
        all_vertices: bool,
    },
    /// Steiner k-Wiener index.
    Wiener {
        #[command(flatten)]
        tree: TreeArg,
        #[arg(long)]
        k: usize,
    },
    /// The three k-medians, their gaps and the gap inequalities.
    Median {
        #[command(flatten)]
        tree: TreeArg,
        #[arg(long)]
        k: usize,
    },
    /// The r-comet on n vertices.
    Comet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Print the tree in edge-list file format instead of a record.
        #[arg(long)]
        edge_list: bool,
    },
    /// Extremal ratio bounds.
    Bounds {
        #[arg(value_enum)]
        which: BoundKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Closed-form Steiner k-distances on paths.
    ClosedForm {
        #[arg(value_enum)]
        which: ClosedKind,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive verification over all free trees up to `--nmax` vertices.
    Verify {
        #[arg(long)]
        nmax: usize,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        /// `all` or a comma-separated list of subset sizes.
        #[arg(long, default_value = "all")]
        k: String,
        /// Write the full report as JSON to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct TreeArg {
    /// Tree file in edge-list format, or `-` for standard input.
    #[arg(long = "tree")]
    path: PathBuf,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum BoundKind {
    LeafPair,
    InternalPair,
    LeafCentroid,
    GlobalLocal,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum ClosedKind {
    Path,
    Pendant,
}

/// Runs the CLI on `argv` (program name first) against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, cmd: &str, input: Value, result: Value) -> Result<()> {
    let record = json!({ "cmd": cmd, "input": input, "result": result });
    writeln!(out, "{record}").map_err(io_error)
}

fn io_error(e: io::Error) -> Error {
    Error::ParameterOutOfRange(format!("i/o error: {e}"))
}

/// Reads and parses a tree, returning it with the SHA-256 of the raw input.
fn load_tree(path: &Path) -> Result<(Tree, String)> {
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut bytes).map_err(io_error)?;
    } else {
        bytes = fs::read(path).map_err(|e| Error::MalformedInput {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
    }
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::MalformedInput {
        line: 0,
        message: "input is not UTF-8".into(),
    })?;
    let tree = parse_tree(&text)?;
    Ok((tree, hex(&Sha256::digest(&bytes))))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn tree_input(path: &Path, tree: &Tree, digest: &str) -> Value {
    json!({ "tree": path.display().to_string(), "n": tree.n(), "sha256": digest })
}

fn ratio_json(r: &Ratio) -> Value {
    json!({ "value": r.to_string(), "approx_decimal": r.to_decimal(APPROX_PLACES) })
}

fn bound_json(b: &RatioBound) -> Value {
    json!({
        "value": b.value.to_string(),
        "approx_decimal": b.value.to_decimal(APPROX_PLACES),
        "witness_r": b.witness_r,
        "regime": b.regime,
        "extremal": b.extremal,
    })
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Dist { tree, set } => {
            let (t, digest) = load_tree(&tree.path)?;
            let value = t.steiner_distance(&set)?;
            let mut sorted = set.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let mut input = tree_input(&tree.path, &t, &digest);
            input["set"] = json!(sorted);
            emit(out, "dist", input, json!({ "value": value.to_string() }))?;
        }
        Command::VertexIndex { tree, k, mode, v, all_vertices } => {
            let (t, digest) = load_tree(&tree.path)?;
            let mut input = tree_input(&tree.path, &t, &digest);
            input["k"] = json!(k);
            input["mode"] = json!(mode);
            if all_vertices {
                let table = all_vertex_index(&t, k, mode)?;
                let values: Vec<String> = table.values.iter().map(ToString::to_string).collect();
                let result = json!({
                    "values": values,
                    "min": table.min().to_string(),
                    "argmin": table.argmin(),
                });
                emit(out, "vertex-index", input, result)?;
            } else {
                let v = v.expect("clap requires --v without --all-vertices");
                input["v"] = json!(v);
                let value = vertex_index(&t, v, k, mode)?;
                emit(out, "vertex-index", input, json!({ "value": value.to_string() }))?;
            }
        }
        Command::Wiener { tree, k } => {
            let (t, digest) = load_tree(&tree.path)?;
            let value = steiner_wiener(&t, k)?;
            let mut input = tree_input(&tree.path, &t, &digest);
            input["k"] = json!(k);
            emit(out, "wiener", input, json!({ "value": value.to_string() }))?;
        }
        Command::Median { tree, k } => {
            let (t, digest) = load_tree(&tree.path)?;
            let report = median_report(&t, k)?;
            let bounds = GapBounds::evaluate(t.n(), &report);
            let mut input = tree_input(&tree.path, &t, &digest);
            input["k"] = json!(k);
            let mut result = serde_json::to_value(&report).expect("report serializes");
            result["gap_bounds"] = json!({
                "leaf_internal": { "holds": bounds.leaf_internal.holds(), "applies": bounds.leaf_internal.applies, "bound": bounds.leaf_internal.bound_text() },
                "leaf_all": { "holds": bounds.leaf_all.holds(), "applies": bounds.leaf_all.applies, "bound": bounds.leaf_all.bound_text() },
                "internal_all": { "holds": bounds.internal_all.holds(), "applies": bounds.internal_all.applies, "bound": bounds.internal_all.bound_text() },
            });
            emit(out, "median", input, result)?;
        }
        Command::Comet { n, r, edge_list } => {
            let (t, spec) = comet(n, r)?;
            if edge_list {
                write!(out, "{t}").map_err(io_error)?;
            } else {
                let edges: Vec<[usize; 2]> = t.edges().iter().map(|&(u, v)| [u, v]).collect();
                let result = json!({ "n": n, "edges": edges, "marked": spec });
                emit(out, "comet", json!({ "n": n, "r": r }), result)?;
            }
        }
        Command::Bounds { which, n, k } => {
            let input = json!({ "n": n, "k": k });
            let (name, result) = match which {
                BoundKind::LeafPair => ("leaf-pair", bound_json(&leaf_pair_ratio_bound(n, k)?)),
                BoundKind::InternalPair => ("internal-pair", bound_json(&internal_pair_ratio_bound(n, k)?)),
                BoundKind::LeafCentroid => ("leaf-centroid", bound_json(&leaf_centroid_lower_bound(n, k)?)),
                BoundKind::GlobalLocal => {
                    let (lo, hi) = global_local_bounds(n, k)?;
                    ("global-local", json!({ "lower": ratio_json(&lo), "upper": ratio_json(&hi) }))
                }
            };
            let mut input = input;
            input["bound"] = json!(name);
            emit(out, "bounds", input, result)?;
        }
        Command::ClosedForm { which, a, b, k } => {
            let (name, value) = match which {
                ClosedKind::Path => ("path", path_vertex_distance_closed(a, b, k)?),
                ClosedKind::Pendant => ("pendant", pendant_path_distance_closed(a, b, k)?),
            };
            let input = json!({ "form": name, "a": a, "b": b, "k": k });
            emit(out, "closed-form", input, json!({ "value": value.to_string() }))?;
        }
        Command::Verify { nmax, checks, k, report } => {
            let checks = Check::parse_list(&checks)?;
            let policy: KPolicy = k.parse()?;
            let full = verify(nmax, &checks, &policy)?;
            let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
            let input = json!({ "nmax": nmax, "checks": names, "k": k });
            for c in &full.checks {
                let result = json!({
                    "check": c.check,
                    "passed": c.passed(),
                    "trees_examined": c.trees_examined,
                    "cases_checked": c.cases_checked,
                    "cases_skipped": c.cases_skipped,
                    "violations": c.violation_count,
                });
                emit(out, "verify", input.clone(), result)?;
                let _ = writeln!(err, "{}: {:.3}s", c.check, c.elapsed.as_secs_f64());
            }
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&full).expect("report serializes");
                fs::write(&path, text + "\n").map_err(|e| {
                    Error::ParameterOutOfRange(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            if !full.passed() {
                let _ = writeln!(err, "verification found violations");
                return Ok(2);
            }
        }
    }
    Ok(0)
}
