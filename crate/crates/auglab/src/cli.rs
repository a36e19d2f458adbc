//! The `auglab` command line.
//!
//! Four subcommands over flat files: `check` (hypothesis gate), `faces`
//! (face census), `augment` (arc-system realization) and `volume` (belted
//! sum arithmetic). JSON output is the stable machine format; text output
//! is for humans and carries no stability guarantee.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::augment::{build_augmented_link, AugmentRequest, AugmentResponse};
use crate::diagram::LinkDiagram;
use crate::dual::build_dual;
use crate::faces::FaceMap;
use crate::gate::check_hypotheses;
use crate::realize::{realize_disjoint_system, Realization};
use crate::volume::{
    approx_eq, evaluate, expression_terms, leaf_bindings, numeric_of_tree, parse_expression,
    DEFAULT_TOLERANCE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "auglab", version, about = "Workbench for generalized augmented alternating links")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Absolute tolerance for numeric consistency checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Cap on enumerated shortest routes per face pair.
    #[arg(long, global = true, env = "AUGLAB_CAP", default_value_t = 64)]
    cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the hypotheses of the hyperbolicity theorem for a PD file.
    Check { path: PathBuf },
    /// Report the complementary regions of a PD file.
    Faces { path: PathBuf },
    /// Realize a system of vertical components from a JSON request.
    Augment { path: PathBuf },
    /// Evaluate a belted-sum expression file.
    Volume {
        path: PathBuf,
        /// Require a fully bound numeric value.
        #[arg(long)]
        numeric: bool,
    },
}

/// Run with explicit arguments, capturing stdout; the exit code follows
/// the documented contract.
pub fn run(args: Vec<String>, out: &mut dyn std::io::Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors go to stderr with code 2; help and version go
            // to stdout with success.
            let rendered = e.render().to_string();
            if e.use_stderr() {
                eprint!("{rendered}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    if !(cli.tolerance > 0.0) {
        eprintln!("error: --tolerance must be positive");
        return EXIT_ERROR;
    }
    if cli.cap < 1 {
        eprintln!("error: --cap must be at least 1");
        return EXIT_ERROR;
    }
    let (code, body) = match &cli.command {
        Command::Check { path } => cmd_check(path, cli.format),
        Command::Faces { path } => cmd_faces(path, cli.format),
        Command::Augment { path } => cmd_augment(path, cli.format, cli.cap),
        Command::Volume { path, numeric } => cmd_volume(path, cli.format, *numeric, cli.tolerance),
    };
    match body {
        Ok(text) => {
            if let Some(target) = &cli.output {
                if let Err(e) = fs::write(target, text) {
                    eprintln!("error: cannot write {}: {e}", target.display());
                    return EXIT_ERROR;
                }
            } else if write!(out, "{text}").is_err() {
                return EXIT_ERROR;
            }
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn read_diagram(path: &PathBuf) -> Result<LinkDiagram, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    LinkDiagram::parse_pd(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_check(path: &PathBuf, format: Format) -> (i32, Result<String, String>) {
    let d = match read_diagram(path) {
        Ok(d) => d,
        Err(e) => return (EXIT_ERROR, Err(e)),
    };
    let report = check_hypotheses(&d);
    let code = if report.passes { EXIT_OK } else { EXIT_FAIL };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for (flag, value) in [
                ("connected", report.connected),
                ("alternating", report.alternating),
                ("reduced", report.reduced),
                ("obviously_prime", report.obviously_prime),
                ("two_braid", report.two_braid),
            ] {
                let _ = writeln!(s, "{flag}: {value}");
            }
            let _ = writeln!(s, "passes: {}", report.passes);
            for w in &report.witnesses {
                let _ = writeln!(s, "witness: {w:?}");
            }
            s
        }
    };
    (code, Ok(body))
}

#[derive(Serialize)]
struct FaceJson {
    index: usize,
    size: usize,
    darts: Vec<crate::diagram::Dart>,
    edges: Vec<u32>,
}

#[derive(Serialize)]
struct FacesReport {
    crossings: usize,
    edges: usize,
    connected: bool,
    sizes: Vec<usize>,
    faces: Vec<FaceJson>,
}

fn cmd_faces(path: &PathBuf, format: Format) -> (i32, Result<String, String>) {
    let d = match read_diagram(path) {
        Ok(d) => d,
        Err(e) => return (EXIT_ERROR, Err(e)),
    };
    let f = FaceMap::build(&d);
    let report = FacesReport {
        crossings: d.crossing_count(),
        edges: d.edge_count(),
        connected: d.projection_components() == 1,
        sizes: f.sizes_sorted(),
        faces: f
            .faces()
            .iter()
            .enumerate()
            .map(|(index, face)| FaceJson {
                index,
                size: face.len(),
                darts: face.darts().to_vec(),
                edges: face.edge_labels(&d),
            })
            .collect(),
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} crossings, {} edges, {} faces",
                report.crossings,
                report.edges,
                report.faces.len()
            );
            for face in &report.faces {
                let _ = writeln!(s, "face {}: size {} edges {:?}", face.index, face.size, face.edges);
            }
            s
        }
    };
    (EXIT_OK, Ok(body))
}

fn cmd_augment(path: &PathBuf, format: Format, cap: usize) -> (i32, Result<String, String>) {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return (EXIT_ERROR, Err(format!("cannot read {}: {e}", path.display()))),
    };
    let request: AugmentRequest = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => return (EXIT_ERROR, Err(format!("{}: {e}", path.display()))),
    };
    let d = match LinkDiagram::parse_pd(&request.diagram) {
        Ok(d) => d,
        Err(e) => return (EXIT_ERROR, Err(format!("diagram: {e}"))),
    };
    let f = FaceMap::build(&d);
    let dual = build_dual(&d, &f);
    let outcome = match realize_disjoint_system(&d, &f, &dual, &request.pairs, cap) {
        Ok(o) => o,
        Err(e) => return (EXIT_ERROR, Err(e.to_string())),
    };
    let (code, link) = match &outcome {
        Realization::Feasible(sys) => match build_augmented_link(&d, (**sys).clone()) {
            Ok(link) => (EXIT_OK, Some(link)),
            Err(e) => return (EXIT_FAIL, Err(e.to_string())),
        },
        Realization::Infeasible { .. } => (EXIT_INFEASIBLE, None),
        Realization::Unknown { .. } => (EXIT_UNKNOWN, None),
    };
    let response = AugmentResponse::from_realization(&outcome, link.as_ref(), cap);
    let body = match format {
        Format::Json => to_json(&response),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "status: {}", response.status);
            if let Some(arcs) = &response.arcs {
                for (i, arc) in arcs.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "arc {i}: faces {:?} route {:?} punctures {} ({:?})",
                        arc.endpoints, arc.route, arc.punctures, arc.classification
                    );
                }
            }
            if let Some(conflict) = &response.conflict {
                let _ = writeln!(s, "conflict: {conflict:?}");
            }
            s
        }
    };
    (code, Ok(body))
}

#[derive(Serialize)]
struct VolumeReport {
    terms: Vec<crate::volume::Term>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<f64>,
}

fn cmd_volume(
    path: &PathBuf,
    format: Format,
    require_numeric: bool,
    tolerance: f64,
) -> (i32, Result<String, String>) {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return (EXIT_ERROR, Err(format!("cannot read {}: {e}", path.display()))),
    };
    let tree = match parse_expression(&text) {
        Ok(t) => t,
        Err(e) => return (EXIT_ERROR, Err(format!("{}: {e}", path.display()))),
    };
    let expr = match evaluate(&tree) {
        Ok(e) => e,
        Err(e) => return (EXIT_ERROR, Err(e.to_string())),
    };
    let bindings: BTreeMap<String, f64> = match leaf_bindings(&tree) {
        Ok(b) => b,
        Err(e) => return (EXIT_ERROR, Err(e.to_string())),
    };
    let numeric = match expr.numeric(&bindings) {
        Ok(value) => {
            // Cross-check against direct recursive evaluation.
            let direct = numeric_of_tree(&tree, &bindings);
            match direct {
                Ok(direct) if approx_eq(value, direct, tolerance) => Some(value),
                Ok(direct) => {
                    return (
                        EXIT_ERROR,
                        Err(format!(
                            "numeric consistency check failed: {value} vs {direct} (tolerance {tolerance})"
                        )),
                    )
                }
                Err(e) => return (EXIT_ERROR, Err(e.to_string())),
            }
        }
        Err(e) => {
            if require_numeric {
                return (EXIT_FAIL, Err(e.to_string()));
            }
            None
        }
    };
    let report = VolumeReport {
        terms: expression_terms(&expr),
        numeric,
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "vol = {expr}");
            if let Some(value) = report.numeric {
                let _ = writeln!(s, "    = {value}");
            }
            s
        }
    };
    (EXIT_OK, Ok(body))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
