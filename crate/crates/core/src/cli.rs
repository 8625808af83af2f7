//! Command-line front end.
//!
//! Every subcommand reads graphs in the native text format (or graph6) and
//! renders its result as plain text or, with `--format json`, as a JSON
//! object carrying `"schema": 1`. Exit status is 0 for success and true
//! verdicts, 1 for false verdicts and 2 for usage, input or domain errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io::{self, GraphFile};
use crate::kirchhoff::{self, DetMethod, DodgsonSpec};
use crate::matroid::{self, GraphicMatroid};
use crate::minors::{self, MinorPattern};
use crate::search::{self, SearchConfig};
use crate::splitting::{self, EnhancedGraph, SplitWitness};
use crate::width;
use crate::{EdgeId, EdgeSet, MultiGraph};

/// Version of the JSON report layout.
pub const JSON_SCHEMA: u32 = 1;

const PROBABILISTIC_BANNER: &str = "warning: probabilistic mode: Dodgsons are screened by evaluation at random integer points; \
a configuration reported as split may in fact be non-split, while non-split reports are exact";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Interpolation,
    Bareiss,
    Cofactor,
    Trees,
}

#[derive(Debug, Parser)]
#[command(name = "fivesplit", version, about = "Feynman 5-splitting of graphs and enhanced graphs")]
pub struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kirchhoff polynomial of a graph.
    Psi {
        /// Graph file, or `-` for standard input.
        file: PathBuf,
        /// Sum over spanning trees instead of the determinant.
        #[arg(long)]
        via_trees: bool,
    },
    /// Dodgson polynomial with rows I, columns J removed and K set to zero.
    Dodgson {
        file: PathBuf,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
        #[arg(long, default_value = "")]
        k: String,
        #[arg(long, value_enum, default_value_t = Method::Interpolation)]
        method: Method,
    },
    /// 5-invariant of five ordered edges.
    FiveInvariant {
        file: PathBuf,
        /// Five distinct edge ids, in order, separated by commas.
        #[arg(long)]
        edges: String,
    },
    /// Whether a graph (with optional `c:`/`d:` protections) is 5-split.
    SplitCheck {
        file: PathBuf,
        /// Check a single 5-configuration instead of all of them.
        #[arg(long)]
        config: Option<String>,
        /// Screen Dodgsons by random evaluation (plain graphs only).
        #[arg(long)]
        probabilistic: bool,
        /// Seed for the probabilistic screen.
        #[arg(long, default_value_t = 0, requires = "probabilistic")]
        seed: u64,
    },
    /// Exact width and an optimal edge ordering.
    Width {
        file: PathBuf,
        /// Decide `width <= K` instead (exit 1 when false).
        #[arg(long, value_name = "K")]
        at_most: Option<usize>,
        /// Also report the caterpillar width of the cycle matroid.
        #[arg(long)]
        caterpillar: bool,
    },
    /// Whether a pattern graph, or some member of F0, is a minor.
    MinorCheck {
        file: PathBuf,
        #[arg(long, required_unless_present = "f0", conflicts_with = "f0")]
        pattern: Option<PathBuf>,
        /// Test against K3,3, K5, cube, octahedron and H.
        #[arg(long)]
        f0: bool,
    },
    /// Exhaustive search for minor-minimal non-split enhanced graphs.
    SearchMinimal {
        #[arg(long, default_value_t = 11)]
        max_edges: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Catalog output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow protections outside the configuration (at most 8 edges).
        #[arg(long)]
        unrestricted: bool,
        /// Search all connected underlying graphs, not only 3-connected ones.
        #[arg(long)]
        all_connected: bool,
    },
    /// Regenerate the catalog and diff it against a golden file.
    VerifyCatalog {
        golden: PathBuf,
        #[arg(long, default_value_t = 11)]
        max_edges: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

/// Rendered result of one command.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { code: 0, text, json }
    }

    fn verdict(holds: bool, text: String, json: Value) -> Self {
        Report { code: if holds { 0 } else { 1 }, text, json }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command, err) {
        Ok(report) => {
            let written = match format {
                Format::Text => write!(out, "{}", report.text),
                Format::Json => {
                    let mut body = report.json;
                    body["schema"] = json!(JSON_SCHEMA);
                    writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("json value"))
                }
            };
            match written {
                Ok(()) => report.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    io::parse_graph(&read_input(path)?)
}

fn read_plain(path: &Path) -> Result<MultiGraph> {
    let file = read_graph(path)?;
    if !(file.contract_proof | file.delete_proof).is_empty() {
        return Err(Error::Domain("this command takes a graph without protections".into()));
    }
    Ok(file.graph)
}

fn ordered_ids(s: &str) -> Result<Vec<EdgeId>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Domain(format!("expected an edge id, found {t:?}"))))
        .collect()
}

fn ids(s: EdgeSet) -> Value {
    json!(s.to_vec())
}

fn list(s: EdgeSet) -> String {
    s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn execute(command: Command, err: &mut dyn Write) -> Result<Report> {
    match command {
        Command::Psi { file, via_trees } => {
            let g = read_plain(&file)?;
            let p = if via_trees { kirchhoff::kirchhoff_poly_via_trees(&g) } else { kirchhoff::kirchhoff_poly(&g) };
            Ok(Report::ok(format!("{p}\n"), json!({"command": "psi", "polynomial": p.to_string(), "terms": p.num_terms()})))
        }
        Command::Dodgson { file, i, j, k, method } => {
            let g = read_plain(&file)?;
            let spec = DodgsonSpec::new(io::parse_id_list(&i, 0)?, io::parse_id_list(&j, 0)?, io::parse_id_list(&k, 0)?)?;
            let p = match method {
                Method::Trees => kirchhoff::dodgson_via_trees(&g, &spec)?,
                Method::Interpolation => kirchhoff::dodgson(&g, &spec)?,
                Method::Bareiss => kirchhoff::dodgson_with(&g, &spec, &kirchhoff::default_convention(&g)?, DetMethod::Bareiss)?,
                Method::Cofactor => kirchhoff::dodgson_with(&g, &spec, &kirchhoff::default_convention(&g)?, DetMethod::Cofactor)?,
            };
            Ok(Report::ok(
                format!("{p}\n"),
                json!({"command": "dodgson", "spec": spec.to_string(), "polynomial": p.to_string(), "zero": p.is_zero()}),
            ))
        }
        Command::FiveInvariant { file, edges } => {
            let g = read_plain(&file)?;
            let order = ordered_ids(&edges)?;
            let order: [EdgeId; 5] =
                order.try_into().map_err(|v: Vec<EdgeId>| Error::Domain(format!("expected five edges, found {}", v.len())))?;
            let p = kirchhoff::five_invariant(&g, order)?;
            Ok(Report::ok(format!("{p}\n"), json!({"command": "five-invariant", "edges": order, "polynomial": p.to_string()})))
        }
        Command::SplitCheck { file, config, probabilistic, seed } => {
            split_check(&file, config.as_deref(), probabilistic.then_some(seed), err)
        }
        Command::Width { file, at_most, caterpillar } => {
            let g = read_plain(&file)?;
            let mut json = json!({"command": "width"});
            let mut text = String::new();
            let mut holds = true;
            if let Some(k) = at_most {
                holds = width::has_width_le(&g, k)?;
                text.push_str(&format!("width <= {k}: {holds}\n"));
                json["at_most"] = json!(k);
                json["holds"] = json!(holds);
            } else {
                let (w, order) = width::graph_width(&g)?;
                text.push_str(&format!("{w}\nordering: {}\n", order.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")));
                json["width"] = json!(w);
                json["ordering"] = json!(order);
            }
            if caterpillar {
                let (cw, order) = matroid::caterpillar_width_with_order(&GraphicMatroid::new(g))?;
                text.push_str(&format!(
                    "caterpillar width: {cw}\ncaterpillar ordering: {}\n",
                    order.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
                ));
                json["caterpillar_width"] = json!(cw);
                json["caterpillar_ordering"] = json!(order);
            }
            Ok(Report::verdict(holds, text, json))
        }
        Command::MinorCheck { file, pattern, f0 } => {
            let g = read_plain(&file)?;
            if f0 {
                let found = minors::f0_member_minor(&g);
                let text = match found {
                    Some(name) => format!("F0 minor: {name}\n"),
                    None => "F0-free\n".to_string(),
                };
                Ok(Report::verdict(found.is_some(), text, json!({"command": "minor-check", "f0_minor": found})))
            } else {
                let p = MinorPattern::new(read_plain(pattern.as_deref().expect("clap enforces a pattern"))?)?;
                let holds = minors::has_minor(&g, &p);
                Ok(Report::verdict(holds, format!("minor: {holds}\n"), json!({"command": "minor-check", "minor": holds})))
            }
        }
        Command::SearchMinimal { max_edges, jobs, checkpoint, out, unrestricted, all_connected } => {
            let config = SearchConfig { max_edges, jobs, checkpoint, unrestricted, require_3connected: !all_connected };
            let report = search::find_minimal_nonsplit(&config)?;
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let catalog = search::write_catalog(&report.entries);
            let counts = report.family_counts();
            let mut text = String::new();
            match &out {
                Some(path) => {
                    std::fs::write(path, &catalog).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    text.push_str(&format!("entries: {} ({} enhanced)\n", report.entries.len(), report.enhanced_count()));
                    for (family, n) in &counts {
                        text.push_str(&format!("{family}: {n}\n"));
                    }
                }
                None => text.push_str(&catalog),
            }
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| json!({"encoding": e.form.as_str(), "weight": e.weight, "family": e.family, "witness": ids(e.witness), "dual": e.dual_partner}))
                .collect();
            Ok(Report::ok(
                text,
                json!({
                    "command": "search-minimal",
                    "max_edges": max_edges,
                    "graphs_examined": report.graphs_examined,
                    "phase_one_survivors": report.phase_one_survivors,
                    "enhanced_count": report.enhanced_count(),
                    "family_counts": counts,
                    "entries": entries,
                }),
            ))
        }
        Command::VerifyCatalog { golden, max_edges, jobs, checkpoint } => {
            let config = SearchConfig { max_edges, jobs, checkpoint, ..SearchConfig::default() };
            let diff = search::verify_catalog(&config, &read_input(&golden)?)?;
            let forms = |v: &[minors::CanonicalForm]| v.iter().map(|f| f.as_str().to_string()).collect::<Vec<_>>();
            Ok(Report::verdict(
                diff.is_empty(),
                diff.to_string(),
                json!({
                    "command": "verify-catalog",
                    "matches": diff.is_empty(),
                    "additions": forms(&diff.additions),
                    "omissions": forms(&diff.omissions),
                    "mismatches": diff.mismatches,
                }),
            ))
        }
    }
}

fn witness_json(w: &SplitWitness) -> Value {
    let (kind, edge) = match w.operation {
        splitting::SplitOperation::Itself => ("itself", None),
        splitting::SplitOperation::Delete(e) => ("delete", Some(e)),
        splitting::SplitOperation::Contract(e) => ("contract", Some(e)),
    };
    json!({
        "operation": kind,
        "edge": edge,
        "side_a": ids(w.separation.side_a),
        "side_b": ids(w.separation.side_b),
        "boundary": w.separation.boundary.to_vec(),
    })
}

fn witness_text(w: &SplitWitness) -> String {
    format!(
        "witness: {}\nseparation: A={} B={} boundary={}\n",
        w.operation, w.separation.side_a, w.separation.side_b, w.separation.boundary
    )
}

fn split_check(file: &Path, config: Option<&str>, screen_seed: Option<u64>, err: &mut dyn Write) -> Result<Report> {
    let parsed = read_graph(file)?;
    let g = EnhancedGraph::new(parsed.graph, parsed.contract_proof, parsed.delete_proof)?;
    let config = config.map(|c| io::parse_id_list(c, 0)).transpose()?;
    if let Some(seed) = screen_seed {
        let _ = writeln!(err, "{PROBABILISTIC_BANNER}");
        if !g.protected().is_empty() {
            return Err(Error::Domain("the probabilistic screen takes a graph without protections".into()));
        }
        return screened_split_check(g.graph(), config, seed);
    }
    match config {
        Some(s) => {
            let verdict = splitting::enhanced_config_splits(&g, s)?;
            let mut text = format!("configuration: {s}\nsplits: {}\n", verdict.splits);
            let mut json = json!({"command": "split-check", "configuration": ids(s), "splits": verdict.splits});
            if let Some(w) = &verdict.witness {
                text.push_str(&witness_text(w));
                json["witness"] = witness_json(w);
            }
            Ok(Report::verdict(verdict.splits, text, json))
        }
        None => {
            let verdict = splitting::enhanced_splits(&g);
            let mut text = format!("splits: {}\n", verdict.splits);
            let mut json = json!({"command": "split-check", "splits": verdict.splits});
            if let Some(s) = verdict.failing {
                text.push_str(&format!("non-split configuration: {}\n", list(s)));
                json["configuration"] = ids(s);
            }
            Ok(Report::verdict(verdict.splits, text, json))
        }
    }
}

/// Random-evaluation screen: a configuration is reported as split when one
/// of its thirty Dodgsons evaluates to zero at a random point.
fn screened_split_check(g: &MultiGraph, config: Option<EdgeSet>, seed: u64) -> Result<Report> {
    let conv = kirchhoff::default_convention(g)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let point: Vec<i64> = (0..crate::sets::MAX_IDS).map(|_| rng.gen_range(1..=1_000_003)).collect();
    let value = |e: EdgeId| point[e];
    let screen = |s: EdgeSet| -> Result<bool> {
        splitting::check_config(g, s)?;
        for spec in kirchhoff::thirty_dodgsons(s)? {
            if kirchhoff::dodgson_value(g, &spec, &conv, &value)? == 0.into() {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let configs: Vec<EdgeSet> = match config {
        Some(s) => vec![s],
        None => g.edges().combinations(5).collect(),
    };
    let mut failing = None;
    for s in configs {
        if !screen(s)? {
            failing = Some(s);
            break;
        }
    }
    let splits = failing.is_none();
    let mut text = format!("splits (probabilistic): {splits}\n");
    let mut json = json!({"command": "split-check", "probabilistic": true, "seed": seed, "splits": splits});
    if let Some(s) = failing {
        text.push_str(&format!("non-split configuration: {}\n", list(s)));
        json["configuration"] = ids(s);
    }
    Ok(Report::verdict(splits, text, json))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("fivesplit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn temp_graph(g: &MultiGraph) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(io::write_graph(g, EdgeSet::EMPTY, EdgeSet::EMPTY).as_bytes()).unwrap();
        f
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["psi"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["psi", "/nonexistent/graph.g"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn width_of_k4() {
        let f = temp_graph(&crate::families::complete(4));
        let (code, out, _) = run_str(&["width", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.starts_with("3\nordering: "));
        let (code, out, _) = run_str(&["width", "--at-most", "2", f.path().to_str().unwrap()]);
        assert_eq!((code, out.as_str()), (1, "width <= 2: false\n"));
    }

    #[test]
    fn json_carries_schema() {
        let f = temp_graph(&crate::families::cycle(3));
        let (code, out, _) = run_str(&["--format", "json", "psi", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], json!(1));
        assert_eq!(v["polynomial"], json!("x0 + x1 + x2"));
    }

    #[test]
    fn probabilistic_prints_banner() {
        let f = temp_graph(&crate::families::k33());
        let (code, out, err) = run_str(&["split-check", "--probabilistic", f.path().to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(err.starts_with("warning: probabilistic mode"));
        assert!(out.contains("non-split configuration"));
        let (_, _, err) = run_str(&["split-check", f.path().to_str().unwrap()]);
        assert!(err.is_empty());
    }
}
