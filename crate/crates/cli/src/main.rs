//! `bicircular`: double-circuit censuses and claim checks from the shell.
//!
//! Every invocation prints one JSON document on stdout. Exit status is 0 when
//! every verdict passes, 1 when a verdict fails (the report carries a
//! witness), and 2 on usage or input errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bicircular::double_circuit::Enumerator;
use bicircular::format::{parse_graph, write_graph};
use bicircular::generators::{self, GeneratorSpec, DEFAULT_MAX_TRIES};
use bicircular::verify::{
    self, AnalyzeOptions, Fault, SearchParams, Status, SuiteOptions, Verdict, Witness,
};
use bicircular::{EdgeSet, Multigraph};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bicircular",
    version,
    about = "Double circuits of bicircular matroids"
)]
struct Cli {
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Census and verdicts for one graph.
    Analyze(AnalyzeArgs),
    /// Print a generated graph in the text format.
    Gen(GenArgs),
    /// Run the fixed claim suite.
    VerifyPaper(SuiteArgs),
    /// Look for positive double circuits in random graphs of bounded girth.
    Search(SearchArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Graph file in the `p`/`e` text format.
    file: Option<PathBuf>,

    /// Generate the graph instead: petersen, dodecahedron, complete, cycle,
    /// bouquet, banana, theta, handcuff or random.
    #[arg(long = "gen", value_name = "NAME", conflicts_with = "file")]
    generator: Option<String>,

    /// Parameters for theta and handcuff, e.g. `--params 2,2,1`.
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,

    /// Vertex count (random) or the single parameter of complete, cycle,
    /// bouquet and banana.
    #[arg(short = 'n')]
    n: Option<usize>,

    /// Edge count for random graphs.
    #[arg(short = 'm')]
    m: Option<usize>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long)]
    min_girth: Option<usize>,

    #[arg(long, default_value_t = DEFAULT_MAX_TRIES)]
    max_tries: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GraphSource,

    /// Force an enumerator; by default the oracle runs up to 20 edges.
    #[arg(long)]
    enumerator: Option<Enumerator>,

    /// Re-check a single edge set (comma-separated edge indices).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    witness: Option<Vec<usize>>,

    /// Compare the census total against a regression file, recording it on
    /// first use.
    #[arg(long)]
    fixture: Option<PathBuf>,

    /// Include wall-clock times in the report.
    #[arg(long)]
    timing: bool,

    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct GenArgs {
    name: String,

    /// Family parameters, e.g. `gen theta 2 2 1`.
    params: Vec<usize>,

    #[arg(short = 'n')]
    n: Option<usize>,

    #[arg(short = 'm')]
    m: Option<usize>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long)]
    min_girth: Option<usize>,

    #[arg(long, default_value_t = DEFAULT_MAX_TRIES)]
    max_tries: usize,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    timing: bool,

    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 5)]
    min_girth: usize,

    #[arg(short = 'n')]
    n: usize,

    #[arg(short = 'm')]
    m: usize,

    #[arg(long, default_value_t = 100)]
    count: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = DEFAULT_MAX_TRIES)]
    max_tries: usize,

    #[arg(long)]
    enumerator: Option<Enumerator>,
}

/// A failure that maps to exit status 2.
struct InputError {
    kind: &'static str,
    message: String,
}

impl From<bicircular::Error> for InputError {
    fn from(e: bicircular::Error) -> Self {
        let kind = match e {
            bicircular::Error::Parse { .. } => "parse",
            bicircular::Error::Generator(_) | bicircular::Error::GenerationExhausted { .. } => {
                "generator"
            }
            bicircular::Error::Resource(_) => "resource",
            _ => "input",
        };
        InputError {
            kind,
            message: e.to_string(),
        }
    }
}

struct Progress {
    quiet: bool,
}

impl Progress {
    fn note(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            let _ = writeln!(std::io::stderr(), "{}", msg.as_ref());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let progress = Progress { quiet: cli.quiet };
    let result = match cli.command {
        Command::Analyze(args) => analyze(args, &progress),
        Command::Gen(args) => gen(args),
        Command::VerifyPaper(args) => verify_paper(args, &progress),
        Command::Search(args) => search(args, &progress),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let body = serde_json::json!({ "error": e.message, "kind": e.kind });
            let _ = writeln!(std::io::stderr(), "{body}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe so the exit status still
/// reflects the verdicts.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(value: &impl Serialize) {
    write_stdout(&(serde_json::to_string_pretty(value).expect("reports serialize") + "\n"));
}

fn fault(flag: bool) -> Option<Fault> {
    flag.then_some(Fault::CorruptRank)
}

fn generator_spec(
    name: &str,
    params: &[usize],
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
    min_girth: Option<usize>,
    max_tries: usize,
) -> Result<GeneratorSpec, InputError> {
    let missing = |flag: &str| InputError {
        kind: "usage",
        message: format!("{name} needs {flag}"),
    };
    if name == "random" {
        return Ok(GeneratorSpec::Random {
            n: n.ok_or_else(|| missing("-n"))?,
            m: m.ok_or_else(|| missing("-m"))?,
            seed,
            min_girth,
            max_tries,
        });
    }
    let mut params = params.to_vec();
    if let Some(n) = n {
        params.push(n);
    }
    Ok(GeneratorSpec::from_name(name, &params)?)
}

fn load_graph(source: &GraphSource) -> Result<(String, Multigraph), InputError> {
    match (&source.file, &source.generator) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| InputError {
                kind: "io",
                message: format!("{}: {e}", path.display()),
            })?;
            Ok((path.display().to_string(), parse_graph(&text)?))
        }
        (None, Some(name)) => {
            let spec = generator_spec(
                name,
                &source.params,
                source.n,
                source.m,
                source.seed,
                source.min_girth,
                source.max_tries,
            )?;
            let g = generators::named(&spec)?;
            Ok((spec.to_string(), g))
        }
        _ => Err(InputError {
            kind: "usage",
            message: "give a graph file or --gen <name>".into(),
        }),
    }
}

fn analyze(args: AnalyzeArgs, progress: &Progress) -> Result<bool, InputError> {
    let (source, g) = load_graph(&args.source)?;
    progress.note(format!(
        "analyzing {source}: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    ));

    if let Some(edges) = &args.witness {
        let edges: EdgeSet = edges.iter().copied().collect();
        let report = verify::analyze_witness(&g, &source, &edges, fault(args.inject_fault))?;
        emit(&report);
        return Ok(report.all_pass());
    }

    let start = Instant::now();
    let opts = AnalyzeOptions {
        enumerator: args.enumerator,
        timing: args.timing,
        fault: fault(args.inject_fault),
    };
    let mut report = verify::analyze_graph(&g, &source, &opts)?;
    progress.note(format!(
        "{} double circuits ({} positive) in {:.2?}",
        report.census.total,
        report.census.positive_count,
        start.elapsed()
    ));
    if let Some(path) = &args.fixture {
        report
            .verdicts
            .push(check_fixture(path, &source, report.census.total, progress)?);
    }
    emit(&report);
    Ok(report.all_pass())
}

/// Regression counts: a JSON object from graph source to census total.
fn check_fixture(
    path: &Path,
    source: &str,
    total: usize,
    progress: &Progress,
) -> Result<Verdict, InputError> {
    let io_error = |e: std::io::Error| InputError {
        kind: "io",
        message: format!("{}: {e}", path.display()),
    };
    let mut counts: BTreeMap<String, usize> = if path.exists() {
        let text = std::fs::read_to_string(path).map_err(io_error)?;
        serde_json::from_str(&text).map_err(|e| InputError {
            kind: "parse",
            message: format!("{}: {e}", path.display()),
        })?
    } else {
        BTreeMap::new()
    };
    let mut verdict = Verdict {
        claim: "regression_fixture",
        tag: "fixture",
        status: Status::Pass,
        reason: None,
        witness: None,
    };
    match counts.get(source) {
        Some(&expected) if expected == total => {}
        Some(&expected) => {
            verdict.status = Status::Fail;
            verdict.witness = Some(Witness {
                edges: EdgeSet::new(),
                classes: Vec::new(),
                detail: format!("fixture expects {expected} double circuits, census found {total}"),
            });
        }
        None => {
            counts.insert(source.to_string(), total);
            let text = serde_json::to_string_pretty(&counts).expect("map serializes");
            std::fs::write(path, text + "\n").map_err(io_error)?;
            progress.note(format!("recorded {source} = {total} in {}", path.display()));
            verdict.reason = Some("recorded".into());
        }
    }
    Ok(verdict)
}

fn gen(args: GenArgs) -> Result<bool, InputError> {
    let spec = generator_spec(
        &args.name,
        &args.params,
        args.n,
        args.m,
        args.seed,
        args.min_girth,
        args.max_tries,
    )?;
    let g = generators::named(&spec)?;
    write_stdout(&format!("# {spec}\n{}", write_graph(&g)));
    Ok(true)
}

fn verify_paper(args: SuiteArgs, progress: &Progress) -> Result<bool, InputError> {
    let opts = SuiteOptions {
        timing: args.timing,
        fault: fault(args.inject_fault),
    };
    let report = verify::verify_paper(&opts)?;
    for c in &report.claims {
        let mark = if c.status == Status::Pass {
            "PASS"
        } else {
            "FAIL"
        };
        progress.note(format!("{mark} {:<28} {}", c.claim, c.detail));
    }
    emit(&report);
    Ok(report.all_pass())
}

fn search(args: SearchArgs, progress: &Progress) -> Result<bool, InputError> {
    let params = SearchParams {
        n: args.n,
        m: args.m,
        min_girth: args.min_girth,
        count: args.count,
        seed: args.seed,
        max_tries: args.max_tries,
        enumerator: args.enumerator,
    };
    let report = verify::search(&params)?;
    if !report.findings.is_empty() {
        progress.note(format!(
            "found positive double circuits in {} of {} graphs with girth >= {}",
            report.findings.len(),
            report.graphs_checked,
            args.min_girth
        ));
    } else {
        progress.note(format!(
            "{} graphs, {} double circuits, none positive",
            report.graphs_checked, report.double_circuits_checked
        ));
    }
    emit(&report);
    Ok(report.findings.is_empty())
}
