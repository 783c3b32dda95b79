//! Command-line front end.
//!
//! [`run_cli`] does all the work and returns what should be written to
//! stdout and stderr together with the exit status, so tests can drive it
//! without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fundclust::bench::{emit_report, run_benchmark, BenchEngine, BenchError, BenchSpec, ReportFormat};
use fundclust::closure::{
    cluster_size_within_n, cluster_sizes_fundamental, cluster_sizes_oracle, cluster_sizes_within_n,
    expected_absorption_steps, reflexive_transitive_closure, Backend, ClosureError, ClusterReport, Variant,
    DEFAULT_NONZERO_THRESHOLD,
};
use fundclust::graph::{parse_edge_list, parse_matrix_market, AdjacencyMatrix};
use fundclust::linalg::LinalgError;

/// Exit status for bad input: unreadable files, parse errors, bad flags.
pub const EXIT_INPUT_ERROR: i32 = 1;
/// Exit status for numerical failures: singular systems, divergence,
/// suspected underflow.
pub const EXIT_NUMERICAL_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fundclust", version, about = "Cluster sizes via the fundamental matrix of a rescaled adjacency matrix")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cluster size of every node.
    Components(ComponentsArgs),
    /// Number of nodes within n links of each node.
    WithinN(WithinNArgs),
    /// Expected steps to absorption for a transient block Q.
    Markov(MarkovArgs),
    /// Time the engines against each other on random graphs (CSV to stdout).
    Bench(BenchArgs),
    /// Reachability pattern as 0/1 rows.
    Closure(ClosureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Fundamental,
    #[value(name = "power_sum", alias = "power-sum")]
    PowerSum,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    #[value(name = "paper_transform", alias = "paper")]
    PaperTransform,
    #[value(name = "uniform_scaling", alias = "uniform")]
    UniformScaling,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::PaperTransform => Variant::PaperTransform,
            VariantArg::UniformScaling => Variant::UniformScaling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ComponentsArgs {
    /// Edge-list file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "fundamental")]
    engine: EngineArg,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "paper_transform")]
    variant: VariantArg,
    /// Float entries at or below this count as zero.
    #[arg(long, default_value_t = DEFAULT_NONZERO_THRESHOLD)]
    threshold: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct WithinNArgs {
    #[arg(long)]
    input: PathBuf,
    /// Maximum number of links.
    #[arg(long)]
    n: usize,
    /// Report a single node instead of all of them.
    #[arg(long)]
    node: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct MarkovArgs {
    /// Matrix Market file (coordinate real general) holding Q.
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    densities: Vec<f64>,
    /// One or more seeds, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    seed: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "oracle,fundamental_float_uniform")]
    engines: Vec<String>,
    #[arg(long, default_value_t = 1)]
    repetitions: usize,
    /// Largest k the exact engine may run on.
    #[arg(long, default_value_t = fundclust::bench::DEFAULT_EXACT_MAX_K)]
    exact_max_k: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: BenchFormat,
}

#[derive(Debug, Args)]
struct ClosureArgs {
    #[arg(long)]
    input: PathBuf,
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct CliError {
    status: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self { status: EXIT_INPUT_ERROR, message: message.into() }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self { status: EXIT_NUMERICAL_ERROR, message: message.into() }
    }
}

impl From<ClosureError> for CliError {
    fn from(e: ClosureError) -> Self {
        let message = e.to_string();
        match e {
            ClosureError::Linalg(LinalgError::Singular { .. } | LinalgError::NoConvergence { .. })
            | ClosureError::UnderflowSuspected { .. }
            | ClosureError::NotSubstochastic(_)
            | ClosureError::BoundViolated { .. } => Self::numerical(message),
            _ => Self::input(message),
        }
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        let message = e.to_string();
        match e {
            BenchError::EngineFailed { source, .. } => Self { message, ..CliError::from(source) },
            BenchError::EngineUnavailable { .. }
            | BenchError::Disagreement { .. }
            | BenchError::Nondeterministic { .. } => Self::numerical(message),
            BenchError::InvalidSpec(_) | BenchError::Graph(_) | BenchError::Report(_) => Self::input(message),
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_cli<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CliOutcome { status: 0, stdout: text, stderr: String::new() }
                }
                _ => CliOutcome { status: EXIT_INPUT_ERROR, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => CliOutcome { status: 0, stdout, stderr: String::new() },
        Err(e) => CliOutcome { status: e.status, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Components(args) => components(&args),
        Command::WithinN(args) => within_n(&args),
        Command::Markov(args) => markov(&args),
        Command::Bench(args) => bench(&args),
        Command::Closure(args) => closure(&args),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<AdjacencyMatrix, CliError> {
    let text = read(path)?;
    let graph = parse_edge_list(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(graph.to_adjacency())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("plain data serializes");
    out.push('\n');
    out
}

fn sizes_table(header: &str, sizes: &[usize]) -> String {
    let width = sizes.len().saturating_sub(1).to_string().len().max(4);
    let mut out = format!("{header}\n{:>width$}  size\n", "node");
    for (node, size) in sizes.iter().enumerate() {
        let _ = writeln!(out, "{node:>width$}  {size:>4}");
    }
    out
}

fn components(args: &ComponentsArgs) -> Result<String, CliError> {
    let s = load_graph(&args.input)?;
    let report = match args.engine {
        EngineArg::Fundamental => {
            cluster_sizes_fundamental(&s, args.variant.into(), args.backend.into(), args.threshold)?
        }
        EngineArg::PowerSum => cluster_sizes_within_n(&s, s.dim().saturating_sub(1)),
        EngineArg::Oracle => cluster_sizes_oracle(&s),
    };
    Ok(match args.format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Table => sizes_table(&report_header(&report), &report.sizes),
    })
}

/// Header line using the same snake_case names as the JSON output.
fn report_header(r: &ClusterReport) -> String {
    let value = serde_json::to_value(r).expect("plain data serializes");
    let field = |key: &str| value.get(key).and_then(|v| v.as_str()).map(str::to_owned);
    let mut header = format!(
        "engine: {}  backend: {}",
        field("engine").unwrap_or_default(),
        field("backend").unwrap_or_default()
    );
    if let Some(variant) = field("variant") {
        let _ = write!(header, "  variant: {variant}");
    }
    header
}

#[derive(Serialize)]
struct NodeWithinN {
    node: usize,
    n: usize,
    size: usize,
}

fn within_n(args: &WithinNArgs) -> Result<String, CliError> {
    let s = load_graph(&args.input)?;
    match args.node {
        Some(node) => {
            let size = cluster_size_within_n(&s, node, args.n)?;
            Ok(match args.format {
                OutputFormat::Json => to_json(&NodeWithinN { node, n: args.n, size }),
                OutputFormat::Table => format!("{size}\n"),
            })
        }
        None => {
            let report = cluster_sizes_within_n(&s, args.n);
            Ok(match args.format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Table => sizes_table(&format!("within n = {}", args.n), &report.sizes),
            })
        }
    }
}

#[derive(Serialize)]
struct MarkovOutput<T> {
    backend: Backend,
    steps: Vec<T>,
}

fn markov(args: &MarkovArgs) -> Result<String, CliError> {
    let text = read(&args.matrix)?;
    let q = parse_matrix_market(&text).map_err(|e| CliError::input(format!("{}: {e}", args.matrix.display())))?;
    let steps: Vec<String> = match args.backend {
        BackendArg::Exact => {
            let steps = expected_absorption_steps(q.matrix())?.iter().map(ToString::to_string).collect();
            if args.format == OutputFormat::Json {
                return Ok(to_json(&MarkovOutput { backend: Backend::Exact, steps }));
            }
            steps
        }
        BackendArg::Float => {
            let steps = expected_absorption_steps(q.to_float().matrix())?;
            if args.format == OutputFormat::Json {
                return Ok(to_json(&MarkovOutput { backend: Backend::Float, steps }));
            }
            steps.iter().map(ToString::to_string).collect()
        }
    };
    let width = steps.len().saturating_sub(1).to_string().len().max(5);
    let mut out = format!("{:>width$}  steps\n", "state");
    for (state, t) in steps.iter().enumerate() {
        let _ = writeln!(out, "{state:>width$}  {t}");
    }
    Ok(out)
}

fn bench(args: &BenchArgs) -> Result<String, CliError> {
    let engines = args
        .engines
        .iter()
        .map(|name| name.parse::<BenchEngine>())
        .collect::<Result<Vec<_>, _>>()?;
    let spec = BenchSpec {
        repetitions: args.repetitions,
        exact_max_k: args.exact_max_k,
        ..BenchSpec::new(args.sizes.clone(), args.densities.clone(), args.seed.clone(), engines)
    };
    let records = run_benchmark(&spec)?;
    let format = match args.format {
        BenchFormat::Csv => ReportFormat::Csv,
        BenchFormat::Json => ReportFormat::Json,
    };
    let mut out = emit_report(&records, format)?;
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn closure(args: &ClosureArgs) -> Result<String, CliError> {
    let s = load_graph(&args.input)?;
    let reach = reflexive_transitive_closure(&s);
    let mut out = String::new();
    for row in reach.rows() {
        let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}
