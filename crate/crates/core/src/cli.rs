//! The `antikekule` command line: `gen`, `convert`, `match`, `ak`, `verify`.
//!
//! Exit codes: 0 success, 1 verification counterexample or other failure,
//! 2 disconnected input (clap usage errors also exit 2), 3 parse failure,
//! 4 non-cubic input with pruning enabled.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::generators::{generate, Family, FamilySpec, GenerateError};
use crate::graph::{Bipartition, EdgeSet, Graph, GraphError};
use crate::io::{emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, FormatError};
use crate::matching::{hall_witness, maximum_matching, tutte_witness, TUTTE_MAX_VERTICES};
use crate::report::{endpoint_pairs, ReportDocument};
use crate::search::{enumerate_smallest, SearchError, SearchOptions, DEFAULT_K_MAX};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "antikekule",
    version,
    about = "Anti-Kekulé sets of cubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family member.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Re-encode a graph.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: OutputFormat,
    },
    /// Maximum matching, with a certificate when no perfect matching exists.
    Match {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Anti-Kekulé number and smallest anti-Kekulé sets.
    Ak {
        #[command(flatten)]
        input: InputArgs,
        /// Print every smallest set.
        #[arg(long)]
        all_sets: bool,
        /// Screen k = 1, 2, ... without the cubic-graph bounds.
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        json: bool,
        #[arg(long = "kmax", default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        #[arg(long, env = "ANTIKEKULE_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Write elapsed_ms as 0.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run a property suite over the generated corpus.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seeds: u64,
        #[arg(long, env = "ANTIKEKULE_JOBS", default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(group = "source")]
    input: Option<String>,
    /// Inline graph6 string.
    #[arg(long, group = "source")]
    g6: Option<String>,
    /// Generator spec such as `t36:3` or `random_cubic:10@7`.
    #[arg(long, group = "source")]
    family: Option<String>,
    /// Skip autodetection of the input file format.
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] FormatError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph is not cubic; pruning needs a cubic graph (hint: use --no-prune)")]
    NotCubic,
    #[error(transparent)]
    Search(SearchError),
    #[error("{failed} of {total} rows failed")]
    VerifyFailed { failed: usize, total: usize },
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Disconnected => 2,
            CliError::Parse(_) | CliError::Generate(_) | CliError::Io { .. } => 3,
            CliError::NotCubic => 4,
            _ => 1,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Disconnected | SearchError::Graph(GraphError::Disconnected) => {
                CliError::Disconnected
            }
            SearchError::NotCubic => CliError::NotCubic,
            other => CliError::Search(other),
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            format,
        } => {
            let spec = FamilySpec {
                family: family.parse::<Family>()?,
                params,
                seed,
            };
            let g = generate(&spec)?;
            write_graph(out, &g, format.into())
        }
        Command::Convert { input, to } => {
            let g = read_input(&input, stdin)?;
            write_graph(out, &g, to)
        }
        Command::Match { input } => {
            let g = read_input(&input, stdin)?;
            cmd_match(out, &g)
        }
        Command::Ak {
            input,
            all_sets,
            no_prune,
            json,
            k_max,
            jobs,
            no_timing,
        } => {
            let g = read_input(&input, stdin)?;
            let options = SearchOptions {
                prune: !no_prune,
                k_max,
                jobs: jobs.max(1),
            };
            cmd_ak(out, &g, &options, all_sets, json, no_timing)
        }
        Command::Verify {
            suite,
            max_n,
            seeds,
            jobs,
        } => cmd_verify(out, suite, max_n, seeds, jobs.max(1)),
    }
}

impl From<GraphFormat> for OutputFormat {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::Graph6 => OutputFormat::Graph6,
            GraphFormat::Edgelist => OutputFormat::Edgelist,
        }
    }
}

fn read_input(args: &InputArgs, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    if let Some(g6) = &args.g6 {
        return Ok(parse_graph6(g6.trim())?);
    }
    if let Some(spec) = &args.family {
        return Ok(generate(&spec.parse::<FamilySpec>()?)?);
    }
    let path = args.input.as_deref().unwrap_or("-");
    let text = if path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        buf
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?
    };
    parse_text(&text, args.format)
}

/// A leading digit means edge list; anything else is graph6.
fn parse_text(text: &str, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    let trimmed = text.trim_start();
    let format = format.unwrap_or(if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        GraphFormat::Edgelist
    } else {
        GraphFormat::Graph6
    });
    Ok(match format {
        GraphFormat::Edgelist => parse_edgelist(text)?,
        GraphFormat::Graph6 => parse_graph6(trimmed.lines().next().unwrap_or("").trim())?,
    })
}

fn write_graph(out: &mut dyn Write, g: &Graph, format: OutputFormat) -> Result<(), CliError> {
    match format {
        OutputFormat::Graph6 => writeln!(out, "{}", emit_graph6(g)?)?,
        OutputFormat::Edgelist => write!(out, "{}", emit_edgelist(g))?,
        OutputFormat::Dot => write!(out, "{}", emit_dot(g, &EdgeSet::empty()))?,
    }
    Ok(())
}

fn cmd_match(out: &mut dyn Write, g: &Graph) -> Result<(), CliError> {
    let m = maximum_matching(g);
    writeln!(out, "matching size {}", m.len())?;
    for (u, v) in m.pairs(g) {
        writeln!(out, "{u} {v}")?;
    }
    if m.is_perfect(g) {
        writeln!(out, "perfect matching")?;
        return Ok(());
    }
    writeln!(out, "no perfect matching")?;
    if g.vertex_count() <= TUTTE_MAX_VERTICES {
        if let Ok(Some(w)) = tutte_witness(g) {
            writeln!(
                out,
                "tutte witness: U = {:?}, odd components = {} > {}",
                w.removed.as_slice(),
                w.odd_components,
                w.removed.len()
            )?;
        }
    }
    if let Ok(parts @ Bipartition::TwoColoring { .. }) = g.bipartition() {
        if let Ok(Some(w)) = hall_witness(g, &parts) {
            writeln!(
                out,
                "hall witness: S = {:?}, |N(S)| = {} < {}",
                w.set.as_slice(),
                w.neighborhood_size,
                w.set.len()
            )?;
        }
    }
    Ok(())
}

fn format_set(g: &Graph, set: &EdgeSet) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    endpoint_pairs(g, set)
        .iter()
        .map(|[u, v]| format!("[{u},{v}]"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_ak(
    out: &mut dyn Write,
    g: &Graph,
    options: &SearchOptions,
    all_sets: bool,
    json: bool,
    no_timing: bool,
) -> Result<(), CliError> {
    if !g.is_connected(&EdgeSet::empty()) {
        return Err(CliError::Disconnected);
    }
    let report = enumerate_smallest(g, options)?;
    if json {
        let mut doc = ReportDocument::new(g, &report);
        if no_timing {
            doc = doc.normalized();
        }
        writeln!(out, "{}", doc.to_json())?;
        return Ok(());
    }
    writeln!(out, "ak = {}", report.ak)?;
    writeln!(out, "smallest sets: {}", report.smallest_sets.len())?;
    writeln!(out, "subsets screened: {}", report.subsets_screened)?;
    if !report.cubic {
        writeln!(out, "warning: graph is not cubic; no bound applies")?;
    }
    if all_sets {
        for set in &report.smallest_sets {
            writeln!(out, "  {}", format_set(g, set))?;
        }
    }
    Ok(())
}

fn cmd_verify(
    out: &mut dyn Write,
    suite: Suite,
    max_n: usize,
    seeds: u64,
    jobs: usize,
) -> Result<(), CliError> {
    let rows = run_suite(suite, max_n, seeds, jobs);
    writeln!(
        out,
        "{:<26} {:>4} {:>5}  {:<40} result",
        "graph", "n", "value", "check"
    )?;
    for row in &rows {
        let value = row.value.map_or("-".to_string(), |v| v.to_string());
        let status = if row.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<26} {:>4} {:>5}  {:<40} {status}",
            row.spec.to_string(),
            row.n,
            value,
            row.check
        )?;
    }
    let failed: Vec<_> = rows.iter().filter(|r| !r.pass).collect();
    writeln!(
        out,
        "suite {suite}: {}/{} passed",
        rows.len() - failed.len(),
        rows.len()
    )?;
    for row in &failed {
        writeln!(out, "counterexample {}: {}", row.spec, row.graph6)?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::VerifyFailed {
            failed: failed.len(),
            total: rows.len(),
        })
    }
}
