//! Command-line interface.
//!
//! Exit codes: 0 success, 1 bad input or over-budget request, 2 a failed
//! audit, i.e. evidence against the theory this tool checks.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use intspec::{
    check_theorem, expand_family, fuzz_labelings, parse_graph, parse_labeling, search_max,
    BoundError, BoundReport, GenerateError, GeneratorSpec, Graph, IoError, LabelingError,
    SearchConfig, SearchError, SearchMode,
};

#[derive(Parser)]
#[command(name = "intspec", version, about = "Interval spectra of edge labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Anneal,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Seed for every random draw the run makes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Anneal move budget.
    #[arg(long, default_value_t = 10_000)]
    moves: u64,
    /// Explore both labelings of each reflection pair.
    #[arg(long)]
    no_symmetry: bool,
    /// Concurrent prefix shards for exhaustive mode.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Allow exhaustive mode beyond its edge-count guard.
    #[arg(long)]
    force: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            mode: match self.mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Anneal => SearchMode::Anneal,
            },
            seed: self.seed,
            max_moves: self.moves,
            symmetry_reduction: !self.no_symmetry,
            parallel_width: self.threads,
            force_large: self.force,
            ..Default::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec and emit its edge list.
    Gen {
        /// Family spec such as cycle(5), petersen, random_regular(10,3,7).
        spec: String,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the interval vertices of a labeling as JSON.
    Vint { graph: PathBuf, labeling: PathBuf },
    /// Audit one labeling: path-forest check, bound, and proof counts.
    Check {
        graph: PathBuf,
        labeling: PathBuf,
        /// Render a table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Search for a labeling maximizing the interval vertex count.
    Maximize {
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run the search across a family range, one JSON row per line.
    Sweep {
        /// Family spec with at most one a..b argument, e.g. cycle(3..8).
        #[arg(long)]
        family: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Audit many random labelings; print violations and a summary.
    Fuzz {
        graph: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Last line of fuzz output: totals only, violations stream above it.
#[derive(serde::Serialize)]
struct FuzzSummary {
    trials: u64,
    passes: u64,
    nonempty_v_int: u64,
    components_audited: u64,
    violations: usize,
}

#[derive(Error, Debug)]
enum CliError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: IoError },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Write(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Search(
                SearchError::PropositionViolated { .. } | SearchError::CounterexampleFound { .. },
            ) => 2,
            _ => 1,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::File { path: path.display().to_string(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read_file(path)?)
        .map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn load_labeling(g: &Graph, path: &Path) -> Result<intspec::EdgeLabeling, CliError> {
    parse_labeling(g, &read_file(path)?)
        .map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn render_table(report: &BoundReport) -> String {
    let flag = |ok: bool| if ok { "ok" } else { "VIOLATED" };
    let v_int: Vec<String> = report.v_int.iter().map(|v| v.to_string()).collect();
    let mut out = String::new();
    out.push_str(&format!("degree          {}\n", report.r));
    out.push_str(&format!("vertices        {}\n", report.n));
    out.push_str(&format!("v_int           {{{}}}\n", v_int.join(", ")));
    out.push_str(&format!("v_int size      {}\n", report.v_int_size));
    out.push_str(&format!("components      {}\n", report.k));
    out.push_str(&format!("bound           {}\n", report.bound));
    out.push_str(&format!("path forest     {}\n", flag(report.proposition_holds)));
    out.push_str(&format!("within bound    {}\n", flag(report.theorem_holds)));
    for count in &report.surr_edge_counts {
        out.push_str(&format!(
            "surr edges      {} vertices -> {} edges, expected {} {}\n",
            count.vertices,
            count.edges,
            count.expected,
            flag(count.edges == count.expected),
        ));
    }
    out.push_str(&format!("disjointness    {}\n", flag(report.disjointness_ok)));
    out.push_str(&format!("edge budget     {}\n", flag(report.edge_budget_ok)));
    out.push_str(&format!("verdict         {}\n", if report.pass() { "PASS" } else { "FAIL" }));
    out
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen { spec, output } => {
            let spec: GeneratorSpec = spec.parse()?;
            let text = intspec::emit_graph(&spec.generate()?);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Vint { graph, labeling } => {
            let g = load_graph(&graph)?;
            let phi = load_labeling(&g, &labeling)?;
            let report = intspec::interval_report(&g, &phi)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(0)
        }
        Command::Check { graph, labeling, table } => {
            let g = load_graph(&graph)?;
            let phi = load_labeling(&g, &labeling)?;
            let report = check_theorem(&g, &phi)?;
            if table {
                print!("{}", render_table(&report));
            } else {
                println!("{}", serde_json::to_string(&report)?);
            }
            Ok(if report.pass() { 0 } else { 2 })
        }
        Command::Maximize { graph, search } => {
            let g = load_graph(&graph)?;
            let outcome = search_max(&g, &search.config())?;
            println!("{}", serde_json::to_string(&outcome)?);
            Ok(0)
        }
        Command::Sweep { family, search } => {
            let specs = expand_family(&family)?;
            let rows = intspec::sweep(&specs, &search.config());
            let mut counterexample = false;
            for row in &rows {
                counterexample |= row.counterexample;
                println!("{}", serde_json::to_string(row)?);
            }
            Ok(if counterexample { 2 } else { 0 })
        }
        Command::Fuzz { graph, trials, seed } => {
            let g = load_graph(&graph)?;
            let report = fuzz_labelings(&g, trials, seed)?;
            for violation in &report.violations {
                println!("{}", serde_json::to_string(violation)?);
            }
            let summary = FuzzSummary {
                trials: report.trials,
                passes: report.passes,
                nonempty_v_int: report.nonempty_v_int,
                components_audited: report.components_audited,
                violations: report.violations.len(),
            };
            println!("{}", serde_json::to_string(&summary)?);
            Ok(if report.violations.is_empty() { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
