//! Command-line front end for `hctree`.
//!
//! Exit codes: 0 success, 1 invalid coloring, 2 bad input, 3 no qualified
//! order (a greedy coloring is written instead), 4 oracle budget exhausted.

pub mod commands;
pub mod files;
pub mod table;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hctree::families::FamilyError;
use hctree::oracle::OracleError;
use hctree::tree::TreeError;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_ORDER: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Input(String),
    #[error("writing output: {0}")]
    Output(#[source] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::Inexhaustive(_)) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hctree", version, about = "Hamiltonian colorings of trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family member or a random tree as a tree file.
    Gen(GenArgs),
    /// Print structural data and the lower bound for a tree.
    Analyze(AnalyzeArgs),
    /// Build a coloring from a vertex order.
    Color(ColorArgs),
    /// Check that a coloring is hamiltonian.
    Verify(VerifyArgs),
    /// Compute hc exactly by exhaustive search.
    Oracle(OracleArgs),
    /// Tabulate closed forms against constructions and the oracle.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Symmetric,
    Firecracker,
    Caterpillar,
    Pathpendant,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    /// Order of a random tree.
    #[arg(long)]
    pub n: Option<usize>,
    /// Seed for a random tree; required with `--family random`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub tree: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub tree: PathBuf,
    /// `auto`, `canonical`, or a path to an order file.
    #[arg(long, default_value = "auto")]
    pub order: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub tree: PathBuf,
    pub coloring: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub tree: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Write the witness coloring here.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Inclusive range such as `2..4`, or a single value.
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    /// Run the oracle on rows with at most this many vertices.
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Runs a parsed command, writing reports to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Gen(a) => commands::gen(&a, out),
        Command::Analyze(a) => commands::analyze(&a, out),
        Command::Color(a) => commands::color(&a, out, err),
        Command::Verify(a) => commands::verify(&a, out),
        Command::Oracle(a) => commands::oracle(&a, out),
        Command::Table(a) => table::table(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
