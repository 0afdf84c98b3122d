use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pellmat::determinant::DetEngine;
use pellmat::pell::Engine;
use pellmat::IndexSet;

#[derive(Debug, Parser)]
#[command(name = "pellmat", version, about = "Exact Gaussian-integer determinants and Pell identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_0..P_max, from the recurrence or from det N(n).
    Pell(PellArgs),
    /// Determinant of N(n) or of a matrix read from a JSON file.
    Det(DetArgs),
    /// Generalized Laplace expansion of N(n) along a set of rows.
    Expand(ExpandArgs),
    /// Run identity and cofactor-table verification sweeps.
    Verify(VerifyArgs),
    /// Time the determinant engines on N(n).
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PellRoute {
    Recurrence,
    Det,
}

#[derive(Debug, Args)]
pub struct PellArgs {
    #[arg(long = "max")]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub via: PellRoute,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    /// Order of N(n).
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    pub n: Option<usize>,
    /// JSON file holding an array of rows of {"re","im"} objects.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_det_engine, default_value = "bareiss")]
    pub engine: DetEngine,
    /// Include the matrix in the output.
    #[arg(long)]
    pub dump: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long)]
    pub n: usize,
    /// 1-based, comma separated, increasing: `1,2,3`.
    #[arg(long, value_parser = parse_rows)]
    pub rows: IndexSet,
    #[arg(long)]
    pub show_zero_terms: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Convolution,
    Doubling,
    DetEquation,
    CofactorTables,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Lowest n; each suite starts no lower than its own minimum.
    #[arg(long, default_value_t = 1)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    /// Route for the determinant side of convolution and doubling reports.
    #[arg(long, value_parser = parse_engine, default_value = "recurrence")]
    pub engine: Engine,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_det_engine, default_value = "continuant,bareiss")]
    pub engines: Vec<DetEngine>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn parse_rows(s: &str) -> Result<IndexSet, String> {
    s.parse().map_err(|e: pellmat::Error| e.to_string())
}

fn parse_det_engine(s: &str) -> Result<DetEngine, String> {
    s.parse()
        .map_err(|_| format!("unknown engine {s:?}; expected permutation, bareiss, continuant or laplace"))
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse()
        .map_err(|_| format!("unknown engine {s:?}; expected recurrence, continuant, bareiss or laplace"))
}
