use std::path::PathBuf;

use clap::{Args, Parser, Subcommand as ClapSubcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "graphspec", version, about = "Limiting spectral moments of sparse random graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, ClapSubcommand)]
pub enum Command {
    /// Exact limiting moments m_0 … m_K from the walk-count recurrence.
    Moments(RunArgs),
    /// Recurrence against the tree/walk enumeration oracle (K ≤ 6).
    OracleCheck(RunArgs),
    /// Monte Carlo trace moments, eigenvalue ECDF and histograms.
    Simulate(RunArgs),
    /// Growth bounds on the unit-intensity walk-count table.
    Bounds(RunArgs),
    /// Degree distribution against Poisson(p).
    Degrees(RunArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Largest moment order k (simulate reports N⁻¹ Tr A^s for s ≤ 2k).
    #[arg(long = "max-k")]
    pub max_k: Option<usize>,
    /// Edge intensity p, as an integer, fraction (1/2) or decimal (0.5).
    #[arg(long, default_value = "1")]
    pub intensity: String,
    /// Number of vertices.
    #[arg(long = "n", default_value_t = 1000)]
    pub n: usize,
    /// Number of sampled graphs.
    #[arg(long = "samples", default_value_t = 100)]
    pub samples: usize,
    /// Base seed; sample i uses seed + i.
    #[arg(long = "seed", default_value_t = 0)]
    pub seed: u64,
    /// Histogram bins.
    #[arg(long = "bins", default_value_t = 50)]
    pub bins: usize,
    /// Output file; stdout when absent.
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    Moments,
    OracleCheck,
    Simulate,
    Bounds,
    Degrees,
}

impl Subcommand {
    fn default_max_k(self) -> usize {
        match self {
            Subcommand::Moments => 10,
            Subcommand::OracleCheck => 6,
            Subcommand::Simulate => 3,
            Subcommand::Bounds => 24,
            Subcommand::Degrees => 0,
        }
    }
}

/// Everything a run depends on. Echoed verbatim into each artifact so the
/// artifact can be regenerated from its own header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub max_k: usize,
    pub intensity: String,
    pub n: usize,
    pub sample_count: usize,
    pub base_seed: u64,
    pub bin_count: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn from_command(command: Command) -> Self {
        let (subcommand, args) = match command {
            Command::Moments(a) => (Subcommand::Moments, a),
            Command::OracleCheck(a) => (Subcommand::OracleCheck, a),
            Command::Simulate(a) => (Subcommand::Simulate, a),
            Command::Bounds(a) => (Subcommand::Bounds, a),
            Command::Degrees(a) => (Subcommand::Degrees, a),
        };
        RunConfig {
            subcommand,
            max_k: args.max_k.unwrap_or_else(|| subcommand.default_max_k()),
            intensity: args.intensity,
            n: args.n,
            sample_count: args.samples,
            base_seed: args.seed,
            bin_count: args.bins,
            out: args.out,
            format: args.format,
        }
    }
}
