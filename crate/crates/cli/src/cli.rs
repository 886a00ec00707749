use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use interval_rules::{ClassColumn, ModalityMode, Threshold};

#[derive(Debug, Parser)]
#[command(name = "irm", version, about = "Mine relevant interval rules from labeled numerical CSV data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine relevant rules and write them as JSON or CSV.
    Mine(MineArgs),
    /// Count closed patterns, rules and relevant rules over a grid of minsup values.
    Sweep(SweepArgs),
    /// Print the modality sets of every feature as JSON.
    Discretize(DiscretizeArgs),
    /// Cross-check the miner against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// Input CSV with a header row.
    #[arg(long)]
    pub input: PathBuf,

    /// Class column, by header name or 0-based index (default: last column).
    #[arg(long = "class-col")]
    pub class_col: Option<String>,

    /// Field delimiter.
    #[arg(long, default_value_t = ',')]
    pub delimiter: char,
}

impl DataArgs {
    pub fn class_column(&self) -> ClassColumn {
        self.class_col.as_deref().map_or(ClassColumn::Last, ClassColumn::parse)
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ClassArgs {
    /// Label of the positive class; every other row is negative.
    #[arg(long = "positive-label")]
    pub positive_label: Option<String>,

    /// Mine one-vs-rest for every label, in order of first appearance.
    #[arg(long = "all-classes")]
    pub all_classes: bool,
}

#[derive(Debug, Args)]
pub struct ModalityArgs {
    /// Maximum number of equal-frequency cuts per feature.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub eqmod: u32,

    #[arg(long, value_enum, default_value_t = ModalityArg::Equiprobable)]
    pub modalities: ModalityArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModalityArg {
    Equiprobable,
    AllValues,
}

impl From<ModalityArg> for ModalityMode {
    fn from(m: ModalityArg) -> Self {
        match m {
            ModalityArg::Equiprobable => ModalityMode::Equiprobable,
            ModalityArg::AllValues => ModalityMode::AllValues,
        }
    }
}

fn parse_threshold(s: &str) -> Result<Threshold, String> {
    s.parse().map_err(|e: interval_rules::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// Rules need more than this many covered positives. A `%` suffix means
    /// a percentage of the positives, rounded up to a count.
    #[arg(long, default_value = "0", value_parser = parse_threshold)]
    pub minsup: Threshold,

    /// Rules need fewer than this many covered negatives. A `%` suffix
    /// means a percentage of the negatives, rounded up to a count.
    #[arg(long, default_value = "10%", value_parser = parse_threshold)]
    pub maxfp: Threshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub class: ClassArgs,
    #[command(flatten)]
    pub thresholds: ThresholdArgs,
    #[command(flatten)]
    pub modality: ModalityArgs,

    /// Where to write the rules (default: no rule file).
    #[arg(long)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Store mining wall time in the JSON output. Off by default so that
    /// repeated runs produce identical files.
    #[arg(long = "record-time")]
    pub record_time: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub class: ClassArgs,
    #[command(flatten)]
    pub modality: ModalityArgs,

    #[arg(long, default_value = "10%", value_parser = parse_threshold)]
    pub maxfp: Threshold,

    /// Comma-separated minsup values, e.g. `0,5,10` or `0%,25%,50%`.
    #[arg(long = "minsup-grid", value_delimiter = ',', value_parser = parse_threshold, conflicts_with = "minsup_steps")]
    pub minsup_grid: Vec<Threshold>,

    /// Evenly spaced percentages 0%, 100/S%, ... below 100%.
    #[arg(long = "minsup-steps", value_parser = clap::value_parser!(u32).range(1..))]
    pub minsup_steps: Option<u32>,

    /// Sum the counts and times of all classes on each grid point.
    #[arg(long = "sum-classes", conflicts_with = "per_class")]
    pub sum_classes: bool,

    /// One row per class and grid point (default).
    #[arg(long = "per-class")]
    pub per_class: bool,

    /// CSV destination (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub const DEFAULT_SWEEP_STEPS: u32 = 10;

impl SweepArgs {
    pub fn grid(&self) -> Vec<Threshold> {
        if !self.minsup_grid.is_empty() {
            return self.minsup_grid.clone();
        }
        let steps = self.minsup_steps.unwrap_or(DEFAULT_SWEEP_STEPS);
        (0..steps)
            .map(|k| Threshold::Percent(f64::from(k) * 100.0 / f64::from(steps)))
            .collect()
    }
}

#[derive(Debug, Args)]
pub struct DiscretizeArgs {
    #[command(flatten)]
    pub data: DataArgs,

    #[arg(long = "positive-label")]
    pub positive_label: String,

    #[command(flatten)]
    pub modality: ModalityArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check a CSV dataset. Without it, random tasks are checked.
    #[arg(long)]
    pub input: Option<PathBuf>,

    #[arg(long = "class-col")]
    pub class_col: Option<String>,

    #[arg(long, default_value_t = ',')]
    pub delimiter: char,

    #[arg(long = "positive-label")]
    pub positive_label: Option<String>,

    #[arg(long = "all-classes")]
    pub all_classes: bool,

    #[command(flatten)]
    pub thresholds: ThresholdArgs,

    #[command(flatten)]
    pub modality: ModalityArgs,

    /// Number of random tasks to check when no input is given.
    #[arg(long, default_value_t = 200)]
    pub random: u64,

    /// First seed of the random batch.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Largest number of boxes the oracle may enumerate.
    #[arg(long, default_value_t = interval_rules::oracle::DEFAULT_CAP)]
    pub cap: u128,
}
