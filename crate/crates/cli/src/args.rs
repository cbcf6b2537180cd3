use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use elastic_core::vc::Measure;

#[derive(Debug, Parser)]
#[command(
    name = "elastic",
    version,
    about = "Elastic distance balls over polygonal curves and regions"
)]
pub struct Cli {
    /// Relative tolerance of all geometric comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Emit the structured JSON report (`--json false` prints a short summary).
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set,
          num_args = 0..=1, default_missing_value = "true")]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the distance between two documents is at most DELTA.
    /// Exits 0 for true, 1 for false, 2 on input errors.
    Decide {
        measure: MeasureArg,
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(allow_hyphen_values = true)]
        delta: f64,
    },
    /// Compute the distance between two documents.
    Compute {
        measure: MeasureArg,
        file_a: PathBuf,
        file_b: PathBuf,
    },
    /// Evaluate a VC-dimension bound.
    VcBound {
        family: Family,
        /// Ambient dimension, or the parameter count for `generic`.
        #[arg(long)]
        d: Option<u64>,
        /// Vertices of a center.
        #[arg(long)]
        k: Option<u64>,
        /// Vertices of a ground element.
        #[arg(long)]
        m: Option<u64>,
        /// Number of sign functions combined (`generic` only).
        #[arg(long)]
        t: Option<u64>,
        /// Polynomial degree bound (`generic` only).
        #[arg(long)]
        l: Option<u64>,
    },
    /// List Voronoi-vertex candidates of three planar segments, given as an
    /// array of three two-vertex curve documents.
    VoronoiCandidates { file: PathBuf },
    /// Search for ranges shattering a ground set of documents.
    /// Exits 0 if shattered, 1 if not within the budget.
    Shatter {
        file: PathBuf,
        #[arg(value_parser = parse_measure)]
        measure: Measure,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Hausdorff,
    DirectedHausdorff,
    Frechet,
    WeakFrechet,
    DiscreteHausdorff,
    DiscreteFrechet,
    /// Sum of squared vertex distances along the optimal warping path.
    Dtw,
    HausdorffRegion,
    DirectedHausdorffRegion,
}

impl MeasureArg {
    pub fn name(self) -> &'static str {
        match self {
            MeasureArg::Hausdorff => "hausdorff",
            MeasureArg::DirectedHausdorff => "directed-hausdorff",
            MeasureArg::Frechet => "frechet",
            MeasureArg::WeakFrechet => "weak-frechet",
            MeasureArg::DiscreteHausdorff => "discrete-hausdorff",
            MeasureArg::DiscreteFrechet => "discrete-frechet",
            MeasureArg::Dtw => "dtw",
            MeasureArg::HausdorffRegion => "hausdorff-region",
            MeasureArg::DirectedHausdorffRegion => "directed-hausdorff-region",
        }
    }

    pub fn is_region(self) -> bool {
        matches!(self, MeasureArg::HausdorffRegion | MeasureArg::DirectedHausdorffRegion)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    DiscreteHausdorff,
    DiscreteFrechet,
    Dtw,
    Generic,
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse()
}
