//! `layercode`: build, verify, analyze and export layer codes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 internal integrity failure.

mod commands;
mod manifest;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "layercode",
    version,
    about = "Layer-code construction and verification toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the layer code of an input CSS code and write its artifacts.
    Build {
        /// Built-in input code (rep<m>, c422, shor, steane, surface<L>).
        #[arg(long, conflicts_with = "input")]
        builtin: Option<String>,
        /// Input code JSON (or Matrix Market with sidecars).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Superlattice spacing (>= 2).
        #[arg(long, default_value_t = 2)]
        c: usize,
        /// Output stem; writes <stem>.json, <stem>.x.mtx, <stem>.z.mtx,
        /// <stem>.geometry.json and <stem>.manifest.json.
        #[arg(long)]
        output: PathBuf,
        /// Number of disjoint blocks to tile.
        #[arg(long, default_value_t = 1)]
        blocks: usize,
    },
    /// Check a built layer-code file against the structural invariants.
    Verify {
        file: PathBuf,
        /// fast: commutation, weight, locality, logical count.
        /// full: adds correctability, logical round trips, distance bounds.
        #[arg(long, default_value = "fast")]
        level: String,
    },
    /// Run analysis tasks and emit a JSON report with mode-tagged numbers.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        distance: bool,
        #[arg(long)]
        barrier: bool,
        #[arg(long)]
        relations: bool,
        /// Seed for randomized searches.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Node/coset budget for exact searches.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        /// Weight cutoff for the certified distance floor.
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the plane/defect-line geometry of a built layer code.
    ExportGeometry {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build {
            builtin,
            input,
            c,
            output,
            blocks,
        } => commands::build(builtin.as_deref(), input.as_deref(), c, &output, blocks),
        Command::Verify { file, level } => commands::verify(&file, &level),
        Command::Analyze {
            file,
            distance,
            barrier,
            relations,
            seed,
            budget,
            cutoff,
            output,
        } => commands::analyze(
            &file,
            commands::AnalyzeTasks {
                distance,
                barrier,
                relations,
            },
            seed,
            budget,
            cutoff,
            output.as_deref(),
        ),
        Command::ExportGeometry { file, output } => {
            commands::export_geometry(&file, output.as_deref())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
