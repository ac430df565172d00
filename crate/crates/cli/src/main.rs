//! `hexpath`: bounds, search, verification, constructions and pictures for
//! longest winning paths on Hex boards.
//!
//! Exit codes: 0 success, 1 verification or domain failure, 2 malformed
//! input, 3 resource limit.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "hexpath", version, about = "Longest minimal winning paths on n x n Hex boards")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bound on the length of a winning path (n >= 5).
    Bound { n: u32 },
    /// Length of the longest winning path.
    Length { n: u32 },
    /// Census of lengths, bounds and optimal-path counts.
    Table {
        #[arg(long, default_value_t = 20)]
        max: u32,
        /// Comma-separated output.
        #[arg(long)]
        csv: bool,
    },
    /// Exhaustive search for the longest winning paths (n <= 11).
    Search {
        n: u32,
        /// Count every optimal path.
        #[arg(long, conflicts_with = "enumerate")]
        count: bool,
        /// Write every optimal path to DIR, plus a manifest.
        #[arg(long, value_name = "DIR")]
        enumerate: Option<PathBuf>,
        /// Start the descending search at this length instead of the upper bound.
        #[arg(long, value_name = "L")]
        target: Option<u32>,
        /// Worker threads.
        #[arg(long, env = "HEXPATH_WORKERS", value_name = "W")]
        workers: Option<usize>,
        /// Abort after expanding this many search nodes.
        #[arg(long, value_name = "M")]
        node_limit: Option<u64>,
    },
    /// Check whether a path file holds a winning path.
    Verify { file: PathBuf },
    /// Wasted-triangle and boundary accounting for a winning path.
    Waste {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RegionArg::All)]
        region: RegionArg,
    },
    /// Print the stored optimal path for n <= 20.
    Witness { n: u32 },
    /// Frame a path onto a board eight cells wider.
    Extend { file: PathBuf },
    /// Build an optimal path for n >= 13; the construction log goes to stderr.
    Generate { n: u32 },
    /// Draw a path file as text or SVG.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        /// Mark wasted unit triangles.
        #[arg(long)]
        waste: bool,
        /// Draw the empty edge columns.
        #[arg(long)]
        extension: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "all")]
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
