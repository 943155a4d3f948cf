//! `fourpow`: enumerate, map, count, verify, sample and draw the objects of
//! the `4^(n-1)` bijection toolkit.

mod commands;
mod record;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

const RECORD_HELP: &str = "\
Objects travel as JSON Lines, one record per line:
  {\"type\":\"path\",\"steps\":\"UUDD\"}
  {\"type\":\"marked_peak\",\"steps\":\"UUDD\",\"peak\":1}
  {\"type\":\"height_labeled\",\"steps\":\"UUDD\",\"peak\":1,\"label\":2}
  {\"type\":\"marked_bridge\",\"steps\":\"UDDU\",\"peak\":0}
  {\"type\":\"two_colored_bridge\",\"first\":\"UD\",\"second\":\"\"}
  {\"type\":\"composition\",\"parts\":[2,1]}
  {\"type\":\"colored_composition\",\"parts\":[[6,1],[1,2]]}
  {\"type\":\"pair\",\"first\":[1,2],\"second\":[3]}
`peak` is the 0-based index of the peak's up step; `label` runs from 1 to
the peak height.

Classes: 3comp, pairs, walk, two_colored, marked_bridge, height_labeled,
bridge, meander, dyck, marked_peak, composition. Size n means compositions
of n, walks of length 2n-2, two-colored bridges of total length 2n and
every other path class at length 2n.

Exit status: 0 on success, 1 when a verification finds a failure, 2 on
usage, parse or validation errors.";

#[derive(Parser)]
#[command(name = "fourpow", version, about, after_help = RECORD_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a class in canonical order
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply a bijection to each record read from standard input
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Carry records through the chain of bijections between two classes
    Chain {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Print the closed-form size of a class
    Count {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
    },
    /// Run an exhaustive verification suite for sizes 1..=max-n
    Verify {
        /// cardinality, roundtrip, injectivity, statistics, chain, congruence or all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draw uniform members by unranking (ChaCha8 seeded from --seed)
    Sample {
        /// walk, bridge, meander, dyck or composition
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Draw path-like records from standard input as SVG
    Render {
        /// Write here instead of standard output; with several records the
        /// files are numbered NAME-1.svg, NAME-2.svg, ...
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Compare computed counts with an embedded integer-sequence table
    Oeis {
        /// A000302 or A001700
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Bijection {
    /// pair of compositions -> walk
    PairWalk,
    /// 3-composition -> pair of compositions
    ColoredPair,
    /// two-colored bridge -> walk
    TwocolWalk,
    /// bridge -> meander
    BridgeMeander,
    /// marked peak -> bridge starting with a down step
    PeakBridge,
    /// height-labeled peak -> marked strict maximum
    LabelMaxima,
    /// marked strict maximum -> two-colored bridge
    MaximaTwocol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Fwd,
    Inv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fourpow: {e}");
            ExitCode::from(2)
        }
    }
}
