use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use maxblank_core::solver::DEFAULT_TERM_BUDGET;
use maxblank_core::Algebra;

#[derive(Debug, Parser)]
#[command(
    name = "maxblank",
    version,
    about = "Solve A v = w over max-blank algebras as a finite union of quasi-intervals"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Algebra to use instead of the one named in the input file
    /// (max-plus, max-min, bool, chain-min:N, powerset:k).
    #[arg(long, global = true, value_parser = parse_algebra)]
    pub algebra: Option<Algebra>,

    /// Keep every term of the expanded union instead of canonicalizing.
    #[arg(long, global = true)]
    pub raw: bool,

    /// Maximum number of choice functions before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_TERM_BUDGET)]
    pub budget: u64,

    /// Omit timing statistics so identical inputs give identical output.
    #[arg(long, global = true)]
    pub deterministic: bool,

    /// Worker threads for the solver search.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the solution region of a system as JSON.
    Solve {
        /// System file: {"algebra": ..., "A": [[...]], "w": [...]}.
        input: PathBuf,
    },
    /// Test one vector against the system and against the computed region.
    Check {
        input: PathBuf,
        /// JSON array of literals (["1", "-inf"]) or a comma-separated list.
        vector: String,
    },
    /// Compare the computed region with exhaustive enumeration (finite
    /// carriers only).
    Oracle { input: PathBuf },
    /// Time the solver on random systems.
    Bench {
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: maxblank_core::Error| e.to_string())
}
