use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact zonotopal algebra, splines and equivariant Betti numbers for a
/// list of integer vectors.
///
/// The list is read as JSON `{"dim": s, "vectors": [[..], ..]}` from
/// `--input` or standard input. Every command prints one JSON report.
#[derive(Debug, Parser)]
#[command(name = "zonotopal", version)]
pub struct Cli {
    /// Input file; standard input when absent or `-`.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,

    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Run every `*.case.json` golden case in a directory instead of a
    /// command.
    #[arg(long, value_name = "DIR", conflicts_with = "input")]
    pub seed_corpus: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Rank, bases and cocircuits.
    Matroid,
    /// Tutte polynomial and basis activities.
    Tutte,
    /// Rational subspaces by dimension.
    Subspaces,
    /// Regular faces of the arrangement of hyperplanes `a^⊥`.
    Chambers,
    /// Hilbert function of the quotient by a cocircuit-type ideal.
    Hilbert {
        /// `full`, `level=k` or `subspaces=[[i, ..], ..]`.
        #[arg(long, default_value = "full")]
        ideal: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Equivariant Betti numbers of a stratum.
    Betti {
        /// `geq=k` or `open=[[i, ..], ..]`.
        #[arg(long)]
        stratum: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Graded dimensions of the Dahmen–Micchelli space.
    Dspace {
        /// Include a monic basis in each degree.
        #[arg(long)]
        basis: bool,
    },
    /// Dimensions of the filtration `G(X)_i`.
    Gdims,
    /// Compactly supported Betti numbers of a stratum.
    Csbetti {
        /// Stratum level; defaults to the finite-stabilizer stratum.
        #[arg(long)]
        stratum: Option<usize>,
        /// Largest cohomological degree; defaults to `4m`.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Truncated powers.
    Spline(SplineArgs),
    /// Run verification suites.
    Verify {
        /// `lamain`, `duality`, `exactseq`, `tutte`, `spline` or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SplineArgs {
    #[command(subcommand)]
    pub action: SplineAction,
}

#[derive(Debug, Clone, Subcommand)]
pub enum SplineAction {
    /// Value of `T_X` (or `T_X^F`) at a generic point.
    Eval {
        /// Comma-separated rationals, e.g. `1/2,3`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Sign string of a regular face, e.g. `+-+`.
        #[arg(long, allow_hyphen_values = true)]
        face: Option<String>,
    },
    /// Polynomial of `T_X` on the chamber containing a generic point.
    Piece {
        #[arg(long, allow_hyphen_values = true)]
        witness: String,
    },
}
