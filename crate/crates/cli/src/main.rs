use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;

use error::CliError;

/// Extremal graphs for degree-based connectivity functions.
#[derive(Debug, Parser)]
#[command(name = "extremal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a degree sequence such as "5,4,3^3,2^10,1^8".
    Validate {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Build one of the extremal constructions.
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Degree sequence for greedy-tree, um and bm.
        #[arg(long)]
        pi: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Number of pendant paths for f, fp and fpp.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate M_f on a graph file (edge list or JSON; "-" reads stdin).
    Eval {
        #[arg(long)]
        f: String,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Classify f as escalating or de-escalating on [1, D].
    Classify {
        #[arg(long)]
        f: String,
        #[arg(long = "D", visible_alias = "grid-bound")]
        d: Option<usize>,
        /// Raise the default grid bound to cover this sequence.
        #[arg(long)]
        pi: Option<String>,
    },
    /// Check every construction of a class against exhaustive enumeration.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        f: String,
        /// JSON-lines file receiving one record per checked sequence or pair.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare the optima over two sequences with pi majorized by pi-prime.
    Majorize {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        pi_prime: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Unit transformations leading from pi-prime down to pi.
    Chain {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        pi_prime: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    GreedyTree,
    Um,
    Bm,
    F,
    Fp,
    Fpp,
    S0,
    S1,
    S2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    EdgeList,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Tree,
    Unicyclic,
    Bicyclic,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Validate { sequence, json } => commands::validate(&sequence, json),
        Command::Build {
            kind,
            pi,
            n,
            k,
            format,
            output,
        } => commands::build(kind, pi.as_deref(), n, k, format, output.as_deref()),
        Command::Eval { f, graph } => commands::eval(&f, &graph),
        Command::Classify { f, d, pi } => commands::classify(&f, d, pi.as_deref()),
        Command::Verify {
            suite,
            max_n,
            f,
            output,
            workers,
        } => commands::verify(suite, max_n, &f, output.as_deref(), workers),
        Command::Majorize {
            pi,
            pi_prime,
            f,
            workers,
        } => commands::majorize(&pi, &pi_prime, &f, workers),
        Command::Chain { pi, pi_prime } => commands::chain(&pi, &pi_prime),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(error::VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
