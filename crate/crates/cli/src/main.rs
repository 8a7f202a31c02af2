//! `poset-codes`: analyze, construct and verify NMDS codes in poset metrics.
//!
//! Exit status: 0 on success or a passing verification, 1 when a
//! verification fails, 2 on usage, input or resource errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poset_codes::{Budget, DEFAULT_MAX_ENUM};

use report::{Format, Outcome};

#[derive(Parser, Debug)]
#[command(name = "poset-codes", version, about = "Near-MDS codes in poset and ordered Hamming metrics")]
struct Cli {
    /// Upper bound on any single exhaustive scan (codewords, ideals, vectors).
    #[arg(long, global = true, env = "POSET_CODES_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Analytic,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    N1,
    N2,
    N3,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters, generalized weights and MDS/NMDS classification.
    Analyze { code: PathBuf },
    /// Weight distribution by enumeration and/or from the counts at distance d.
    Weightdist {
        code: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Build an explicit NMDS code in the ordered space and write it as a code file.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        /// Dimension (n1).
        #[arg(long)]
        k: Option<usize>,
        /// Block dimensions (n2).
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long)]
        k2: Option<usize>,
        /// Fill free entries uniformly from this seed instead of zeros.
        #[arg(long)]
        seed: Option<u64>,
        /// Destination; the code file goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the codewords of an ordered code as points in the unit cube (CSV).
    Points {
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the (t, m, n)-net property of the code's point set.
    VerifyNet {
        code: PathBuf,
        #[arg(long)]
        t: usize,
        /// Defaults to the code dimension.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Check the point-distribution characterization of ordered NMDS codes.
    VerifyDistribution { code: PathBuf },
    /// Partition the code by ideals and check the tiling properties.
    Tiling {
        code: PathBuf,
        /// Check every ideal of this size; without it, run the full characterization.
        #[arg(long)]
        ideal_size: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.max_enum);
    let result = match cli.command {
        Command::Analyze { code } => commands::analyze(&code, &budget),
        Command::Weightdist { code, method } => commands::weightdist(&code, method, &budget),
        Command::Construct { family, q, r, k, k1, k2, seed, out } => {
            commands::construct(family, q, r, k, k1, k2, seed, out.as_deref(), &budget)
        }
        Command::Points { code, out } => commands::points(&code, out.as_deref(), &budget),
        Command::VerifyNet { code, t, m } => commands::verify_net(&code, t, m, &budget),
        Command::VerifyDistribution { code } => commands::verify_distribution(&code, &budget),
        Command::Tiling { code, ideal_size } => commands::tiling(&code, ideal_size, &budget),
    };
    match result {
        Ok(commands::Output::Report(report)) => {
            print!("{}", report.render(cli.format));
            match report.outcome() {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Ok(commands::Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
