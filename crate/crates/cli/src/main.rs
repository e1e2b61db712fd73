//! `qary`: bounds, enumeration, nets and certificates from the command line.
//!
//! Exit status is 0 on success or a verified claim, 1 when a checked claim
//! fails, and 2 for invalid input, refused or exhausted searches, and
//! inapplicable results.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qary",
    version,
    about = "Upper bounds and exhaustive search for q-ary codes"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Plotkin,
    Recursion,
    Divisibility,
    Best,
}

#[derive(Debug, clap::Args)]
struct Budget {
    /// Search node budget (default 1e9).
    #[arg(long, env = "QARY_BUDGET")]
    budget: Option<u64>,

    /// Time limit in seconds (default 600).
    #[arg(long)]
    time_limit: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Upper bound on A_q(n,d).
    Bound {
        q: usize,
        n: usize,
        d: usize,
        #[arg(long, value_enum, default_value_t = Method::Best)]
        method: Method,
    },
    /// One canonical code per equivalence class of (n,d)_q codes of size M.
    Enumerate {
        q: usize,
        n: usize,
        d: usize,
        m: usize,
        /// Directory for one code file per class and a class list.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stop at the first code found.
        #[arg(long)]
        existence: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Symmetric nets and generalized Hadamard matrices.
    Net {
        #[command(subcommand)]
        action: NetAction,
    },
    /// Run a verification pipeline and emit its certificate.
    Verify {
        /// a5_8_6 | a3_16_11 | a4_9_6 | divisibility_family
        theorem_id: String,
        /// Print the certificate as JSON.
        #[arg(long)]
        json: bool,
        /// Directory for `<id>.cert.json` and `<id>.cert.txt`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Debug, Subcommand)]
enum NetAction {
    /// Check the net axioms and the Gram conditions.
    Check { net: PathBuf },
    /// Code of a symmetric net.
    ToCode {
        net: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Symmetric net of a (mu q, mu q - mu)_q code of size mu q^2.
    FromCode {
        code: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Expand a generalized Hadamard matrix into a symmetric net.
    GhExpand {
        gh: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
