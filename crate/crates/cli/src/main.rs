//! `schurweyl` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 operator size above the configured cap.

mod commands;
mod config;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schurweyl::Partition;

use crate::config::{Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "schurweyl", version, about = "Exact Schur-Weyl calculus for Werner states and de Finetti bounds")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest tensor-space dimension the operator oracle may build (>= 64).
    #[arg(long, global = true)]
    size_cap: Option<usize>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// key=value file with size_cap, output_format and seed.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Seed for the randomly sampled inputs of `verify`.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character polynomial chi^{lambda mu}(q) and its integer roots.
    ChiPoly {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// Character polynomials of six reference pairs with five boxes.
    Table5,
    /// Littlewood-Richardson coefficient c^lambda_{mu nu}.
    Lr {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
    },
    /// Kronecker coefficient g_{lambda mu nu}.
    Kron {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
    },
    /// Reduced state of the normalized Schur-Weyl projector rho_lambda.
    Trace {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[command(subcommand)]
        mode: TraceMode,
    },
    /// Twirled power state of a spectrum, e.g. '["2/3","1/3"]'.
    Twirl { spectrum: String, k: usize },
    /// Symmetrised permutation operator of cycle type ALPHA on (C^d)^n.
    DualTwirl {
        #[arg(value_parser = parse_partition)]
        alpha: Partition,
        d: usize,
    },
    /// de Finetti bounds.
    Bound {
        #[command(subcommand)]
        kind: BoundKind,
    },
    /// Degrees of freedom of Werner and symmetric Werner states.
    Dof {
        n: usize,
        d: usize,
        #[arg(value_enum)]
        kind: Option<DofKind>,
    },
    /// Smallest positive q with chi^{lambda mu}(q) != 0, and its negative counterpart.
    Qplus {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        /// Also report whether chi^{lambda mu}(q) > 0 at this q.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Diagonal witness A + B = C with spec A = mu and spec C = lambda.
    Horn {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// Character table of S_n.
    Chartable { n: usize },
    /// Run the self-check suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Add one to the character value chi^LAMBDA(ALPHA) before checking.
        #[arg(long, num_args = 2, value_names = ["LAMBDA", "ALPHA"], value_parser = parse_partition)]
        mutate: Option<Vec<Partition>>,
    },
    /// Build a Young-projector state on (C^p x C^q)^n and check the dual de Finetti bound on it.
    YoungDual {
        /// Standard tableau as JSON rows, e.g. '[[1,2],[3]]'.
        tableau: String,
        p: usize,
        q: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TraceMode {
    /// Keep K of the n subsystems of (C^d)^n.
    Sym { k: usize, d: usize },
    /// Trace C^q out of every factor of (C^p x C^q)^n.
    Dual { p: usize, q: usize },
}

#[derive(Subcommand, Debug)]
enum BoundKind {
    /// 2 - 2((q-n+1)/q)^n.
    Dual { n: usize, q: usize },
    /// (3/4) k(k-1) / smallest_row, leading term.
    Sym { k: usize, smallest_row: usize },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DofKind {
    Werner,
    Symmetric,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Formulas,
    Bounds,
    Oracle,
    All,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let t = s.trim();
    let json = if t.starts_with('[') { t.to_string() } else { format!("[{t}]") };
    json.parse::<Partition>().map_err(|e| e.to_string())
}

/// Text to emit and the exit code to finish with.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn exit_code(err: &schurweyl::Error) -> u8 {
    use schurweyl::Error;
    match err {
        Error::SizeCap { .. } => 3,
        Error::Invariant(_) => 1,
        Error::InvalidArgument(_) | Error::OutOfDomain(_) | Error::Parse(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let mut config = RunConfig::default();
    if let Some(path) = &cli.config {
        if let Err(e) = config.apply_file(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(f) = cli.format {
        config.format = f;
    }
    if let Some(cap) = cli.size_cap {
        config.size_cap = cap;
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    let output = match commands::run(&cli.command, &config) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };

    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &output.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", output.text),
    }
    ExitCode::from(output.code)
}
