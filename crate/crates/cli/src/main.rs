mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cache::MatrixCache;

#[derive(Parser, Debug)]
#[command(
    name = "polysym",
    version,
    about = "Exact polysymmetric function algebra over stack partitions"
)]
pub struct Cli {
    /// Output format; `convert` and `omega` default to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Directory for cached transition matrices.
    #[arg(long, global = true, env = "POLYSYM_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write the matrix cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a basis element in the M basis.
    Expand {
        /// M, H, E, E+, H+ or P.
        basis: String,
        /// Stack partition, e.g. "3^3 2 2 1^2 1".
        tau: String,
    },
    /// Re-express an element given as JSON ("-" reads stdin).
    Convert {
        from: String,
        to: String,
        element: String,
    },
    /// Multiply basis elements and expand the product in M.
    Product {
        /// Stack partitions, one per factor.
        #[arg(required = true)]
        factors: Vec<String>,
        /// Basis of every factor.
        #[arg(long, default_value = "M")]
        basis: String,
    },
    /// Evaluate one matrix-counting coefficient.
    Coeff {
        #[arg(value_enum)]
        kind: CoeffKind,
        /// Target first; then the sources for s and S, or the index α for D, E, H, ES and HS.
        #[arg(required = true)]
        args: Vec<String>,
        /// Degree u for the s coefficient.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Apply the involution Ω to an element given as JSON ("-" reads stdin).
    Omega {
        element: String,
        #[arg(long, value_enum, default_value = "e-plus")]
        route: Route,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_d: u32,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Print an integer sequence.
    Table {
        #[arg(value_enum)]
        name: TableName,
        n_max: u32,
        /// Tuple length for psp.
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Compare stacked-tabular against the published values.
        #[arg(long)]
        check_paper: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffKind {
    #[value(name = "s")]
    SmallS,
    #[value(name = "S")]
    S,
    #[value(name = "D")]
    D,
    #[value(name = "E")]
    E,
    #[value(name = "H")]
    H,
    #[value(name = "ES")]
    Es,
    #[value(name = "HS")]
    Hs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    EPlus,
    H,
    E,
    HPlus,
    P,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    GeneratingFunctions,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    StackedTabular,
    ClassicalTabular,
    StackCount,
    Psp,
}

/// A failure with its exit code and one-line message.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub class: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            class: "usage",
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            class: "verify",
            message: message.into(),
        }
    }
}

impl From<polysym::Error> for Failure {
    fn from(e: polysym::Error) -> Self {
        use polysym::Error::*;
        let (code, class) = match &e {
            Parse { .. } | UnknownBasis(_) | UnknownPattern(_) | UnknownIdentity(_) => (2, "parse"),
            Json(_) => (2, "json"),
            InvalidArgument(_) => (2, "usage"),
            BasisMismatch { .. } => (3, "semantic"),
            Singular { .. } | Internal(_) => (3, "internal"),
        };
        Failure {
            code,
            class,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    let cache = if cli.no_cache {
        MatrixCache::disabled()
    } else {
        match cli.cache_dir.clone().or_else(default_cache_dir) {
            Some(dir) => MatrixCache::at(dir),
            None => MatrixCache::disabled(),
        }
    };
    match commands::run(&cli, &cache) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == 1 {
                // Verification reports are printed even when a check fails.
                print!("{}", f.message);
                eprintln!("error[verify]: verification failed");
            } else {
                eprintln!("error[{}]: {}", f.class, f.message.replace('\n', " "));
            }
            ExitCode::from(f.code)
        }
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("polysym"));
    }
    std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("polysym"))
}
