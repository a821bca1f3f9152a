mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Failure;

#[derive(Parser)]
#[command(
    name = "sqpbraid",
    version,
    about = "Band-generator braid words and strongly quasipositive replacements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Word file (`strands: n` header, then letters). Reads stdin when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct CatalogArg {
    /// Directory holding user catalog entries.
    #[arg(long, value_name = "DIR")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Surface data and invariants of a word.
    Info {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Alexander polynomial route.
        #[arg(long, default_value = "seifert", value_name = "ROUTE")]
        alexander: String,
    },
    /// Replace every negative band by a cut-open companion annulus.
    Transform {
        #[command(flatten)]
        input: Input,
        /// Companion for every negative band.
        #[arg(long, value_name = "NAME", conflicts_with = "annuli")]
        annulus: Option<String>,
        /// One companion per negative band, in word order.
        #[arg(long, value_name = "NAME,...", value_delimiter = ',')]
        annuli: Option<Vec<String>>,
        /// Write the certificate as JSON.
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
        /// Preservation checks to run (default: all).
        #[arg(long, value_name = "NAME,...", value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Companion annulus tools.
    Annulus {
        #[command(subcommand)]
        action: AnnulusAction,
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Artin expansion of a word.
    Expand {
        #[command(flatten)]
        input: Input,
        /// Cancel adjacent inverse pairs.
        #[arg(long)]
        free_reduce: bool,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random property run of the transform.
    Corpus {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_strands: usize,
        #[arg(long, default_value_t = 10)]
        max_letters: usize,
        #[arg(long, default_value = sqpbraid::annulus::BUILTIN_TREFOIL)]
        annulus: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        catalog: CatalogArg,
    },
}

#[derive(Args, Clone)]
struct AnnulusSource {
    #[command(flatten)]
    input: Input,
    /// Use a catalog entry instead of a word file.
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    entry: Option<String>,
}

#[derive(Subcommand)]
enum AnnulusAction {
    /// Check positivity, annulus shape and zero framing.
    Validate {
        #[command(flatten)]
        source: AnnulusSource,
        #[arg(long, default_value = "unnamed")]
        name: String,
        #[arg(long, default_value = "unknown")]
        core: String,
        #[arg(long)]
        json: bool,
    },
    /// Remove valence-1 strands.
    Reduce {
        #[command(flatten)]
        source: AnnulusSource,
    },
    /// Cut the reduced annulus open into a disc word.
    Cut {
        #[command(flatten)]
        source: AnnulusSource,
    },
    /// Catalog entry names.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Validate a word and store it in the catalog.
    Add {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        name: String,
        #[arg(long)]
        core: String,
        #[arg(long, default_value = "")]
        provenance: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // keep usage errors clear of the documented codes
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(message) = f.message() {
                eprintln!("error: {message}");
            }
            ExitCode::from(f.exit_code())
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        use sqpbraid::error::Error;
        match self {
            Failure::Input(_) => 1,
            Failure::Preservation => 6,
            Failure::Other(_) => 7,
            Failure::Core(e) => match e {
                Error::Syntax { .. } | Error::IndexViolation { .. } => 1,
                Error::DisconnectedSurface { .. } => 2,
                Error::UnknownEntry(_) | Error::UnknownStrategy { .. } => 3,
                Error::CompanionArity { .. } => 4,
                Error::NotSqp { .. }
                | Error::NotAnAnnulus { .. }
                | Error::NonZeroFraming { .. }
                | Error::IsolatedStrand { .. }
                | Error::InvalidAnnulus(_)
                | Error::ValidationFailed { .. }
                | Error::PreconditionViolated(_) => 5,
                _ => 7,
            },
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            Failure::Input(m) | Failure::Other(m) => Some(m.clone()),
            Failure::Core(e) => Some(e.to_string()),
            Failure::Preservation => None,
        }
    }
}
