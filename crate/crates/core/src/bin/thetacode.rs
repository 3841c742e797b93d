//! Command-line front end: parse a problem file, dispatch to the library,
//! print a text or JSON report.
//!
//! Exit codes: 0 success, 2 input error, 3 unmet precondition or unsupported
//! map, 4 budget exhausted, 1 internal certificate failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use theta_codes::problem::{parse_problem, ProblemFile};
use theta_codes::report::{
    self, AugmentFamily, Report, DEFAULT_DELAY_CAP, DEFAULT_ENUM_LEN,
};
use theta_codes::words::Word;
use theta_codes::Error;

#[derive(Parser)]
#[command(
    name = "thetacode",
    version,
    about = "Decision procedures and completion constructions for codes \
             invariant under a literal (anti)morphism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Invariant,
    Prefix,
    Circular,
    Sync,
}

impl From<Family> for AugmentFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Invariant => AugmentFamily::Invariant,
            Family::Prefix => AugmentFamily::Prefix,
            Family::Circular => AugmentFamily::Circular,
            Family::Sync => AugmentFamily::Sync,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide every property of the word set (code, prefix/suffix/bifix,
    /// delays, synchronization, circularity, completeness, maximality).
    Check {
        file: PathBuf,
        /// Cap for the deciphering-delay and two-way-delay searches.
        #[arg(long, default_value_t = DEFAULT_DELAY_CAP)]
        delay_cap: u32,
        /// Cap for the smallest synchronization delay search.
        #[arg(long, default_value_t = DEFAULT_DELAY_CAP)]
        sync_k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the invariant free hull and the defect-theorem data.
    Hull {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Augment a non-complete code inside a family (invariant, prefix,
    /// circular, or uniformly synchronized).
    Augment {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Family::Invariant)]
        family: Family,
        /// Witness override; wins over the file's `witness=` field.
        #[arg(long)]
        witness: Option<String>,
        /// Synchronization delay (sync family only).
        #[arg(long, default_value_t = 1)]
        sync_k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Embed the code into a complete invariant code (involutive
    /// antimorphisms with at least one moved letter).
    Complete {
        file: PathBuf,
        /// Maximum member length enumerated in the report.
        #[arg(long, default_value_t = DEFAULT_ENUM_LEN)]
        max_enum: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn load(path: &PathBuf) -> Result<ProblemFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text)
}

fn run(command: &Command) -> Result<(Report, Format), Error> {
    match command {
        Command::Check {
            file,
            delay_cap,
            sync_k,
            format,
        } => Ok((report::run_check(&load(file)?, *delay_cap, *sync_k)?, *format)),
        Command::Hull { file, format } => Ok((report::run_hull(&load(file)?)?, *format)),
        Command::Augment {
            file,
            family,
            witness,
            sync_k,
            format,
        } => {
            let problem = load(file)?;
            let witness = witness.as_deref().map(Word::from);
            let report = report::run_augment(
                &problem,
                (*family).into(),
                witness.as_ref(),
                *sync_k,
            )?;
            Ok((report, *format))
        }
        Command::Complete {
            file,
            max_enum,
            format,
        } => Ok((report::run_complete(&load(file)?, *max_enum)?, *format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((report, format)) => {
            let rendered = match format {
                Format::Text => report::to_text(&report),
                Format::Json => report::to_json(&report),
            };
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.category().code() as u8)
        }
    }
}
