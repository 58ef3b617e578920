//! `transversal-class`: classify stabilizer codes and their transversal Clifford groups.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use tclass_core::blocks::DEFAULT_ENUMERATION_CAP;
use tclass_core::code::DEFAULT_DISTANCE_MAX_N;

use report::Report;

#[derive(Parser)]
#[command(name = "transversal-class", version, about)]
struct Cli {
    /// Emit a JSON report instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time per phase in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

/// Code inputs are `.stab` paths or `corpus:NAME`.
#[derive(Subcommand)]
enum Command {
    /// Family case, endomorphism algebra, witness and canonical code.
    Classify { file: String },
    /// Endomorphism algebra only.
    Endo { file: String },
    /// Transversal Clifford group on L blocks.
    Group {
        file: String,
        #[arg(long, default_value_t = 2)]
        blocks: usize,
        /// Report the order without listing elements.
        #[arg(long)]
        count_only: bool,
        /// Write the element dump here instead of into the report.
        #[arg(long)]
        out: Option<String>,
        /// Maximum number of elements to materialise.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Check a tableau (file or `named:NAME`) against the code.
    Certify {
        file: String,
        #[arg(long)]
        tableau: String,
    },
    /// Minimum distance by exhaustive search.
    Distance {
        file: String,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_MAX_N)]
        max_n: usize,
    },
    /// Whether a transversal entangling two-block gate exists.
    Entangling { file: String },
    /// Group orders per family.
    Orders {
        /// Family case 0..=5; all cases when omitted.
        #[arg(long)]
        case: Option<usize>,
        #[arg(long, default_value_t = 2)]
        blocks: usize,
        /// enumerate, formula or auto.
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Built-in codes and their classifications.
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Negative,
    InputError,
    Cap,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap { message: String, predicted: Option<String> },
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::InputError => 2,
            Status::Cap => 3,
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("TCLASS_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("TCLASS_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn run(cli: &Cli, report: &mut Report) -> Result<Status, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Classify { file } => commands::classify_cmd(report, file),
        Command::Endo { file } => commands::endo_cmd(report, file),
        Command::Group {
            file,
            blocks,
            count_only,
            out,
            cap,
        } => commands::group_cmd(
            report,
            commands::GroupArgs {
                file,
                blocks: *blocks,
                count_only: *count_only,
                out: out.as_deref(),
                cap: *cap,
            },
        ),
        Command::Certify { file, tableau } => commands::certify_cmd(report, file, tableau),
        Command::Distance { file, max_n } => commands::distance_cmd(report, file, *max_n),
        Command::Entangling { file } => commands::entangling_cmd(report, file),
        Command::Orders { case, blocks, method } => commands::orders_cmd(report, *case, *blocks, method),
        Command::Corpus => commands::corpus_cmd(report),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Endo { .. } => "endo",
        Command::Group { .. } => "group",
        Command::Certify { .. } => "certify",
        Command::Distance { .. } => "distance",
        Command::Entangling { .. } => "entangling",
        Command::Orders { .. } => "orders",
        Command::Corpus => "corpus",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(command_name(&cli.command), cli.timings);
    let status = match run(&cli, &mut report) {
        Ok(s) => s,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            report.result = json!({"error": message});
            Status::InputError
        }
        Err(CliError::Cap { message, predicted }) => {
            eprintln!("error: {message}");
            report.result = json!({"error": message, "predicted_order": predicted});
            Status::Cap
        }
    };
    let text = if cli.json {
        serde_json::to_string_pretty(&report.to_json()).expect("serialisable") + "\n"
    } else {
        report.to_human()
    };
    print!("{text}");
    ExitCode::from(status.code())
}
