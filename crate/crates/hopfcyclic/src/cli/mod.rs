//! The `hopfcyc` command-line interface: presentation-file parsing,
//! check/build/cohomology/corpus subcommands, and deterministic
//! structured reports.

pub mod commands;
pub mod parser;
pub mod report;

pub use commands::{corpus_dir, run, Cli, Cmd, Format, Outcome, CORPUS_ENV};
pub use parser::{parse_file, parse_str, ParseError, PresentationFile};
pub use report::{Report, REPORT_VERSION};

use clap::Parser as _;

/// Render an outcome to stdout/stderr; returns the process exit code.
pub fn emit(outcome: &Outcome, format: Format, quiet: bool) -> i32 {
    if let Some(e) = &outcome.error {
        eprintln!("error: {e}");
        return outcome.exit;
    }
    let report = outcome.report.as_ref().expect("report or error");
    if quiet {
        println!("{}", report.verdict_line());
    } else {
        match format {
            Format::Text => print!("{}", report.to_text()),
            Format::Json => print!("{}", report.to_json()),
        }
    }
    outcome.exit
}

/// Entry point for the binary: parse arguments, run, emit, exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let outcome = run(&cli);
    emit(&outcome, cli.format, cli.quiet)
}
