//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for invalid arguments or I/O failures, 2 when
//! a command's own check fails (verification above tolerance, an inexact
//! XOR run).

pub mod args;
pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::path::Path;

use clap::Parser;

use args::{CircuitCommand, Cli, Command, Format, OutputArgs};
use output::{emit, json_text};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::Check(_) => 2,
        }
    }
}

fn write(out: &OutputArgs, default: Format, csv: impl FnOnce() -> String, json: impl FnOnce() -> String) -> Result<(), CliError> {
    let text = match out.format.unwrap_or(default) {
        Format::Csv => csv(),
        Format::Json => json(),
    };
    write_to(out.output.as_deref(), &text)
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    emit(path, text).map_err(|e| {
        let target = path.map(|p| p.display().to_string()).unwrap_or_else(|| "stdout".into());
        CliError::Io(format!("cannot write {target}: {e}"))
    })
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Evolve(a) => {
            let r = commands::evolve(&a)?;
            write(&a.out, Format::Csv, || r.to_csv(), || json_text(&r))
        }
        Command::Timeavg(a) => {
            let r = commands::timeavg(&a)?;
            write(&a.out, Format::Json, || r.to_csv(), || json_text(&r))
        }
        Command::MixingScan(a) => {
            let r = commands::mixing_scan(&a)?;
            if let Some(path) = &a.csv_output {
                write_to(Some(path), &r.to_csv())?;
            }
            write(&a.out, Format::Json, || r.to_csv(), || json_text(&r))
        }
        Command::Walk(a) => {
            let r = commands::walk(&a)?;
            write(&a.out, Format::Json, || r.to_csv(), || json_text(&r))
        }
        Command::Circuit(CircuitCommand::Verify(a)) => {
            let r = commands::verify(&a)?;
            write(&a.out, Format::Json, || r.to_csv(), || json_text(&r))?;
            if r.passed {
                Ok(())
            } else {
                Err(CliError::Check(format!(
                    "circuit verification failed: max error {:e} exceeds tolerance {:e}",
                    r.max_error, r.tolerance
                )))
            }
        }
        Command::Circuit(CircuitCommand::Count(a)) => {
            let r = commands::count(&a)?;
            write(&a.out, Format::Json, || r.to_csv(), || json_text(&r))
        }
        Command::Circuit(CircuitCommand::Print(a)) => {
            let options = commands::step_options(&a.compile);
            let c = crate::circuit::qlga_step_circuit_with(a.qubits, a.scatter_angle, options)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            write_to(a.output.as_deref(), &c.to_string())
        }
        Command::Dj(a) => {
            let (text, ok) = commands::dj_text(a.shots, a.seed)?;
            write_to(None, &text)?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Check("a quantum run was not deterministic-correct".into()))
            }
        }
    }
}

/// Parses `argv`, runs the command and returns the process exit status.
/// Diagnostics go to standard error as a single line.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return 1;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
