//! Command-line front end for `elastic-core`: JSON geometry documents in,
//! a JSON run report out, verdicts also reported through the exit code.

pub mod args;
mod commands;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use elastic_core::Tolerance;
use serde_json::Value;

use crate::args::{Cli, Command};
use crate::commands::{margin_name, CliError, Done, Inputs};
pub use crate::document::{parse_document, parse_documents, DocumentError, GeometryDocument, Kind, Payload};
pub use crate::report::RunReport;

/// Exit code for input and usage errors.
pub const EXIT_INPUT_ERROR: i32 = 2;

/// What a finished invocation prints and returns.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Decide { .. } => "decide",
        Command::Compute { .. } => "compute",
        Command::VcBound { .. } => "vc-bound",
        Command::VoronoiCandidates { .. } => "voronoi-candidates",
        Command::Shatter { .. } => "shatter",
    }
}

fn execute(cli: &Cli, inputs: &mut Inputs) -> Result<Done, CliError> {
    let tol = Tolerance::new(cli.tol)?;
    match &cli.command {
        Command::Decide {
            measure,
            file_a,
            file_b,
            delta,
        } => commands::decide_cmd(*measure, file_a, file_b, *delta, &tol, inputs),
        Command::Compute {
            measure,
            file_a,
            file_b,
        } => commands::compute_cmd(*measure, file_a, file_b, &tol, inputs),
        Command::VcBound { family, d, k, m, t, l } => commands::vc_bound_cmd(*family, *d, *k, *m, *t, *l),
        Command::VoronoiCandidates { file } => commands::voronoi_cmd(file, &tol, inputs),
        Command::Shatter {
            file,
            measure,
            budget,
            seed,
        } => commands::shatter_cmd(file, *measure, *budget, *seed, &tol, inputs),
    }
}

/// Parses `args` (program name first) and runs the command. Every
/// invocation ends with exit code 0, 1 or 2.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let (code, stdout, stderr) = if e.use_stderr() {
                (EXIT_INPUT_ERROR, String::new(), text)
            } else {
                (0, text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
                report: None,
            };
        }
    };

    let start = Instant::now();
    let mut inputs = Inputs::default();
    let done = execute(&cli, &mut inputs);
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut report = RunReport {
        command: command_name(&cli.command).to_string(),
        args: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        inputs_sha256: report::digest(inputs.0.iter().map(|b| b.as_slice())),
        result: Value::Null,
        margin: None,
        error: None,
        wall_time_ms,
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: None,
    };
    let (code, summary, stderr) = match done {
        Ok(done) => {
            report.result = done.result;
            report.margin = done.margin.map(|m| margin_name(m).to_string());
            report.seed = done.seed;
            (done.code, done.summary, String::new())
        }
        Err(e) => {
            report.error = Some(e.to_string());
            (EXIT_INPUT_ERROR, String::new(), format!("error: {e}\n"))
        }
    };
    let stdout = if cli.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else if summary.is_empty() {
        String::new()
    } else {
        summary + "\n"
    };
    Outcome {
        code,
        stdout,
        stderr,
        report: Some(report),
    }
}
