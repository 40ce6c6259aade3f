//! Command-line front end for `multispec-core`.
//!
//! Every subcommand produces a [`Report`]; `--json` prints it as one JSON
//! object and the default is an indented `key: value` listing. The exit code
//! is 0 on success, 2 when a hypothesis of the requested check does not hold,
//! and 1 on errors.

pub mod commands;
pub mod parse;
pub mod repro;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use multispec_core::spectrum::SpectrumOptions;
use serde_json::{json, Value};
use thiserror::Error;

pub use commands::Command;
pub use parse::{parse_poly, parse_rational, ParseError};
pub use report::{Report, Status, Timing, SCHEMA};

/// Environment variable overriding the default bound on `d^n`.
pub const SIZE_CAP_VAR: &str = "MULTISPEC_SIZE_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] multispec_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "multispec", version, about = "Exact multiplier spectra of polynomial maps")]
pub struct Cli {
    /// Print the report as a single JSON object
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// What a process invocation prints and returns.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    pub report: Option<Report>,
}

pub fn size_cap_from_env() -> Result<usize, CliError> {
    match std::env::var(SIZE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SIZE_CAP_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(multispec_core::spectrum::DEFAULT_SIZE_CAP),
    }
}

/// Runs one command and wraps the result in a report. `size_cap` is echoed
/// among the inputs so that the report can be replayed.
pub fn execute(cmd: &Command, size_cap: usize) -> Report {
    let start = Instant::now();
    let opts = SpectrumOptions {
        size_cap,
        ..SpectrumOptions::default()
    };
    let mut inputs = match serde_json::to_value(cmd) {
        Ok(Value::Object(mut m)) => m.remove("inputs").unwrap_or(Value::Null),
        _ => Value::Null,
    };
    if let Value::Object(m) = &mut inputs {
        m.insert("size_cap".into(), json!(size_cap));
    }
    let (results, status, error) = match commands::execute(cmd, &opts) {
        Ok((v, s)) => (v, s, None),
        Err(e) => (Value::Null, Status::Error, Some(e.to_string())),
    };
    Report {
        schema: SCHEMA.to_string(),
        command: cmd.name().to_string(),
        inputs,
        status,
        results,
        error,
        timing: Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    }
}

/// Recovers the command and size cap a report was produced from.
pub fn command_of(report: &Report) -> Result<(Command, usize), CliError> {
    if report.schema != SCHEMA {
        return Err(CliError::Usage(format!("unsupported schema {:?}", report.schema)));
    }
    let cap = report
        .inputs
        .get("size_cap")
        .and_then(Value::as_u64)
        .map(|c| c as usize)
        .unwrap_or(multispec_core::spectrum::DEFAULT_SIZE_CAP);
    let tagged = json!({ "command": report.command, "inputs": report.inputs });
    Ok((serde_json::from_value(tagged)?, cap))
}

pub(crate) fn verify_report(path: &str) -> Result<(Value, Status), CliError> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path)?
    };
    let original: Report = serde_json::from_str(&text)?;
    let (cmd, cap) = command_of(&original)?;
    if matches!(cmd, Command::VerifyReport(_)) {
        return Err(CliError::Usage("refusing to verify a verify-report report".into()));
    }
    let rerun = execute(&cmd, cap);
    let matches = rerun.status == original.status
        && rerun.results == original.results
        && rerun.error == original.error;
    let v = json!({
        "command": original.command,
        "status_reproduced": rerun.status == original.status,
        "results_reproduced": rerun.results == original.results,
        "matches": matches,
    });
    if matches {
        Ok((v, Status::Ok))
    } else {
        Err(CliError::Usage(format!("report not reproduced: {v}")))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome {
                stdout,
                stderr,
                code,
                report: None,
            };
        }
    };
    let cap = match size_cap_from_env() {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: 1,
                report: None,
            }
        }
    };
    let report = execute(&cli.command, cap);
    let stdout = if cli.json {
        let mut s = serde_json::to_string(&report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: report.status.exit_code(),
        report: Some(report),
    }
}
