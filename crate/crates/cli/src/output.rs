use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;

use crate::Format;

/// Result of one command: the structured document and its human summary.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub human: String,
    pub exit_status: u8,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, results: Value, human: String) -> Report {
        Report { command, inputs, results, human, exit_status: 0 }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad files, flags or expressions: exit 2.
    Input(&'static str, String),
    /// A mathematical precondition or check failed: exit 1.
    Analysis(&'static str, String),
}

impl Failure {
    pub fn from_core(command: &'static str, e: jumploci::Error) -> Failure {
        use jumploci::Error::*;
        match e {
            DivisionByZero | Syntax { .. } | DuplicateLine(..) | ZeroCovector(_) | UnknownLine(_)
            | UnknownBuiltin(_) | NotAPartition(_) | NonPositiveMultiplicity(_) | InvalidInput(_) => {
                Failure::Input(command, e.to_string())
            }
            DivisionByZeroPoly | NotDivisible | NotAPower(_) | NotAPencil(_) | DegeneratePencil(_)
            | InvalidOrbifoldData(_) | NotSmall(_) | MultipleMultipleFibers(_) => Failure::Analysis(command, e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a str,
    inputs: &'a Value,
    results: &'a Value,
    exit_status: u8,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    command: &'a str,
    error: &'a str,
    exit_status: u8,
}

pub fn emit(format: Format, outcome: Result<Report, Failure>) -> ExitCode {
    match outcome {
        Ok(r) => {
            match format {
                Format::Human => out(&r.human),
                Format::Json => {
                    let doc = Document { command: r.command, inputs: &r.inputs, results: &r.results, exit_status: r.exit_status };
                    out(&(serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"));
                }
            }
            ExitCode::from(r.exit_status)
        }
        Err(f) => {
            let (command, msg, code) = match &f {
                Failure::Input(c, m) => (*c, m.as_str(), 2),
                Failure::Analysis(c, m) => (*c, m.as_str(), 1),
            };
            eprintln!("error: {msg}");
            if format == Format::Json {
                let doc = ErrorDocument { command, error: msg, exit_status: code };
                out(&(serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"));
            }
            ExitCode::from(code)
        }
    }
}

fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}
