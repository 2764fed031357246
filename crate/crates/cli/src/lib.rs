//! Command-line front end: argument parsing, dispatch and report emission.
//!
//! [`run`] is the whole program minus process exit, so tests can drive it
//! in-process.

mod args;
mod catalog;
mod commands;
mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use tssforge_core::braid::HomError;
use tssforge_core::constructions::SpecError;
use tssforge_core::tss::TssError;
use tssforge_core::GroupError;

pub use args::{Cli, Common, OutputFormat, Verb};
pub use catalog::{read_catalog, Catalog};
pub use report::{emit, Diagnostic, Report, Table, SCHEMA_VERSION};

/// Environment variable that replaces the default order cap.
pub const CAP_ENV: &str = "TSSFORGE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_IMPOSSIBLE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Tss(#[from] TssError),
}

fn group_exit(e: &GroupError) -> i32 {
    match e {
        GroupError::CapExceeded { .. } => EXIT_INCOMPLETE,
        _ => EXIT_USAGE,
    }
}

fn tss_exit(e: &TssError) -> i32 {
    match e {
        TssError::CertificateViolation(_) => EXIT_IMPOSSIBLE,
        TssError::Group(g) => group_exit(g),
        _ => EXIT_USAGE,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Spec(SpecError::Group(g)) | CliError::Group(g) => group_exit(g),
            CliError::Spec(_) => EXIT_USAGE,
            CliError::Hom(HomError::Group(g)) => group_exit(g),
            CliError::Hom(HomError::Tss(t)) | CliError::Tss(t) => tss_exit(t),
            CliError::Hom(_) => EXIT_USAGE,
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Maps a report status to the process exit code.
pub fn status_exit(status: &str) -> i32 {
    match status {
        "incomplete" => EXIT_INCOMPLETE,
        "WITNESS-FOUND" | "certificate-failure" | "criterion-failure" => EXIT_IMPOSSIBLE,
        _ => EXIT_OK,
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome { code, stdout, stderr };
        }
    };

    let env_cap = std::env::var(CAP_ENV).ok();
    let settings = match commands::Settings::resolve(&cli.common, env_cap.as_deref()) {
        Ok(s) => s,
        Err(e) => return failure(&e),
    };
    let start = Instant::now();
    match commands::dispatch(&cli.verb, &settings) {
        Ok(mut report) => {
            if cli.common.timing {
                report.wall_ms = Some(start.elapsed().as_millis());
            }
            Outcome {
                code: status_exit(&report.status),
                stdout: emit(&report, cli.common.output),
                stderr: String::new(),
            }
        }
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}
