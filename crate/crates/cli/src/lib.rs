//! Batch front end for `arithcorr`.
//!
//! Every command is a pure function from parsed arguments to an [`Output`]
//! so it can be tested without spawning a process. Exit codes: 0 when all
//! checks pass, 1 on a mathematical mismatch, 2 on a usage error.

pub mod commands;
pub mod polytable;
pub mod report;

use std::fmt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Bad arguments or input files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<arithcorr::Error> for UsageError {
    fn from(e: arithcorr::Error) -> Self {
        UsageError(e.to_string())
    }
}

/// What a command wants printed, and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    pub fn usage(err: UsageError) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: EXIT_USAGE,
        }
    }
}
