//! Command-line layer for A1-Score comparisons: catalog ingestion,
//! verdict reports, rankings, and CSV/SVG plot emission.

use std::fmt;

pub mod catalog;
pub mod commands;
pub mod plot;
pub mod report;

/// Command failures, split by exit code: bad input exits 2, I/O exits 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Io(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }

    pub fn io(msg: impl Into<String>) -> CliError {
        CliError::Io(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}
