//! Example registry, configuration, and the command implementations behind
//! the `crosscycle` binary.

pub mod commands;
pub mod config;
pub mod output;
pub mod registry;
pub mod svg;

pub use commands::{
    cmd_check_appendix, cmd_render, cmd_reproduce, cmd_solve, cmd_verify, AppendixReport, ExampleSummary, ReproduceReport,
    SolveOutput, VerifyOutput,
};
pub use config::{load_config, parse_config, ConfigError, Format, OutputSpec, RunConfig};

use std::path::PathBuf;

use thiserror::Error;

use crate::crossing::CrossingError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Solver(#[from] CrossingError),
    #[error("reproduction mismatch: {0}")]
    Mismatch(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Output { .. } => EXIT_CONFIG,
            CliError::Solver(CrossingError::Family(_)) => EXIT_CONFIG,
            CliError::Solver(_) => EXIT_SOLVER,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}
