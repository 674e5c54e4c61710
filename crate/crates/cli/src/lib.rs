//! Command implementations and report documents for the `solvrad` binary.

pub mod commands;
pub mod report;

pub use commands::{
    cmd_info, cmd_sharpness, cmd_suite, cmd_verify, RunFlags, SuiteConfig, SuiteEntry, Theorem, EXIT_BUDGET,
    EXIT_CONTRADICTION, EXIT_OK, EXIT_USAGE,
};
pub use report::{SuiteReport, VerificationReport};
