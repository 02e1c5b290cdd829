//! Library side of the `qshuffle` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod render;
pub mod report;

/// Package version plus `git describe`, embedded in every report.
pub const VERSION: &str = env!("QSHUFFLE_VERSION");
