//! IO and command-line companion to [`scalelaw_core`]: CSV ingestion of
//! benchmark timings, report rendering (table / CSV / JSON), and the
//! `scalelaw` binary's argument grammar and dispatch.

pub mod cli;
pub mod report;
pub mod timing_csv;

pub use cli::{execute, Cli, CliError};
