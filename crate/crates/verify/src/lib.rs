//! Batch verification on top of `groth-core`.
//!
//! [`run`] builds the Grothendieck (and, when needed, Schubert) table for all
//! of `S_n` once, fans the requested checks out over a rayon pool and
//! collects a [`Report`] whose content depends only on the configuration.
//! Tables can be persisted between runs through [`cache`].

pub mod cache;
pub mod check;
pub mod config;
pub mod format;
pub mod print;
pub mod report;
mod run;

pub use crate::check::{Check, Outcome};
pub use crate::config::{parse_checks, ReportFormat, RunConfig};
pub use crate::report::Report;
pub use crate::run::{engine_name, permutations, prepare_table, run, RunError, RunOutcome, RunStats, TableStats};
