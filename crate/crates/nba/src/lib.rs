//! File formats and the command-line front end for `nba-core`.

pub mod cli;
mod error;
pub mod format;
pub mod report;

pub use error::CliError;
pub use format::{Algebra, AlgebraBody, AlgebraFile, ElementRepr, MultidealJson, TruthTableFile};
