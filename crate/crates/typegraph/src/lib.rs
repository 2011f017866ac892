//! Command line, file formats and timed oracle runs on top of `typegraph-core`.

pub mod cli;
mod error;
pub mod formats;
pub mod table;
pub mod timed;

pub use error::{CliError, Result};
pub use typegraph_core as core;
