//! File formats and the command-line front end for `qloop-core`.

pub mod cli;
pub mod formats;
