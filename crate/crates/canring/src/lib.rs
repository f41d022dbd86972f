//! File formats, the acceptance suite, and the command-line front-end for
//! `canring-core`.

pub mod checks;
pub mod cli;
pub mod fixtures;
pub mod json;
