//! Command-line front end for the associated-form engine: polynomial
//! expression parsing, canonical printing, JSON serialization and one
//! subcommand per engine operation.

pub mod cli;
pub mod commands;
pub mod error;
pub mod json;
pub mod parse;
pub mod print;
pub mod threads;

pub use error::CliError;
