//! Command-line front end for `adlie`: JSON documents in, JSON reports out.

pub mod app;
pub mod document;

pub use app::{run, Cli, CliError, EXIT_FAILED, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE};
pub use document::{AlgebraDocument, BracketEntry, Kind, SchemaError, SCHEMA_VERSION};
