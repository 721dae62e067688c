//! Library side of the `trigbasis` binary: argument types, subcommand
//! implementations, and the CSV/JSON rendering they share. Kept as a lib
//! so integration tests can drive commands in-process and byte-compare
//! their output.

pub mod args;
pub mod commands;
pub mod error;
pub mod functions;
pub mod output;

pub use args::{BasisKind, Cli, Command, GramKind, OutputFormat};
pub use error::CliError;
pub use functions::TestFunction;
