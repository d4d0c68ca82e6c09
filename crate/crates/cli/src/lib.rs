//! Document format, command dispatch and rendering behind the `platknot` binary.

pub mod commands;
pub mod document;
pub mod error;
pub mod render;

pub use commands::{run_command, Command, Format, Options};
pub use document::{parse_document, Document};
pub use error::CliError;
