//! Library side of the `specdist` command-line tool: the JSON schemas,
//! output formatting and command implementations, kept separate from the
//! binary so integration tests can drive them directly.

pub mod commands;
pub mod output;
pub mod schema;
