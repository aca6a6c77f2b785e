//! Input parsing, report serialization and subcommand implementations for
//! the `semiglue` binary.

pub mod commands;
pub mod input;
pub mod report;
