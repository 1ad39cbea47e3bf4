//! Command-line front end for the `homdef` engine: file formats, report
//! documents and subcommands.

pub mod args;
pub mod commands;
pub mod doc;
pub mod files;
