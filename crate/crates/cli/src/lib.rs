//! Library half of the `krawtchouk` command-line harness.
//!
//! Every subcommand is implemented as a function returning a [`report::Report`]
//! so the same code paths drive the binary, the integration tests, and the
//! acceptance suite.

pub mod commands;
pub mod curves;
pub mod report;
pub mod svg;
pub mod sweep;
