//! Command-line surface, file formats and verification suites for the
//! Fibonacci restricted Lie algebra engine in `fiblie-core`.

pub mod cli;
pub mod commands;
pub mod expr;
pub mod figures;
pub mod output;
pub mod verify;
