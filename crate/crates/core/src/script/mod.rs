//! A line-oriented text language for laboratory sessions.
//!
//! ```text
//! # name: Experiment 4
//! beam random
//! filter z +
//! split x
//! recombine x
//! split z
//! ```
//!
//! One command per line (or separated by `;`), `#` starts a comment and
//! keywords are case-insensitive. Axes are `x`, `y`, `z` or `(theta, phi)`
//! in radians; numbers may use `pi` and products such as `2*pi` or `pi/2`.
//! A leading `# name: ...` comment names the script.

mod ast;
mod eval;
mod parse;
mod repl;

pub use ast::{Command, ExperimentScript};
pub use eval::{evaluate, evaluate_on, render_stack, RunError, RunReport, Step};
pub use parse::{parse, parse_line, Location, ParseError, ParseErrorKind};
pub use repl::{Repl, Reply};

/// Conventional file extension for experiment scripts.
pub const EXTENSION: &str = "sgx";
