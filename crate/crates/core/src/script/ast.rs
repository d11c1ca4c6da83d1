use std::fmt;

use crate::axis::{Axis, Sign};
use crate::beamstack::{BeamStack, StackError};
use crate::quantum::Radians;

use super::parse::Location;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Command {
    /// `beam random`: push an oven beam.
    Source,
    Split(Axis),
    Filter(Axis, Sign),
    Recombine(Axis),
    BField(Axis, Radians),
    Drop,
    Flip,
    /// Record the current stack without changing it.
    Show,
}

impl Command {
    /// True for commands that need at least one beam on the stack.
    pub fn consumes_beam(&self) -> bool {
        !matches!(self, Command::Source | Command::Show)
    }

    pub fn apply(&self, stack: &BeamStack) -> Result<BeamStack, StackError> {
        match *self {
            Command::Source => Ok(stack.push_random()),
            Command::Split(axis) => stack.split_along(axis),
            Command::Filter(axis, sign) => stack.filter(axis, sign),
            Command::Recombine(axis) => stack.recombine_along(axis),
            Command::BField(axis, omega) => stack.apply_b_field_along(axis, omega),
            Command::Drop => stack.drop_beam(),
            Command::Flip => stack.flip_beams(),
            Command::Show => Ok(stack.clone()),
        }
    }
}

/// Canonical text form; parses back to the same command.
impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Source => f.write_str("beam random"),
            Command::Split(axis) => write!(f, "split {axis}"),
            Command::Filter(axis, sign) => write!(f, "filter {axis} {sign}"),
            Command::Recombine(axis) => write!(f, "recombine {axis}"),
            Command::BField(axis, omega) => write!(f, "bfield {axis} {omega:?}"),
            Command::Drop => f.write_str("drop"),
            Command::Flip => f.write_str("flip"),
            Command::Show => f.write_str("show"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentScript {
    pub name: Option<String>,
    pub commands: Vec<Command>,
    /// Source position of each command, parallel to `commands`. Empty for
    /// scripts built in code.
    pub locations: Vec<Location>,
}

impl ExperimentScript {
    pub fn new(commands: Vec<Command>) -> Self {
        ExperimentScript {
            name: None,
            commands,
            locations: Vec::new(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn len(&self) -> usize {
        self.commands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commands.is_empty()
    }

    pub fn location(&self, index: usize) -> Location {
        self.locations.get(index).copied().unwrap_or(Location {
            line: index + 1,
            column: 1,
        })
    }

    /// Canonical text, one command per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str("# name: ");
            out.push_str(name);
            out.push('\n');
        }
        for c in &self.commands {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}
