use serde::Serialize;
use thiserror::Error;

use crate::beamstack::{render_intensities, BeamStack, StackError};

use super::ast::ExperimentScript;
use super::parse::Location;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Step {
    pub command: String,
    pub intensities: Vec<f64>,
}

/// Stack intensities after every executed command, like a session
/// transcript.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub steps: Vec<Step>,
    #[serde(rename = "final")]
    pub final_intensities: Vec<f64>,
}

impl RunReport {
    /// Command lines prefixed with `> `, each followed by the stack.
    pub fn transcript(&self, round: Option<usize>) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str("> ");
            out.push_str(&step.command);
            out.push('\n');
            out.push_str(&render_stack(&step.intensities, round));
        }
        out
    }
}

/// Stack rendering used by the runner and the REPL.
pub fn render_stack(intensities: &[f64], round: Option<usize>) -> String {
    if intensities.is_empty() {
        "No beams\n".to_string()
    } else {
        render_intensities(intensities, round)
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
#[error("{location}: `{command}`: {error}")]
pub struct RunError {
    pub location: Location,
    pub command: String,
    pub error: StackError,
}

/// Run a script from an empty stack.
pub fn evaluate(script: &ExperimentScript) -> Result<RunReport, RunError> {
    evaluate_on(&BeamStack::empty(), script).map(|(_, report)| report)
}

/// Run a script on top of an existing stack, returning the final stack.
/// Either every command succeeds or nothing is returned but the error.
pub fn evaluate_on(
    start: &BeamStack,
    script: &ExperimentScript,
) -> Result<(BeamStack, RunReport), RunError> {
    let mut stack = start.clone();
    let mut steps = Vec::with_capacity(script.len());
    for (i, command) in script.commands.iter().enumerate() {
        stack = command.apply(&stack).map_err(|error| RunError {
            location: script.location(i),
            command: command.to_string(),
            error,
        })?;
        steps.push(Step {
            command: command.to_string(),
            intensities: stack.intensities(),
        });
    }
    let report = RunReport {
        name: script.name.clone(),
        steps,
        final_intensities: stack.intensities(),
    };
    Ok((stack, report))
}
