use std::io::{self, BufRead, Write};

use crate::beamstack::BeamStack;

use super::eval::render_stack;
use super::parse::parse_line;

/// What the REPL has to say about one input line.
#[derive(Clone, Debug, PartialEq)]
pub enum Reply {
    /// Rendered stack after a successful command.
    Stack(String),
    Message(String),
    Error(String),
    Nothing,
    Quit,
}

const HELP: &str = "\
commands: beam random | split AXIS | filter AXIS +|- | recombine AXIS
          bfield AXIS ANGLE | drop | flip | show
session:  undo | reset | help | quit
AXIS is x, y, z or (theta, phi); angles accept pi, e.g. 2*pi or pi/2";

/// Interactive session over one implicit current stack, with undo.
#[derive(Debug, Default)]
pub struct Repl {
    stack: BeamStack,
    history: Vec<BeamStack>,
    round: Option<usize>,
    line: usize,
}

impl Repl {
    pub fn new() -> Self {
        Self::default()
    }

    /// Print intensities with a fixed number of decimals.
    pub fn with_round(mut self, round: Option<usize>) -> Self {
        self.round = round;
        self
    }

    pub fn stack(&self) -> &BeamStack {
        &self.stack
    }

    fn render(&self) -> String {
        render_stack(&self.stack.intensities(), self.round)
    }

    pub fn handle(&mut self, input: &str) -> Reply {
        self.line += 1;
        let trimmed = input.trim();
        match trimmed.to_ascii_lowercase().as_str() {
            "" => return Reply::Nothing,
            "quit" | "exit" | ":q" => return Reply::Quit,
            "help" | "?" => return Reply::Message(HELP.to_string()),
            "undo" => {
                return match self.history.pop() {
                    Some(previous) => {
                        self.stack = previous;
                        Reply::Stack(self.render())
                    }
                    None => Reply::Message("nothing to undo".to_string()),
                }
            }
            "reset" => {
                let previous = std::mem::take(&mut self.stack);
                self.history.push(previous);
                return Reply::Stack(self.render());
            }
            _ => {}
        }
        let commands = match parse_line(trimmed, self.line) {
            Ok(c) => c,
            Err(e) => return Reply::Error(e.to_string()),
        };
        if commands.is_empty() {
            return Reply::Nothing;
        }
        let mut next = self.stack.clone();
        for (command, location) in commands {
            match command.apply(&next) {
                Ok(s) => next = s,
                Err(e) => return Reply::Error(format!("{location}: `{command}`: {e}")),
            }
        }
        let previous = std::mem::replace(&mut self.stack, next);
        self.history.push(previous);
        Reply::Stack(self.render())
    }

    /// Drive the session from `input` until end of input or `quit`.
    pub fn run<R: BufRead, W: Write>(
        &mut self,
        input: R,
        mut output: W,
        prompt: Option<&str>,
    ) -> io::Result<()> {
        let show_prompt = |out: &mut W| -> io::Result<()> {
            if let Some(p) = prompt {
                write!(out, "{p}")?;
                out.flush()?;
            }
            Ok(())
        };
        show_prompt(&mut output)?;
        for line in input.lines() {
            match self.handle(&line?) {
                Reply::Stack(text) => write!(output, "{text}")?,
                Reply::Message(text) => writeln!(output, "{text}")?,
                Reply::Error(text) => writeln!(output, "error: {text}")?,
                Reply::Nothing => {}
                Reply::Quit => break,
            }
            show_prompt(&mut output)?;
        }
        output.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session(input: &str) -> String {
        let mut out = Vec::new();
        Repl::new().run(input.as_bytes(), &mut out, None).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn prints_stack_after_each_command() {
        assert_eq!(session("beam random\n"), "Beam of intensity 1.0\n");
    }

    #[test]
    fn experiment_two() {
        let out = session("beam random\nfilter z +\nsplit x\n");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[1], "Beam of intensity 0.5");
        let tail: Vec<f64> = lines[2..]
            .iter()
            .map(|l| l.trim_start_matches("Beam of intensity ").parse().unwrap())
            .collect();
        assert_eq!(tail.len(), 2);
        assert!(tail.iter().all(|x| (x - 0.25).abs() < 1e-9));
    }

    #[test]
    fn undo_at_start() {
        let mut repl = Repl::new();
        assert_eq!(
            repl.handle("undo"),
            Reply::Message("nothing to undo".into())
        );
        assert!(repl.stack().is_empty());
    }

    #[test]
    fn undo_and_reset() {
        let mut repl = Repl::new();
        repl.handle("beam random");
        repl.handle("split z");
        assert_eq!(repl.stack().beam_count(), 2);
        repl.handle("undo");
        assert_eq!(repl.stack().intensities(), vec![1.0]);
        repl.handle("reset");
        assert!(repl.stack().is_empty());
        repl.handle("undo");
        assert_eq!(repl.stack().intensities(), vec![1.0]);
    }

    #[test]
    fn bad_lines_leave_state_alone() {
        let mut repl = Repl::new();
        repl.handle("beam random");
        assert!(matches!(repl.handle("split q"), Reply::Error(_)));
        assert!(matches!(repl.handle("flip"), Reply::Error(_)));
        // the first half of a failing line is rolled back too
        assert!(matches!(
            repl.handle("split z; drop; drop; drop"),
            Reply::Error(_)
        ));
        assert_eq!(repl.stack().intensities(), vec![1.0]);
        let out = session("flip\nquit\nbeam random\n");
        assert_eq!(
            out,
            "error: line 1, column 1: `flip`: need two beams to flip\n"
        );
    }

    #[test]
    fn empty_stack_rendering() {
        let out = session("beam random\ndrop\n");
        assert_eq!(out, "Beam of intensity 1.0\nNo beams\n");
    }
}
