use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::axis::{Axis, Sign};

use super::ast::{Command, ExperimentScript};

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("unknown keyword `{0}`")]
    UnknownKeyword(String),
    #[error("malformed axis: expected x, y, z or (theta, phi)")]
    MalformedAxis,
    #[error("missing {0}")]
    MissingArgument(&'static str),
    #[error("expected {expected}, found `{found}`")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("unexpected character `{0}`")]
    BadCharacter(char),
    #[error("`{0}` needs a beam, but no `beam random` comes before it")]
    MissingSource(String),
}

#[derive(Clone, Debug, PartialEq, Error)]
#[error("{location}: {kind}")]
pub struct ParseError {
    pub location: Location,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Number(f64),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => w.clone(),
            Tok::Number(n) => format!("{n}"),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Comma => ",".into(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Slash => "/".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

/// Parse a whole script.
///
/// Besides syntax, this checks that no beam-consuming command appears before
/// the first `beam random`.
pub fn parse(text: &str) -> Result<ExperimentScript, ParseError> {
    let mut script = ExperimentScript::default();
    let mut has_source = false;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let (code, comment) = split_comment(raw);
        if script.commands.is_empty() && script.name.is_none() {
            if let Some(name) = comment.and_then(|c| c.trim().strip_prefix("name:")) {
                let name = name.trim();
                if !name.is_empty() {
                    script.name = Some(name.to_string());
                }
            }
        }
        for (command, location) in parse_code(code, line)? {
            if command.consumes_beam() && !has_source {
                return Err(ParseError {
                    location,
                    kind: ParseErrorKind::MissingSource(command.to_string()),
                });
            }
            has_source |= command == Command::Source;
            script.commands.push(command);
            script.locations.push(location);
        }
    }
    Ok(script)
}

/// Parse one line of input, which may hold several `;`-separated commands.
/// `line` is the line number reported in errors.
pub fn parse_line(text: &str, line: usize) -> Result<Vec<(Command, Location)>, ParseError> {
    let (code, _) = split_comment(text);
    parse_code(code, line)
}

fn split_comment(raw: &str) -> (&str, Option<&str>) {
    match raw.find('#') {
        Some(i) => (&raw[..i], Some(&raw[i + 1..])),
        None => (raw, None),
    }
}

fn parse_code(code: &str, line: usize) -> Result<Vec<(Command, Location)>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for segment in code.split(';') {
        let tokens = lex(segment, line, offset)?;
        let end_column = offset + segment.chars().count() + 1;
        if !tokens.is_empty() {
            let mut p = LineParser {
                tokens,
                pos: 0,
                line,
                end_column,
            };
            let location = p.location_here();
            let command = p.command()?;
            p.finish()?;
            out.push((command, location));
        }
        offset += segment.chars().count() + 1;
    }
    Ok(out)
}

fn lex(segment: &str, line: usize, offset: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = segment.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = offset + i + 1;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push(Token { tok, column });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value = text.parse::<f64>().map_err(|_| ParseError {
                location: Location { line, column },
                kind: ParseErrorKind::InvalidNumber(text.clone()),
            })?;
            tokens.push(Token {
                tok: Tok::Number(value),
                column,
            });
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            tokens.push(Token {
                tok: Tok::Word(word.to_lowercase()),
                column,
            });
        } else {
            return Err(ParseError {
                location: Location { line, column },
                kind: ParseErrorKind::BadCharacter(c),
            });
        }
    }
    Ok(tokens)
}

struct LineParser {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl LineParser {
    fn location_here(&self) -> Location {
        let column = self
            .tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column);
        Location {
            line: self.line,
            column,
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            location: self.location_here(),
            kind,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let keyword = match self.peek() {
            Some(Tok::Word(w)) => w.clone(),
            Some(other) => {
                let found = other.describe();
                return Err(self.error(ParseErrorKind::Unexpected {
                    expected: "a command",
                    found,
                }));
            }
            None => return Err(self.error(ParseErrorKind::MissingArgument("command"))),
        };
        let command = match keyword.as_str() {
            "beam" => {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Word(w)) if w == "random" => {
                        self.pos += 1;
                        Command::Source
                    }
                    Some(other) => {
                        let found = other.describe();
                        return Err(self.error(ParseErrorKind::Unexpected {
                            expected: "`random`",
                            found,
                        }));
                    }
                    None => return Err(self.error(ParseErrorKind::MissingArgument("beam source"))),
                }
            }
            "split" => {
                self.pos += 1;
                Command::Split(self.axis()?)
            }
            "recombine" => {
                self.pos += 1;
                Command::Recombine(self.axis()?)
            }
            "filter" => {
                self.pos += 1;
                let axis = self.axis()?;
                Command::Filter(axis, self.sign()?)
            }
            "bfield" => {
                self.pos += 1;
                let axis = self.axis()?;
                if self.peek().is_none() {
                    return Err(self.error(ParseErrorKind::MissingArgument("field angle")));
                }
                Command::BField(axis, self.number()?)
            }
            "drop" => {
                self.pos += 1;
                Command::Drop
            }
            "flip" => {
                self.pos += 1;
                Command::Flip
            }
            "show" => {
                self.pos += 1;
                Command::Show
            }
            _ => return Err(self.error(ParseErrorKind::UnknownKeyword(keyword))),
        };
        Ok(command)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error(ParseErrorKind::Unexpected {
                expected: "end of command",
                found: t.describe(),
            })),
        }
    }

    fn axis(&mut self) -> Result<Axis, ParseError> {
        match self.peek() {
            None => Err(self.error(ParseErrorKind::MissingArgument("axis"))),
            Some(Tok::Word(w)) => {
                let axis = match w.as_str() {
                    "x" => Axis::X,
                    "y" => Axis::Y,
                    "z" => Axis::Z,
                    _ => return Err(self.error(ParseErrorKind::MalformedAxis)),
                };
                self.pos += 1;
                Ok(axis)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let theta = self.number().map_err(axis_error)?;
                self.expect(Tok::Comma).map_err(axis_error)?;
                let phi = self.number().map_err(axis_error)?;
                self.expect(Tok::RParen).map_err(axis_error)?;
                Ok(Axis::Direction { theta, phi })
            }
            Some(_) => Err(self.error(ParseErrorKind::MalformedAxis)),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::MalformedAxis))
        }
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                Ok(Sign::Plus)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Sign::Minus)
            }
            None => Err(self.error(ParseErrorKind::MissingArgument("sign (+ or -)"))),
            Some(other) => {
                let found = other.describe();
                Err(self.error(ParseErrorKind::Unexpected {
                    expected: "+ or -",
                    found,
                }))
            }
        }
    }

    /// `[+|-] factor (('*' | '/') factor)*`, factor being a literal or `pi`.
    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.location_here();
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut value = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    value *= self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    value /= self.factor()?;
                }
                _ => break,
            }
        }
        if negate {
            value = -value;
        }
        if !value.is_finite() {
            return Err(ParseError {
                location: start,
                kind: ParseErrorKind::InvalidNumber(format!("{value}")),
            });
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<f64, ParseError> {
        match self.peek() {
            Some(Tok::Number(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::Word(w)) if w == "pi" => {
                self.pos += 1;
                Ok(PI)
            }
            None => Err(self.error(ParseErrorKind::MissingArgument("number"))),
            Some(other) => {
                let found = other.describe();
                Err(self.error(ParseErrorKind::InvalidNumber(found)))
            }
        }
    }
}

// Anything wrong inside `( ... )` is a malformed axis at the offending token.
fn axis_error(e: ParseError) -> ParseError {
    ParseError {
        location: e.location,
        kind: ParseErrorKind::MalformedAxis,
    }
}
