//! JSON forms of commands and stacks.

use serde::{Deserialize, Serialize};
use sglab_core::script::Command;
use sglab_core::{Axis, BeamStack, Sign};

/// A command as posted by clients, e.g. `{"kind":"split","axis":"z"}` or
/// `{"kind":"bfield","theta":1.5708,"phi":0,"omega":6.2832}`.
///
/// The axis is either `axis` (`"x"`, `"y"`, `"z"`) or the pair
/// `theta`/`phi`. Filters take `sign` as `"+"` or `"-"`.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct WireCommand {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

impl WireCommand {
    pub fn kind(kind: &str) -> Self {
        WireCommand {
            kind: kind.to_string(),
            ..Default::default()
        }
    }

    pub fn along(kind: &str, axis: &str) -> Self {
        WireCommand {
            axis: Some(axis.to_string()),
            ..Self::kind(kind)
        }
    }

    pub fn to_command(&self) -> Result<Command, String> {
        let command = match self.kind.to_ascii_lowercase().as_str() {
            "source" | "beam" | "random" => Command::Source,
            "split" => Command::Split(self.axis()?),
            "filter" => Command::Filter(self.axis()?, self.sign()?),
            "recombine" => Command::Recombine(self.axis()?),
            "bfield" => Command::BField(self.axis()?, self.finite("omega", self.omega)?),
            "drop" => Command::Drop,
            "flip" => Command::Flip,
            "show" => Command::Show,
            other => return Err(format!("unknown command kind `{other}`")),
        };
        Ok(command)
    }

    fn axis(&self) -> Result<Axis, String> {
        if let Some(name) = &self.axis {
            return match name.to_ascii_lowercase().as_str() {
                "x" => Ok(Axis::X),
                "y" => Ok(Axis::Y),
                "z" => Ok(Axis::Z),
                other => Err(format!("unknown axis `{other}`")),
            };
        }
        if self.theta.is_none() && self.phi.is_none() {
            return Err("missing axis: give `axis` or `theta` and `phi`".into());
        }
        Ok(Axis::Direction {
            theta: self.finite("theta", self.theta)?,
            phi: self.finite("phi", self.phi)?,
        })
    }

    fn sign(&self) -> Result<Sign, String> {
        match self.sign.as_deref() {
            Some("+") | Some("plus") => Ok(Sign::Plus),
            Some("-") | Some("minus") => Ok(Sign::Minus),
            Some(other) => Err(format!("unknown sign `{other}`")),
            None => Err("missing sign".into()),
        }
    }

    fn finite(&self, field: &str, value: Option<f64>) -> Result<f64, String> {
        match value {
            Some(v) if v.is_finite() => Ok(v),
            Some(_) => Err(format!("`{field}` must be finite")),
            None => Err(format!("missing `{field}`")),
        }
    }
}

impl From<&Command> for WireCommand {
    fn from(command: &Command) -> Self {
        let with_axis = |kind: &str, axis: &Axis| match axis {
            Axis::Direction { theta, phi } => WireCommand {
                theta: Some(*theta),
                phi: Some(*phi),
                ..WireCommand::kind(kind)
            },
            named => WireCommand::along(kind, &named.to_string()),
        };
        match command {
            Command::Source => WireCommand::kind("source"),
            Command::Split(a) => with_axis("split", a),
            Command::Filter(a, s) => WireCommand {
                sign: Some(s.to_string()),
                ..with_axis("filter", a)
            },
            Command::Recombine(a) => with_axis("recombine", a),
            Command::BField(a, omega) => WireCommand {
                omega: Some(*omega),
                ..with_axis("bfield", a)
            },
            Command::Drop => WireCommand::kind("drop"),
            Command::Flip => WireCommand::kind("flip"),
            Command::Show => WireCommand::kind("show"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BeamView {
    pub intensity: f64,
}

/// The stack as clients see it, bottom beam first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StackView {
    pub beams: Vec<BeamView>,
}

impl From<&BeamStack> for StackView {
    fn from(stack: &BeamStack) -> Self {
        StackView {
            beams: stack
                .intensities()
                .into_iter()
                .map(|intensity| BeamView { intensity })
                .collect(),
        }
    }
}
