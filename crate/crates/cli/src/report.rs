//! The JSON report emitted by every subcommand.

use multispec_core::{Poly, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "multispec/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The computation succeeded but a hypothesis of the underlying theorem
    /// or certificate does not hold for this input.
    HypothesisNotSatisfied,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::HypothesisNotSatisfied => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub results: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing: Timing,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl Report {
    /// Human-readable rendering: one `key: value` line per result field.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nstatus: {}\n", self.command, status_name(self.status));
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        if let Value::Object(map) = &self.results {
            write_object(&mut out, map, 0);
        }
        out
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::HypothesisNotSatisfied => "hypothesis_not_satisfied",
        Status::Error => "error",
    }
}

fn write_object(out: &mut String, map: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (k, v) in map {
        match v {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{k}:\n"));
                write_object(out, inner, indent + 1);
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            write_object(out, inner, indent + 2);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{k}: {}\n", scalar(other))),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Rationals travel as `"p/q"` strings (or `"p"` for integers).
pub fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rats(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rat).collect())
}

/// A polynomial as readable text in `var` plus its ascending coefficients.
pub fn poly_in(p: &Poly, var: &str) -> Value {
    json!({ "text": p.render(var), "coeffs": rats(p.coeffs()) })
}

pub fn poly(p: &Poly) -> Value {
    poly_in(p, "z")
}

/// Reads back a rational written by [`rat`].
pub fn parse_rat(v: &Value) -> Option<Rational> {
    v.as_str()?.parse().ok()
}
