//! JSON reports shared by the command-line front end and the acceptance suite.
//!
//! Floats are written with 17 significant digits so that output is byte-identical for
//! identical inputs; non-finite values become strings.

use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{json, Map, Number, Value};

/// One named pass/fail check together with the values it looked at.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: Value) -> Self {
        Check { name: name.into(), pass, detail }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "pass": self.pass, "detail": self.detail })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub results: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        Report { command: command.into(), inputs, checks: Vec::new(), results: Value::Object(Map::new()) }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn set(&mut self, key: &str, value: Value) {
        if let Value::Object(m) = &mut self.results {
            m.insert(key.to_string(), value);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "pass": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "results": self.results,
        })
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("reports serialize")
    }
}

/// A float with a fixed 17-significant-digit rendering.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&format!("{x:.16e}")).expect("valid number"))
    } else {
        Value::String(format!("{x}"))
    }
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

pub fn display_list<T: std::fmt::Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}
