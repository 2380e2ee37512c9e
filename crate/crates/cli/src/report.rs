//! Report documents: sorted-key JSON and a terse text rendering.

use std::fmt::Write as _;
use std::time::Duration;

use leibcx::chain::CheckOutcome;
use serde_json::{json, Map, Value};

use crate::input::Source;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Informational checks are reported but never fail the run.
    pub asserted: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool, checked: usize, witness: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            asserted: true,
            checked,
            witness,
        }
    }

    pub fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.name = format!("{prefix}.{}", self.name);
        self
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "asserted": self.asserted,
            "checked": self.checked,
            "witness": self.witness,
        })
    }
}

impl From<CheckOutcome> for Check {
    fn from(c: CheckOutcome) -> Self {
        Check::new(&c.name, c.passed, c.checked, c.witness)
    }
}

/// One command's output.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Source>,
    pub max_degree: Option<usize>,
    pub checks: Vec<Check>,
    /// Tables and values, included in JSON output.
    pub results: Map<String, Value>,
    /// Human-readable lines for text output.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<Source>, max_degree: Option<usize>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            max_degree,
            checks: Vec::new(),
            results: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, c: impl Into<Check>) {
        self.checks.push(c.into());
    }

    pub fn result(&mut self, key: &str, v: Value) {
        self.results.insert(key.to_string(), v);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.asserted)
    }

    pub fn to_json(&self, elapsed: Duration) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|s| json!({"source": s.label, "sha256": s.sha256}))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "max_degree": self.max_degree,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "results": Value::Object(self.results.clone()),
            "timing": {"elapsed_ms": elapsed.as_millis() as u64},
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.command);
        for i in &self.inputs {
            let _ = writeln!(s, "  input {} sha256 {}", i.label, &i.sha256[..16]);
        }
        if let Some(n) = self.max_degree {
            let _ = writeln!(s, "  max degree {n}");
        }
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        for c in &self.checks {
            let verdict = match (c.passed, c.asserted) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "NOTE",
            };
            let _ = write!(s, "{verdict} {} ({} checked)", c.name, c.checked);
            if let Some(w) = &c.witness {
                let _ = write!(s, " at {w}");
            }
            s.push('\n');
        }
        if !self.checks.is_empty() {
            let _ = writeln!(
                s,
                "{}",
                if self.passed() {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
        }
        s
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Formats a row of numbers for text tables.
pub fn row(label: &str, values: &[usize]) -> String {
    let cells: Vec<String> = values.iter().map(|v| format!("{v:>6}")).collect();
    format!("  {label:<10}{}", cells.join(""))
}
