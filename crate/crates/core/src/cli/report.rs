//! Verification reports and their two renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub statement: String,
    /// The formula the check is about, in TeX notation.
    pub anchor: String,
    pub verdict: bool,
    /// Printed counterexample when the verdict is false.
    pub witness: Option<String>,
    /// Seconds spent in the computation that produced this record.
    pub wall_time: f64,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, anchor: &str) -> Self {
        CheckRecord {
            id: id.into(),
            statement: statement.into(),
            anchor: anchor.to_string(),
            verdict: true,
            witness: None,
            wall_time: 0.0,
        }
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.verdict = false;
        self.witness = Some(witness.into());
        self
    }

    /// Sets the verdict; `witness` is only evaluated on failure.
    pub fn verdict(self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            self
        } else {
            self.fail(witness())
        }
    }

    pub fn timed(mut self, seconds: f64) -> Self {
        self.wall_time = seconds;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, records: Vec<CheckRecord>) -> Self {
        let overall = records.iter().all(|r| r.verdict);
        VerificationReport {
            suite: suite.into(),
            records,
            overall,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.verdict)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for r in &self.records {
            let mark = if r.verdict { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {} ({:.3}s)", r.id, r.wall_time);
            let _ = writeln!(out, "       {}", r.statement);
            let _ = writeln!(out, "       anchor: {}", r.anchor);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let passed = self.records.iter().filter(|r| r.verdict).count();
        let _ = writeln!(
            out,
            "overall: {} ({passed}/{} passed)",
            if self.overall { "PASS" } else { "FAIL" },
            self.records.len()
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other}; expected json or text")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::new(
            "demo",
            vec![
                CheckRecord::new("a", "first", "x = x").timed(0.5),
                CheckRecord::new("b", "second", "y = z").fail("y - z"),
            ],
        )
    }

    #[test]
    fn overall_is_conjunction() {
        let r = sample();
        assert!(!r.overall);
        assert_eq!(r.failures().count(), 1);
        assert!(VerificationReport::new("empty", vec![]).overall);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn text_carries_the_same_verdicts() {
        let text = sample().to_text();
        assert!(text.contains("[PASS] a"));
        assert!(text.contains("[FAIL] b"));
        assert!(text.contains("witness: y - z"));
        assert!(text.contains("overall: FAIL (1/2 passed)"));
    }
}
