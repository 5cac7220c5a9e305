//! Check records shared by the fixture runner and the command line.

use serde::Serialize;

use crate::error::Result;
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    /// The document or built-in fixture the check ran on.
    pub subject: String,
    pub check: String,
    pub result: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Where the checked statement comes from, in words.
    pub reference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Error => "error",
        }
    }
}

impl CheckRecord {
    pub fn from_result(subject: &str, check: &str, reference: &str, r: Result<Verdict>) -> Self {
        let (result, witness) = match r {
            Ok(v) if v.holds => (Outcome::Pass, None),
            Ok(v) => (Outcome::Fail, v.witness.map(|w| w.to_string())),
            Err(e) => (Outcome::Error, Some(e.to_string())),
        };
        CheckRecord {
            subject: subject.to_string(),
            check: check.to_string(),
            result,
            witness,
            reference: reference.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.result == Outcome::Pass
    }
}

/// Sorts by subject, then check name.
pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| (&a.subject, &a.check).cmp(&(&b.subject, &b.check)));
}

/// One aligned line per record.
pub fn format_text(records: &[CheckRecord]) -> String {
    let sw = records.iter().map(|r| r.subject.len()).max().unwrap_or(0);
    let cw = records.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in records {
        let line = match &r.witness {
            Some(w) => format!("{:<5}  {:<sw$}  {:<cw$}  ({w})", r.result.as_str(), r.subject, r.check),
            None => format!("{:<5}  {:<sw$}  {}", r.result.as_str(), r.subject, r.check),
        };
        out.push_str(&line);
        out.push('\n');
    }
    let passed = records.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} checks passed\n", records.len()));
    out
}

pub fn format_json(records: &[CheckRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}
