//! Check records and versioned JSON reports.

use std::time::Instant;

use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// Construction label and the identity being checked.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            note: None,
            elapsed_ms: None,
        }
    }

    /// Attaches `witness` only when the check failed.
    pub fn witness_on_failure(mut self, witness: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            self.witness = Some(witness());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Compares two values and records the pair on mismatch.
pub fn check_eq<T: PartialEq + std::fmt::Debug>(id: &str, anchor: &str, lhs: &T, rhs: &T) -> CheckRecord {
    CheckRecord::new(id, anchor, lhs == rhs).witness_on_failure(|| format!("lhs = {:?}, rhs = {:?}", lhs, rhs))
}

pub fn timed<F: FnOnce() -> Vec<CheckRecord>>(f: F) -> (Vec<CheckRecord>, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub suite: String,
    pub parameters: serde_json::Value,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: &str, parameters: serde_json::Value, mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = records.iter().filter(|r| r.passed()).count();
        Report { version: REPORT_VERSION, suite: suite.to_string(), parameters, passed, failed: records.len() - passed, records }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
