//! Outcome of a verification run, in text and record form.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Default number of mismatches kept in a report.
pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: i64,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub checked: u64,
    pub mismatch_count: u64,
    /// At most `cap` mismatches, sorted by `n`.
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub pass: bool,
}

impl VerificationReport {
    /// One self-contained JSON record.
    pub fn to_record(&self) -> Value {
        let mut record = serde_json::Map::new();
        record.insert("check".into(), json!(self.id));
        for (k, v) in &self.params {
            record.insert(k.clone(), v.clone());
        }
        record.insert("checked".into(), json!(self.checked));
        record.insert("pass".into(), json!(self.pass));
        record.insert("mismatch_count".into(), json!(self.mismatch_count));
        record.insert("mismatches".into(), json!(self.mismatches));
        if !self.notes.is_empty() {
            record.insert("notes".into(), json!(self.notes));
        }
        record.insert("elapsed_ms".into(), json!(self.elapsed.as_millis() as u64));
        Value::Object(record)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.id)?;
        for (k, v) in &self.params {
            writeln!(f, "param.{k}: {v}")?;
        }
        writeln!(f, "checked: {}", self.checked)?;
        writeln!(f, "mismatches: {}", self.mismatch_count)?;
        for m in &self.mismatches {
            writeln!(
                f,
                "mismatch: n={} expected={} actual={}",
                m.n, m.expected, m.actual
            )?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        writeln!(f, "elapsed_ms: {}", self.elapsed.as_millis())?;
        write!(f, "result: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Accumulates checks for one [`VerificationReport`].
pub struct ReportBuilder {
    id: String,
    params: BTreeMap<String, Value>,
    cap: usize,
    checked: u64,
    mismatch_count: u64,
    mismatches: Vec<Mismatch>,
    notes: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(id: impl Into<String>) -> Self {
        ReportBuilder {
            id: id.into(),
            params: BTreeMap::new(),
            cap: DEFAULT_CAP,
            checked: 0,
            mismatch_count: 0,
            mismatches: Vec::new(),
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), json!(value));
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap.max(1);
        self
    }

    pub fn check(
        &mut self,
        ok: bool,
        n: i64,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.fail(n, expected(), actual());
        }
    }

    pub fn fail(&mut self, n: i64, expected: String, actual: String) {
        self.mismatch_count += 1;
        if self.mismatches.len() < self.cap {
            self.mismatches.push(Mismatch {
                n,
                expected,
                actual,
            });
        }
    }

    pub fn count(&mut self, passed: u64) {
        self.checked += passed;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(mut self) -> VerificationReport {
        self.mismatches.sort_by_key(|m| m.n);
        VerificationReport {
            id: self.id,
            params: self.params,
            checked: self.checked,
            pass: self.mismatch_count == 0,
            mismatch_count: self.mismatch_count,
            mismatches: self.mismatches,
            notes: self.notes,
            elapsed: self.started.elapsed(),
        }
    }
}
