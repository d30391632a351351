//! Structured check results shared by every audit and the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// A concrete piece of evidence for a failure, usually a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_vector: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn labelled(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            basis_index: None,
            basis_vector: None,
            detail: None,
        }
    }

    pub fn at_basis(label: impl Into<String>, index: usize, vector: impl ToString) -> Self {
        Self {
            basis_index: Some(index),
            basis_vector: Some(vector.to_string()),
            ..Self::labelled(label)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// One relation family or sub-property within a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SubCheck {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            instances: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    /// Records one instance; a failing instance must come with a witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok {
            self.status = Status::Fail;
            self.witnesses.push(witness());
        }
    }

    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            status: Status::Skipped,
            note: Some(note.into()),
            ..Self::new(name)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub dimensions: BTreeMap<String, u64>,
    #[serde(default)]
    pub witnesses: Vec<Witness>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub subchecks: Vec<SubCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            check: check.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            dimensions: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            subchecks: Vec::new(),
            wall_time_ms: None,
            tool_version: TOOL_VERSION.to_string(),
            seed: None,
        }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut rep = Self::new(check);
        rep.status = Status::Skipped;
        rep.notes.push(reason.into());
        rep
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn dim(&mut self, key: &str, value: impl TryInto<u64>) {
        self.dimensions
            .insert(key.to_string(), value.try_into().unwrap_or(u64::MAX));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, sub: SubCheck) {
        self.subchecks.push(sub);
    }

    /// Fails the report directly with a top-level witness.
    pub fn fail(&mut self, witness: Witness) {
        self.status = Status::Fail;
        self.witnesses.push(witness);
    }

    /// Derives the final status: fail if any subcheck or top-level witness failed.
    pub fn finish(mut self) -> Self {
        if self.status == Status::Skipped {
            return self;
        }
        if self.subchecks.iter().any(|s| s.status == Status::Fail) {
            self.status = Status::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{:<7} {} [{}]",
            self.status.as_str().to_uppercase(),
            self.check,
            params.join(" ")
        );
        if !self.dimensions.is_empty() {
            let dims: Vec<String> = self.dimensions.iter().map(|(k, v)| format!("{k}={v}")).collect();
            line.push_str(&format!(" dims: {}", dims.join(" ")));
        }
        if self.status == Status::Skipped {
            if let Some(reason) = self.notes.first() {
                line.push_str(&format!(" ({reason})"));
            }
        }
        if let Some(ms) = self.wall_time_ms {
            line.push_str(&format!(" ({ms} ms)"));
        }
        line
    }
}

/// The document written to disk: a schema tag plus the reports in run order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: u32,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub status: Status,
    pub reports: Vec<CheckReport>,
}

impl ReportFile {
    pub fn new(reports: Vec<CheckReport>, seed: Option<u64>) -> Self {
        let status = if reports.iter().all(CheckReport::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            schema: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            seed,
            status,
            reports,
        }
    }

    pub fn failed_count(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed()).count()
    }
}
