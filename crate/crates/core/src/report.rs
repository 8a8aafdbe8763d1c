//! Checklist reports shared by the verifiers and bound calculators.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Taken on trust from the caller; not checked here.
    Assumed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Assumed => "assumed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub item: String,
    pub status: Status,
    pub evidence: String,
}

impl CheckItem {
    pub fn new(item: impl Into<String>, passed: bool, evidence: impl Into<String>) -> Self {
        CheckItem {
            item: item.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            evidence: evidence.into(),
        }
    }

    pub fn assumed(item: impl Into<String>, evidence: impl Into<String>) -> Self {
        CheckItem {
            item: item.into(),
            status: Status::Assumed,
            evidence: evidence.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Line-oriented `item: pass|fail` report with free-form notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub items: Vec<CheckItem>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn item(&self, prefix: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.item.starts_with(prefix))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.subject)?;
        for i in &self.items {
            writeln!(f, "{}: {}", i.item, i.status)?;
            if !i.evidence.is_empty() {
                writeln!(f, "  {}", i.evidence)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
