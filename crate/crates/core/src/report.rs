//! Verification reports: every check records its failing identities with
//! both sides printed.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Uncertified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Uncertified => "uncertified",
        })
    }
}

/// One instance of an identity that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Which identity or construction the check certifies.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            note: None,
        }
    }

    /// Record `lhs == rhs`, keeping a witness when it fails.
    pub fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        identity: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(identity, lhs.to_string(), rhs.to_string());
        false
    }

    pub fn fail(
        &mut self,
        identity: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.status = Status::Fail;
        self.witnesses.push(Witness {
            identity: identity.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        });
    }

    pub fn expect(
        &mut self,
        identity: impl Into<String>,
        holds: bool,
        detail: impl FnOnce() -> (String, String),
    ) {
        if !holds {
            let (l, r) = detail();
            self.fail(identity, l, r);
        }
    }

    pub fn uncertified(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Uncertified;
        }
        self.note = Some(note.into());
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

/// An ordered list of check records.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(record: CheckRecord) -> Self {
        Report {
            records: vec![record],
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// True iff every record passed; an empty report passes.
    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Short summary of the first few failures, for error messages.
    pub fn failure_summary(&self) -> String {
        let mut parts = Vec::new();
        for rec in self.failures() {
            match rec.witnesses.first() {
                Some(w) => parts.push(format!(
                    "{}: {} ({} != {})",
                    rec.name, w.identity, w.lhs, w.rhs
                )),
                None => parts.push(rec.name.clone()),
            }
        }
        parts.join("; ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rec in &self.records {
            writeln!(f, "[{}] {} ({})", rec.status, rec.name, rec.anchor)?;
            if let Some(note) = &rec.note {
                writeln!(f, "    note: {note}")?;
            }
            for w in &rec.witnesses {
                writeln!(f, "    {}", w.identity)?;
                writeln!(f, "      lhs: {}", w.lhs)?;
                writeln!(f, "      rhs: {}", w.rhs)?;
            }
        }
        Ok(())
    }
}
