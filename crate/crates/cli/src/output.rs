//! Report envelopes and their JSON and text renderings.

use lsakit::{CheckRecord, Status};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::instance::Instance;
use crate::suites::Outcome;

pub const TOOL: &str = "lsakit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Serialize)]
pub struct InstanceInfo {
    pub name: String,
    pub file: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub instance: InstanceInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub status: Status,
    pub records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub results: Map<String, Value>,
}

/// Several envelopes from one `verify-all` run.
#[derive(Debug, Serialize)]
pub struct Bundle {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub status: Status,
    pub reports: Vec<Envelope>,
}

/// Fail beats uncertified beats pass.
pub fn overall<'a>(statuses: impl IntoIterator<Item = &'a Status>) -> Status {
    let mut out = Status::Pass;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Uncertified => out = Status::Uncertified,
            Status::Pass => {}
        }
    }
    out
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

impl Envelope {
    pub fn new(
        command: &str,
        inst: &Instance,
        outcome: Outcome,
        timestamp: Option<String>,
    ) -> Self {
        let status = overall(outcome.records.iter().map(|r| &r.status));
        Envelope {
            tool: TOOL,
            version: VERSION,
            command: command.to_string(),
            instance: InstanceInfo {
                name: inst.name.clone(),
                file: inst.file.clone(),
                sha256: inst.digest.clone(),
            },
            timestamp,
            status,
            records: outcome.records,
            results: outcome.results,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}: {} {} (sha256 {})\n",
            self.tool, self.version, self.command, self.instance.file, self.instance.sha256
        );
        if let Some(t) = &self.timestamp {
            out.push_str(&format!("timestamp: {t}\n"));
        }
        let report = lsakit::Report {
            records: self.records.clone(),
        };
        out.push_str(&report.to_string());
        if !self.results.is_empty() {
            out.push_str("results:\n");
            for (key, value) in &self.results {
                out.push_str(&format!("  {key}: {value}\n"));
            }
        }
        out.push_str(&format!("status: {}\n", self.status));
        out
    }
}

impl Bundle {
    pub fn new(command: &str, reports: Vec<Envelope>, timestamp: Option<String>) -> Self {
        let status = overall(reports.iter().map(|r| &r.status));
        Bundle {
            tool: TOOL,
            version: VERSION,
            command: command.to_string(),
            timestamp,
            status,
            reports,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        out.push_str(&format!("overall status: {}\n", self.status));
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
