//! Verification reports and their JSON, CSV and plain-text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Passed, but only because everything vanishes (e.g. zero pairing).
    DegeneratePass,
    /// Not run because a precondition did not hold; does not count as failure.
    Skipped,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DegeneratePass => "degenerate-pass",
            Status::Skipped => "skipped",
        }
    }

    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub id: String,
    /// The identity being checked, in words or formula.
    pub identity: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl Case {
    pub fn new(
        id: impl Into<String>,
        identity: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        pass: bool,
    ) -> Self {
        Case {
            id: id.into(),
            identity: identity.into(),
            expected: expected.into(),
            observed: observed.into(),
            status: Status::from_bool(pass),
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn pass(&self) -> bool {
        !self.status.is_failure()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub notes: Vec<String>,
}

impl Report {
    /// Builds a report with cases sorted by id.
    pub fn new(suite: impl Into<String>, mut cases: Vec<Case>, notes: Vec<String>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        Report { suite: suite.into(), cases, notes }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary { total: self.cases.len(), ..Summary::default() };
        for c in &self.cases {
            match c.status {
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
                Status::Pass | Status::DegeneratePass => s.passed += 1,
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(Case::pass)
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(|c| json!({
                "id": c.id,
                "identity": c.identity,
                "expected": c.expected,
                "observed": c.observed,
                "pass": c.pass(),
                "status": c.status.tag(),
            })).collect::<Vec<_>>(),
            "summary": summary_json(&s),
            "notes": self.notes,
        })
    }
}

fn summary_json(s: &Summary) -> Value {
    json!({"total": s.total, "passed": s.passed, "failed": s.failed, "skipped": s.skipped})
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}, expected json, csv or text"))),
        }
    }
}

/// Renders one or more reports. A single report renders on its own; several
/// are wrapped with an overall summary.
pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => render_json(reports),
        Format::Csv => render_csv(reports),
        Format::Text => render_text(reports),
    }
}

fn render_json(reports: &[Report]) -> String {
    let value = if let [single] = reports {
        single.to_json()
    } else {
        let mut total = Summary::default();
        for r in reports {
            let s = r.summary();
            total.total += s.total;
            total.passed += s.passed;
            total.failed += s.failed;
            total.skipped += s.skipped;
        }
        json!({
            "suites": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            "summary": summary_json(&total),
        })
    };
    let mut out = serde_json::to_string_pretty(&value).expect("reports serialize");
    out.push('\n');
    out
}

fn render_csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "id", "identity", "expected", "observed", "pass", "status"])
        .expect("in-memory write");
    for r in reports {
        for c in &r.cases {
            w.write_record([
                r.suite.as_str(),
                &c.id,
                &c.identity,
                &c.expected,
                &c.observed,
                if c.pass() { "true" } else { "false" },
                c.status.tag(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let s = r.summary();
        let _ = writeln!(
            out,
            "== {} ({} cases: {} passed, {} failed, {} skipped)",
            r.suite, s.total, s.passed, s.failed, s.skipped
        );
        let id_w = r.cases.iter().map(|c| c.id.chars().count()).max().unwrap_or(2).max(2);
        let exp_w = r.cases.iter().map(|c| c.expected.chars().count()).max().unwrap_or(8).clamp(8, 40);
        for c in &r.cases {
            let _ = writeln!(
                out,
                "{:<10} {:<id_w$}  expected {:<exp_w$}  observed {}",
                c.status.tag().split('-').next().unwrap_or("").to_uppercase(),
                c.id,
                c.expected,
                c.observed,
            );
        }
        for n in &r.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out.push('\n');
    }
    out
}
