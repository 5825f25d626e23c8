//! The verification suite: named checks, run in parallel, reported in
//! check-id order.

mod checks;

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use tautring::chern::DEFAULT_TRUNCATION;
use tautring::RingPresentation;

use crate::error::{CliError, CliResult};

pub use checks::all_checks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "literature")]
    Literature,
    #[serde(rename = "derived oracle")]
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Literature => "literature",
            Provenance::Derived => "derived oracle",
        }
    }
}

/// Inputs shared by every check.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub trunc: u32,
    /// The genus-6 presentation examined by `m6-presentation` and
    /// `looijenga-vanishing`.
    pub presentation: Arc<RingPresentation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trunc: DEFAULT_TRUNCATION,
            presentation: Arc::new(RingPresentation::m6()),
        }
    }
}

/// Accumulates labelled sub-assertions of one check.
#[derive(Default)]
pub struct Tally {
    parts: Vec<(String, String, String, bool)>,
}

impl Tally {
    pub fn check(&mut self, label: &str, computed: impl ToString, expected: impl ToString) {
        let (c, e) = (computed.to_string(), expected.to_string());
        let ok = c == e;
        self.parts.push((label.to_string(), c, e, ok));
    }

    /// Records a sub-assertion whose truth is decided by the caller.
    pub fn claim(&mut self, label: &str, computed: impl ToString, expected: impl ToString, ok: bool) {
        self.parts.push((label.to_string(), computed.to_string(), expected.to_string(), ok));
    }

    fn finish(self) -> Outcome {
        let join = |f: fn(&(String, String, String, bool)) -> &String| {
            self.parts
                .iter()
                .map(|p| format!("{}={}", p.0, f(p)))
                .collect::<Vec<_>>()
                .join("; ")
        };
        Outcome {
            pass: !self.parts.is_empty() && self.parts.iter().all(|p| p.3),
            failed: self.parts.iter().filter(|p| !p.3).map(|p| p.0.clone()).collect(),
            computed: join(|p| &p.1),
            expected: join(|p| &p.2),
        }
    }
}

pub struct Outcome {
    pub pass: bool,
    pub failed: Vec<String>,
    pub computed: String,
    pub expected: String,
}

pub type CheckFn = fn(&SuiteConfig, &mut Tally) -> tautring::Result<()>;

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub provenance: Provenance,
    pub run: CheckFn,
}

impl Check {
    pub fn execute(&self, cfg: &SuiteConfig) -> ReportEntry {
        let start = Instant::now();
        let mut tally = Tally::default();
        let result = (self.run)(cfg, &mut tally);
        let mut outcome = tally.finish();
        if let Err(e) = result {
            outcome.pass = false;
            if !outcome.computed.is_empty() {
                outcome.computed.push_str("; ");
            }
            outcome.computed.push_str(&format!("error={e}"));
            outcome.failed.push("error".into());
        }
        ReportEntry {
            check_id: self.id.to_string(),
            anchor: self.anchor.to_string(),
            status: if outcome.pass { Status::Pass } else { Status::Fail },
            computed: outcome.computed,
            expected: outcome.expected,
            provenance: self.provenance,
            millis: start.elapsed().as_millis() as u64,
            failed_parts: outcome.failed,
        }
    }
}

/// One line of the machine-readable report. Field order is the schema.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub millis: u64,
    /// Labels of the sub-assertions that failed; not part of the schema.
    #[serde(skip)]
    pub failed_parts: Vec<String>,
}

impl ReportEntry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<&str> = all_checks().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

/// Runs the selected checks (all when `only` is `None`) in parallel and
/// returns their reports sorted by check id.
pub fn run_suite(only: Option<&[String]>, cfg: &SuiteConfig) -> CliResult<Vec<ReportEntry>> {
    let checks = all_checks();
    let selected: Vec<&Check> = match only {
        None => checks.iter().collect(),
        Some(names) => {
            let mut out = Vec::new();
            for n in names {
                let c = checks
                    .iter()
                    .find(|c| c.id == n)
                    .ok_or_else(|| CliError::UnknownCheck(n.clone()))?;
                if !out.iter().any(|x: &&Check| x.id == c.id) {
                    out.push(c);
                }
            }
            out
        }
    };
    let mut report: Vec<ReportEntry> = selected.par_iter().map(|c| c.execute(cfg)).collect();
    report.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(report)
}

/// 0 when every check passed, 1 otherwise.
pub fn exit_code(report: &[ReportEntry]) -> i32 {
    if report.iter().all(ReportEntry::passed) {
        0
    } else {
        1
    }
}

pub fn render_text(report: &[ReportEntry]) -> String {
    let mut out = String::new();
    for e in report {
        let tag = if e.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {} ({} ms)", e.check_id, e.millis);
        let _ = writeln!(out, "    anchor:   {}", e.anchor);
        let _ = writeln!(out, "    computed: {}", e.computed);
        let _ = writeln!(out, "    expected: {} [{}]", e.expected, e.provenance.as_str());
    }
    let passed = report.iter().filter(|e| e.passed()).count();
    let _ = writeln!(out, "{passed}/{} checks passed", report.len());
    out
}

/// One JSON object per line, in report order.
pub fn render_json(report: &[ReportEntry]) -> String {
    let mut out = String::new();
    for e in report {
        out.push_str(&serde_json::to_string(e).expect("report entries serialize"));
        out.push('\n');
    }
    out
}
