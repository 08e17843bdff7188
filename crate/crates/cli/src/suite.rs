//! Batch runner for manifests of CLI invocations with expected verdicts.

use std::fmt::Write;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use refmon_core::SearchBound;
use refmon_lab::Verdict;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::output::{bound_line, header, Body, Outcome};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub cases: Vec<Case>,
}

/// One invocation: `command` is the argument list after `refmon`, bounds included.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub name: String,
    pub command: Vec<String>,
    pub expect: Verdict,
    /// The claim the case reproduces.
    pub comment: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub comment: String,
    pub command: Vec<String>,
    pub expect: Verdict,
    /// `None` when the command failed to run.
    pub got: Option<Verdict>,
    pub ok: bool,
    pub bound: Option<SearchBound>,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub header: String,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn summary(&self) -> String {
        let mut out = format!("# {}\n", self.header);
        for c in &self.cases {
            let got = c.got.map_or("error".to_string(), |v| v.to_string());
            let mark = if c.ok { "PASS" } else { "FAIL" };
            write!(out, "{mark} {}: expected {}, got {got}", c.name, c.expect).unwrap();
            if let Some(b) = &c.bound {
                write!(out, " ({})", bound_line(b)).unwrap();
            }
            out.push('\n');
            if !c.ok {
                writeln!(out, "    {}", c.summary).unwrap();
            }
        }
        writeln!(out, "{} passed, {} failed", self.passed, self.failed).unwrap();
        out
    }
}

pub fn parse_manifest(path: &str, text: &str) -> Result<Manifest, CliError> {
    let bad = |message: String| CliError::File {
        path: path.to_string(),
        message,
    };
    let m: Manifest = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    for c in &m.cases {
        if c.comment.trim().is_empty() {
            return Err(bad(format!("case `{}` has no comment", c.name)));
        }
        if c.command.is_empty() {
            return Err(bad(format!("case `{}` has no command", c.name)));
        }
        if c.command[0] == "suite" {
            return Err(bad(format!("case `{}` runs a suite", c.name)));
        }
    }
    Ok(m)
}

fn run_case(
    c: &Case,
    runner: &(impl Fn(&[String]) -> Result<Outcome, CliError> + Sync),
) -> CaseResult {
    let (got, bound, summary) = match runner(&c.command) {
        Ok(o) => (Some(o.verdict), o.bound(), o.summary()),
        Err(e) => (None, None, format!("error: {e}")),
    };
    CaseResult {
        name: c.name.clone(),
        comment: c.comment.clone(),
        command: c.command.clone(),
        expect: c.expect,
        got,
        ok: got == Some(c.expect),
        bound,
        summary,
    }
}

/// Runs every case, several at a time, and reports them in manifest order.
pub fn run_suite(
    m: &Manifest,
    runner: impl Fn(&[String]) -> Result<Outcome, CliError> + Sync,
) -> Outcome {
    let start = Instant::now();
    let results: Vec<Mutex<Option<CaseResult>>> =
        m.cases.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(m.cases.len());
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(c) = m.cases.get(i) else { break };
                *results[i].lock().expect("unpoisoned") = Some(run_case(c, &runner));
            });
        }
    });
    let cases: Vec<CaseResult> = results
        .into_iter()
        .map(|r| r.into_inner().expect("unpoisoned").expect("every case ran"))
        .collect();
    let passed = cases.iter().filter(|c| c.ok).count();
    let report = SuiteReport {
        header: header("suite", start.elapsed().as_millis()),
        passed,
        failed: cases.len() - passed,
        cases,
    };
    Outcome {
        verdict: if report.failed == 0 {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        body: Body::Suite(report),
    }
}

/// Writes the JSON report to `path` and the text summary next to it with extension `txt`.
pub fn write_report(report: &SuiteReport, path: &Path) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let mut json = serde_json::to_string_pretty(report).expect("reports serialize");
    json.push('\n');
    fs::write(path, json).map_err(io)?;
    fs::write(path.with_extension("txt"), report.summary()).map_err(io)
}
