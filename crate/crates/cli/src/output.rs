//! Report schema and rendering.

use std::fmt::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use refmon_core::SearchBound;
use refmon_lab::{PropertyReport, Verdict};
use serde::Serialize;

use crate::suite::SuiteReport;

/// Answer to a single query (`eq`, `leq`, `refine`, `wild`).
#[derive(Debug, Clone, Serialize)]
pub struct Answer {
    pub command: String,
    pub monoid: String,
    pub query: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    /// `None` for exact arithmetic, which needs no search.
    pub bound: Option<SearchBound>,
}

/// A property report without its timing, which goes to the header.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub monoid: String,
    pub property: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub bound: SearchBound,
    pub instances: usize,
    pub undecided: usize,
}

impl From<&PropertyReport> for ReportEntry {
    fn from(r: &PropertyReport) -> Self {
        ReportEntry {
            monoid: r.monoid.clone(),
            property: r.property.clone(),
            verdict: r.verdict,
            witnesses: r.witnesses.clone(),
            bound: r.bound,
            instances: r.instances,
            undecided: r.undecided,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub header: String,
    pub verdict: Verdict,
    pub bound: SearchBound,
    pub reports: Vec<ReportEntry>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

/// A converted or canonicalized file.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub kind: String,
    pub name: String,
    pub text: String,
}

#[derive(Debug, Clone)]
pub enum Body {
    Answer(Answer),
    Check(CheckReport),
    Document(Document),
    Suite(SuiteReport),
}

/// Result of one command: the verdict that sets the exit code and what to print.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub verdict: Verdict,
    pub body: Body,
}

impl Outcome {
    pub fn answer(a: Answer) -> Self {
        Outcome {
            verdict: a.verdict,
            body: Body::Answer(a),
        }
    }

    pub fn document(kind: &str, name: &str, text: String) -> Self {
        Outcome {
            verdict: Verdict::Holds,
            body: Body::Document(Document {
                kind: kind.to_string(),
                name: name.to_string(),
                text,
            }),
        }
    }

    /// The search bound the verdict refers to, when there is one.
    pub fn bound(&self) -> Option<SearchBound> {
        match &self.body {
            Body::Answer(a) => a.bound,
            Body::Check(c) => Some(c.bound),
            _ => None,
        }
    }

    /// First line of the text rendering.
    pub fn summary(&self) -> String {
        match &self.body {
            Body::Check(c) => c
                .lines
                .iter()
                .map(|l| l.as_str())
                .collect::<Vec<_>>()
                .join(" | "),
            _ => render_text(self).lines().next().unwrap_or("").to_string(),
        }
    }
}

/// 0 when everything Holds, 1 on any Fails, 2 when something is Unknown and nothing Fails.
pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Unknown => 2,
    }
}

/// Fails dominates Unknown, which dominates Holds.
pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    verdicts
        .into_iter()
        .fold(Verdict::Holds, |acc, v| match (acc, v) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::Holds,
        })
}

pub fn bound_line(b: &SearchBound) -> String {
    format!(
        "maxDegree {}, maxCoeff {}, maxClassSize {}",
        b.max_degree, b.max_coefficient, b.max_class_size
    )
}

/// The one line that differs between identical runs.
pub fn header(command: &str, elapsed_ms: u128) -> String {
    let now = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!(
        "refmon {} {command} at unix time {now}, {elapsed_ms} ms",
        env!("CARGO_PKG_VERSION")
    )
}

pub fn render_text(o: &Outcome) -> String {
    let mut out = String::new();
    match &o.body {
        Body::Answer(a) => {
            writeln!(out, "{}: {} in {}", a.verdict, a.query, a.monoid).unwrap();
            for w in &a.witnesses {
                writeln!(out, "  {w}").unwrap();
            }
            match &a.bound {
                Some(b) => writeln!(out, "  bound: {}", bound_line(b)).unwrap(),
                None => writeln!(out, "  bound: exact arithmetic").unwrap(),
            }
        }
        Body::Check(c) => {
            writeln!(out, "# {}", c.header).unwrap();
            for l in &c.lines {
                writeln!(out, "{l}").unwrap();
            }
            writeln!(out, "overall {} ({})", c.verdict, bound_line(&c.bound)).unwrap();
        }
        Body::Document(d) => out.push_str(&d.text),
        Body::Suite(s) => out.push_str(&s.summary()),
    }
    out
}

pub fn render_json(o: &Outcome) -> String {
    let mut s = match &o.body {
        Body::Answer(a) => serde_json::to_string_pretty(a),
        Body::Check(c) => serde_json::to_string_pretty(c),
        Body::Document(d) => serde_json::to_string_pretty(d),
        Body::Suite(s) => serde_json::to_string_pretty(s),
    }
    .expect("reports serialize");
    s.push('\n');
    s
}
