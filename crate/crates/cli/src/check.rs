//! `check`: property reports over a resolved monoid.

use std::str::FromStr;
use std::time::Instant;

use refmon_core::SearchBound;
use refmon_lab::{
    check_property, further_tame_checks, tameness_evidence, wildness_certificate, PropertyId,
    PropertyReport,
};

use crate::error::CliError;
use crate::output::{combine, header, Body, CheckReport, Outcome, ReportEntry};
use crate::subject::Subject;
use crate::with_oracle;

/// A property of the lab or one of the wildness reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Property(PropertyId),
    Wild,
    TameEvidence,
    FurtherTame,
}

/// Comma-separated ids; `all` expands to every property.
pub fn parse_checks(list: &str) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match id.to_ascii_uppercase().replace('-', "_").as_str() {
            "ALL" => out.extend(PropertyId::ALL.iter().map(|&p| Check::Property(p))),
            "WILD" => out.push(Check::Wild),
            "TAME_EVIDENCE" => out.push(Check::TameEvidence),
            "FURTHER_TAME" => out.push(Check::FurtherTame),
            _ => out.push(Check::Property(PropertyId::from_str(id)?)),
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no property ids given".to_string()));
    }
    Ok(out)
}

pub fn run_checks(s: &Subject, checks: &[Check], b: &SearchBound) -> Vec<PropertyReport> {
    with_oracle!(s, o => {
        let mut out = Vec::new();
        for c in checks {
            match c {
                Check::Property(p) => out.push(check_property(o, *p, b).report),
                Check::Wild => out.push(wildness_certificate(o, b)),
                Check::TameEvidence => out.push(tameness_evidence(o, b)),
                Check::FurtherTame => {
                    let (one, two) = further_tame_checks(o, b);
                    out.extend([one.report, two.report]);
                }
            }
        }
        out
    })
}

pub fn check(s: &Subject, checks: &[Check], b: &SearchBound) -> Outcome {
    let start = Instant::now();
    let reports = run_checks(s, checks, b);
    let verdict = combine(reports.iter().map(|r| r.verdict));
    let report = CheckReport {
        header: header("check", start.elapsed().as_millis()),
        verdict,
        bound: *b,
        lines: reports.iter().map(|r| r.line()).collect(),
        reports: reports.iter().map(ReportEntry::from).collect(),
    };
    Outcome {
        verdict,
        body: Body::Check(report),
    }
}
