//! The binary's exit codes, formats, conversions and suite runner.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn refmon(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_refmon"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn data(name: &str) -> String {
    format!("data/{name}")
}

fn without_header(text: &str) -> String {
    text.lines()
        .filter(|l| !l.contains("unix time"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(refmon(&["wild", "eq", "x0 + y0", "x0 + z0"]).code, 0);
    assert_eq!(refmon(&["wild", "eq", "y0", "z0"]).code, 1);
    assert_eq!(
        refmon(&["check", "Z(2)", "--prop", "WILD", "--max-degree", "3"]).code,
        2
    );
    let bad = refmon(&["check", "Q(2)"]);
    assert_eq!(bad.code, 3);
    assert!(bad.stderr.contains("unknown monoid"), "{}", bad.stderr);
    assert_eq!(refmon(&["check", "M(1)", "--prop", "NOPE"]).code, 3);
    assert_eq!(refmon(&["frobnicate"]).code, 3);
    assert_eq!(refmon(&["--help"]).code, 0);
}

#[test]
fn mixed_verdicts_combine() {
    let args = [
        "check",
        "P2_2",
        "--prop",
        "REFINEMENT,CANCELLATIVE",
        "--max-degree",
        "4",
    ];
    assert_eq!(refmon(&args).code, 1);
    let args = [
        "check",
        "Z(2)",
        "--prop",
        "CANCELLATIVE,WILD",
        "--max-degree",
        "3",
    ];
    assert_eq!(refmon(&args).code, 2);
}

#[test]
fn outputs_always_state_the_bound() {
    let text = refmon(&["check", "M(1)", "--prop", "SEPARATIVE", "--max-degree", "3"]).stdout;
    assert!(
        text.lines().skip(1).all(|l| l.contains("maxDegree 3")),
        "{text}"
    );
    let text = refmon(&["eq", "M0", "x0 + y0", "x0 + z0", "--max-degree", "5"]).stdout;
    assert!(
        text.contains("bound: maxDegree 5, maxCoeff 5, maxClassSize 20000"),
        "{text}"
    );
    let text = refmon(&["wild", "leq", "y0", "x0"]).stdout;
    assert!(text.contains("bound: exact arithmetic"), "{text}");
}

#[test]
fn check_json_schema() {
    let r = refmon(&[
        "check",
        "Mbar(1)",
        "--prop",
        "CANCELLATIVE,STABLY_FINITE",
        "--max-degree",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["header"].as_str().unwrap().starts_with("refmon "));
    assert_eq!(v["verdict"], "Fails");
    assert_eq!(v["bound"]["max_degree"], 4);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["property"], "CANCELLATIVE");
    assert_eq!(reports[0]["verdict"], "Fails");
    assert!(!reports[0]["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(reports[1]["verdict"], "Holds");
    assert_eq!(reports[1]["undecided"], 0);
    for key in ["monoid", "bound", "instances"] {
        assert!(reports[1].get(key).is_some(), "{key}");
    }
}

#[test]
fn answers_in_json() {
    let r = refmon(&["leq", "M0", "x0", "x0 + y0", "--format", "json"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["command"], "leq");
    assert_eq!(v["verdict"], "Holds");
    assert_eq!(v["bound"]["max_class_size"], 20000);
    let r = refmon(&[
        "wild", "refine", "x0", "y1", "x1 + y1", "y1", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["verdict"], "Holds");
    assert!(v["bound"].is_null());
}

#[test]
fn identical_runs_give_identical_reports() {
    for format in ["text", "json"] {
        let args = [
            "check",
            "M(1)",
            "--prop",
            "all",
            "--max-degree",
            "3",
            "--format",
            format,
        ];
        let (a, b) = (refmon(&args), refmon(&args));
        assert_eq!(without_header(&a.stdout), without_header(&b.stdout));
        let headers = a.stdout.lines().filter(|l| l.contains("unix time")).count();
        assert_eq!(headers, 1);
    }
}

#[test]
fn parse_round_trips() {
    for f in ["m0.monoid", "e0c0.graph", "emitter.graph", "triangle.poset"] {
        let first = refmon(&["parse", &data(f)]);
        assert_eq!(first.code, 0, "{}", first.stderr);
        let dir = tempfile::tempdir().unwrap();
        let copy = dir.path().join(f);
        fs::write(&copy, &first.stdout).unwrap();
        let second = refmon(&["parse", copy.to_str().unwrap()]);
        assert_eq!(first.stdout, second.stdout, "{f}");
    }
}

#[test]
fn parse_errors_carry_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.graph");
    fs::write(&f, "graph G\nvertices v\narrow e v -> w\n").unwrap();
    let r = refmon(&["parse", f.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("bad.graph"), "{}", r.stderr);
    fs::write(&f, "monoid M\ngenerators a\nrelation a = b\n").unwrap();
    let r = refmon(&["parse", f.to_str().unwrap()]);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
}

#[test]
fn separated_graph_gives_m0_with_u() {
    let r = refmon(&["graph-monoid", &data("e0c0.graph")]);
    assert_eq!(
        r.stdout,
        "monoid E0C0\ngenerators u x0 y0 z0\nrelation u = x0 + y0\nrelation u = x0 + z0\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e0c0.monoid");
    let r = refmon(&[
        "graph-monoid",
        &data("e0c0.graph"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.stdout.is_empty());
    let eq = refmon(&["eq", out.to_str().unwrap(), "x0 + y0", "x0 + z0"]);
    assert_eq!(eq.code, 0, "{}", eq.stdout);
}

#[test]
fn triple_presentation_with_zcap() {
    let r = refmon(&["graph-monoid", &data("e0c0.graph"), "--zcap", "2"]);
    assert!(r.stdout.contains("relation q_e1_e2 = 0"), "{}", r.stdout);
    assert_eq!(
        refmon(&["graph-monoid", &data("e0c0.graph"), "--zcap", "0"]).code,
        3
    );
    assert_eq!(
        refmon(&["graph-monoid", &data("emitter.graph"), "--zcap", "1"]).code,
        3
    );
}

#[test]
fn tilde_graph_is_row_finite_and_presents_the_same_monoid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tilde.graph");
    let r = refmon(&[
        "tilde",
        &data("emitter.graph"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let text = fs::read_to_string(&out).unwrap();
    assert!(!text.contains("emitter"));
    let arrows: Vec<&str> = text.lines().filter(|l| l.starts_with("arrow")).collect();
    assert!(arrows.len() < 10, "{text}");
    let direct = refmon(&["graph-monoid", &data("emitter.graph"), "--tilde"]).stdout;
    let via_file = refmon(&["graph-monoid", out.to_str().unwrap()]).stdout;
    assert_eq!(direct, via_file);
}

#[test]
fn poset_presentation() {
    let r = refmon(&["poset", &data("triangle.poset")]);
    assert_eq!(r.stdout, "monoid D\ngenerators e f\nrelation e + f = f\n");
    let r = refmon(&["leq", &data("triangle.poset"), "e", "f"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(refmon(&["poset", &data("m0.monoid")]).code, 3);
}

#[test]
fn wild_calculator() {
    let r = refmon(&["wild", "add", "x1", "y1", "a1"]);
    assert!(r.stdout.contains("sum: "), "{}", r.stdout);
    let r = refmon(&["wild", "q", "y0 + a1"]);
    assert!(r.stdout.contains("q(y0 + a1) = ybar0"), "{}", r.stdout);
    assert_eq!(refmon(&["wild", "member", "ybar0", "J2bar"]).code, 0);
    assert_eq!(refmon(&["wild", "member", "y0", "J2bar"]).code, 3);
    assert_eq!(refmon(&["wild", "eq", "x0", "xbar0"]).code, 3);
    assert_eq!(refmon(&["wild", "refine", "x0", "y0", "x0", "x0"]).code, 3);
}

fn write_manifest(dir: &Path, name: &str, json: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, json).unwrap();
    p
}

#[test]
fn claims_suite_is_green() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("claims.json");
    let r = refmon(&[
        "suite",
        "suites/claims.json",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 20);
    let summary = fs::read_to_string(report.with_extension("txt")).unwrap();
    assert!(summary.ends_with("0 failed\n"));
}

#[test]
fn empty_manifest_passes_with_an_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), "empty.json", r#"{"cases": []}"#);
    let report = dir.path().join("out.json");
    let r = refmon(&[
        "suite",
        m.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 0);
}

#[test]
fn expecting_m_cancellative_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        "wrong.json",
        r#"{"cases": [
            {"name": "m-cancellative", "command": ["check", "M(1)", "--prop", "CANCELLATIVE",
             "--max-degree", "3"], "expect": "Holds", "comment": "M is not cancellative"},
            {"name": "missing", "command": ["check", "Nope(3)"], "expect": "Holds",
             "comment": "no such monoid"}
        ]}"#,
    );
    let report = dir.path().join("out.json");
    let r = refmon(&[
        "suite",
        m.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1);
    assert!(
        r.stdout
            .contains("FAIL m-cancellative: expected Holds, got Fails"),
        "{}",
        r.stdout
    );
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["failed"], 2);
    assert!(v["cases"][1]["got"].is_null());
    assert!(v["cases"][1]["summary"]
        .as_str()
        .unwrap()
        .contains("unknown monoid"));
}

#[test]
fn malformed_manifests_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = [
        r#"{"cases": [{"name": "x"}]}"#,
        r#"{"cases": [{"name": "x", "command": ["wild", "eq", "x0", "x0"], "expect": "Holds",
            "comment": ""}]}"#,
        r#"{"cases": [{"name": "x", "command": ["wild", "eq", "x0", "x0"], "expect": "Maybe",
            "comment": "c"}]}"#,
        "not json",
    ];
    for (i, text) in bad.iter().enumerate() {
        let m = write_manifest(dir.path(), &format!("bad{i}.json"), text);
        assert_eq!(refmon(&["suite", m.to_str().unwrap()]).code, 3, "{text}");
    }
    assert_eq!(refmon(&["suite", "no/such/manifest.json"]).code, 3);
}

#[test]
fn suite_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert_eq!(
            refmon(&[
                "suite",
                "suites/claims.json",
                "--report",
                p.to_str().unwrap()
            ])
            .code,
            0
        );
    }
    for ext in ["json", "txt"] {
        let read =
            |p: &PathBuf| without_header(&fs::read_to_string(p.with_extension(ext)).unwrap());
        assert_eq!(read(&a), read(&b));
    }
}
