//! End-to-end runs of the `lgc` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgc")).args(args).output().expect("binary runs")
}

fn lgc_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgc"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn gen_validate_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["poset", "lattice", "frame", "algebra"] {
        let file = format!("{kind}.json");
        let out = lgc_in(
            dir.path(),
            &["gen", "--kind", kind, "--size", "3", "--seed", "5", "-o", &file],
        );
        assert!(out.status.success(), "gen {kind}: {}", stderr(&out));
        let out = lgc_in(dir.path(), &["validate", &file]);
        assert!(out.status.success(), "validate {kind}: {}", stderr(&out));
        assert!(stdout(&out).contains(kind), "report names the type: {}", stdout(&out));
    }
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args =
        ["gen", "--kind", "algebra", "--size", "4", "--seed", "42", "--density", "0.3"];
    let a = lgc_in(dir.path(), &args);
    let b = lgc_in(dir.path(), &args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn canonical_and_complex_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let gen = lgc_in(
        dir.path(),
        &["gen", "--kind", "algebra", "--size", "3", "--seed", "9", "-o", "alg.json"],
    );
    assert!(gen.status.success(), "{}", stderr(&gen));
    let canon = lgc_in(dir.path(), &["canonical", "alg.json", "-o", "frame.json"]);
    assert!(canon.status.success(), "{}", stderr(&canon));
    let validate = lgc_in(dir.path(), &["validate", "frame.json"]);
    assert!(validate.status.success(), "{}", stderr(&validate));

    let complex = lgc_in(dir.path(), &["complex", "frame.json", "--signature", "HBGC"]);
    assert!(complex.status.success(), "{}", stderr(&complex));
    let text = stdout(&complex);
    assert!(text.contains("carrier:"));
    assert!(text.contains("join:"));
    assert!(text.contains("imp:"));
    assert!(text.contains("coimp:"));
    assert!(text.contains("upper:"));
}

#[test]
fn represent_reports_all_laws() {
    let dir = tempfile::tempdir().unwrap();
    let gen = lgc_in(
        dir.path(),
        &["gen", "--kind", "algebra", "--size", "4", "--seed", "3", "-o", "alg.json"],
    );
    assert!(gen.status.success());
    for method in ["canonical", "spatial"] {
        let out = lgc_in(dir.path(), &["represent", "alg.json", "--method", method]);
        assert!(out.status.success(), "{method}: {}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains("preserves-join"));
        assert!(!text.contains("FAIL"), "{text}");
    }
}

#[test]
fn approx_evaluates_over_the_frame_relation() {
    let dir = tempfile::tempdir().unwrap();
    // Two-point chain p <= q with R = {(q, p)}.
    fs::write(
        dir.path().join("frame.json"),
        r#"{
            "type": "frame",
            "elements": ["p", "q"],
            "order": [["p", "p"], ["p", "q"], ["q", "q"]],
            "relation": [["q", "p"]]
        }"#,
    )
    .unwrap();
    let out = lgc_in(dir.path(), &["approx", "frame.json", "--set", "p,q", "--op", "upper"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "{q}");
    // Only q has no R-predecessor, so the empty set's lower approximation
    // is {q}.
    let out = lgc_in(dir.path(), &["approx", "frame.json", "--set", "", "--op", "lower"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{q}");
    let out = lgc_in(dir.path(), &["approx", "frame.json", "--set", "zz", "--op", "upper"]);
    assert!(!out.status.success());
}

#[test]
fn check_exits_nonzero_on_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("witness.json"), lgc_core::suite::MEET_COUNTEREXAMPLE_DOC)
        .unwrap();
    let valid = lgc_in(
        dir.path(),
        &["check", "witness.json", "--identity", "f(x | y) = f(x) | f(y)"],
    );
    assert!(valid.status.success(), "{}", stderr(&valid));
    assert!(stdout(&valid).starts_with("valid"));

    let refuted = lgc_in(
        dir.path(),
        &["check", "witness.json", "--identity", "f(x & y) = f(x) & f(y)"],
    );
    assert_eq!(refuted.status.code(), Some(1));
    assert!(stdout(&refuted).contains("counterexample"));
}

#[test]
fn suite_runs_and_reports_json() {
    let out = lgc(&["suite", "galois-laws", "--count", "5", "--seed", "1", "--size", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("5/5 passed"));

    let out = lgc(&[
        "suite",
        "identity-corpus",
        "--count",
        "4",
        "--seed",
        "1",
        "--size",
        "3",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["failed"], 0);
    assert_eq!(value["total"], 5);

    let out = lgc(&["suite", "no-such-suite"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn invalid_documents_fail_validation() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.json"),
        r#"{
            "type": "poset",
            "elements": ["a", "b"],
            "order": [["a", "b"], ["b", "b"]]
        }"#,
    )
    .unwrap();
    let out = lgc_in(dir.path(), &["validate", "bad.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not reflexive"));
}

#[test]
fn carrier_bound_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let gen = lgc_in(
        dir.path(),
        &["gen", "--kind", "frame", "--size", "5", "--seed", "2", "-o", "frame.json"],
    );
    assert!(gen.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_lgc"))
        .current_dir(dir.path())
        .env("LGC_MAX_CARRIER", "3")
        .args(["complex", "frame.json"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr(&out).contains("enumeration bound is 3"), "{}", stderr(&out));
}

#[test]
fn bad_gen_specs_are_rejected() {
    let out = lgc(&["gen", "--kind", "poset", "--size", "40", "--seed", "1"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("bad instance spec"));
    let out = lgc(&["gen", "--kind", "widget", "--size", "3"]);
    assert!(!out.status.success());
}
