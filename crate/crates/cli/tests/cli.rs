use std::path::PathBuf;
use std::process::{Command, Output};

use knotproj::explore::{ClassCertificate, ClassResult, Verdict};
use knotproj::InvariantReport;
use serde_json::Value;

fn knotproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotproj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = knotproj(&all);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn corpus_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("knotproj-{}-{name}.txt", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn trefoil_report() {
    let v = json(&["invariants", "a b c a b c"]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["X"], 3);
    assert_eq!(v["X_mod3"], 0);
    assert_eq!(v["tr"], 2);
    assert_eq!(v["H"], 0);
    assert_eq!(v["trefoil_summands"], 1);
}

#[test]
fn empty_word_report() {
    let v = json(&["invariants", ""]);
    for key in ["n", "X", "X_mod3", "tr", "H"] {
        assert_eq!(v[key], 0, "{key}");
    }
}

#[test]
fn report_json_round_trips() {
    let v = json(&["invariants", "a b c a d d b c e e"]);
    let r: InvariantReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&r).unwrap(), v);
}

#[test]
fn exit_codes() {
    let out = knotproj(&["invariants", "a b c d a b c d"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("not realizable on S²"));
    assert!(stdout(&out).is_empty());

    let out = knotproj(&["invariants", "a b a"]);
    assert_eq!(out.status.code(), Some(2));

    let out = knotproj(&["verify", "unknown"]);
    assert_eq!(out.status.code(), Some(2));

    let out = knotproj(&["moves", "apply", "a a", "--site", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_reports() {
    let v = json(&["invariants"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 17);
    let t = rows.iter().find(|r| r["name"] == "3_1").unwrap();
    assert_eq!((t["tr"].as_u64(), t["X"].as_u64()), (Some(2), Some(3)));
}

#[test]
fn table_rows_and_edges() {
    let v = json(&["table"]);
    let rows = v["rows"].as_array().unwrap();
    let key = |r: &Value| {
        (
            r["n"].as_u64().unwrap(),
            r["canonical"].as_str().unwrap().to_string(),
        )
    };
    assert!(rows.windows(2).all(|p| key(&p[0]) <= key(&p[1])));
    let t = &rows[0];
    assert_eq!(
        (
            t["name"].as_str(),
            t["n"].as_u64(),
            t["tr"].as_u64(),
            t["X"].as_u64()
        ),
        (Some("3_1"), Some(3), Some(2), Some(3))
    );
    let edges = v["edges"].as_array().unwrap();
    assert!(edges
        .iter()
        .any(|e| e["from"] == "3_1" && e["to"] == "4_1" && e["moves"][0] == "R3Weak"));
}

#[test]
fn table_of_empty_corpus_is_header_only() {
    let path = corpus_file("empty", "# nothing here\n");
    let out = knotproj(&["table", "--corpus", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn corpus_errors_name_the_line() {
    let path = corpus_file("dup", "3_1: a b c a b c\n\n3_1: a a\n");
    let out = knotproj(&["table", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(
        err.contains(":3:") && err.contains("first on line 1"),
        "{err}"
    );

    let path = corpus_file("flat", "x: a b a b\n");
    let out = knotproj(&["invariants", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn suites_pass() {
    for suite in ["parity", "bracket"] {
        let v = json(&["verify", suite]);
        assert_eq!(v["pass"], true, "{suite}");
        assert!(v["counterexample"].is_null());
    }
    let v = json(&["verify", "twist", "--max-n", "4"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["tr"] == 2));
    let v = json(&["verify", "deltas", "--seed", "7", "--max-n", "6"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn move_application_prints_deltas() {
    let out = knotproj(&["moves", "list", "a b c a b c"]);
    assert!(stdout(&out).contains("6: R3s- (3b) on {a,b,c}"));
    let v = json(&["moves", "apply", "a b c a b c", "--site", "6"]);
    assert_eq!(v["canonical"], "a a b b c c");
    assert_eq!(
        (
            v["delta_x"].as_i64(),
            v["delta_tr"].as_i64(),
            v["delta_h"].as_i64()
        ),
        (Some(-3), Some(-2), Some(0))
    );
}

#[test]
fn explore_commands() {
    let v = json(&["explore", "class", "", "--moves", "r1", "--max-n", "2"]);
    let class: ClassResult = serde_json::from_value(v).unwrap();
    assert_eq!(class.words.len(), 3);
    assert!(class.complete);

    let t1 = "a b c a b c";
    let t2 = "a b c d b a d c";
    let v = json(&["explore", "equiv", t1, t2, "--moves", "strong"]);
    let cert: ClassCertificate = serde_json::from_value(v).unwrap();
    assert_eq!(cert.verdict, Verdict::Inequivalent);
    assert_eq!(cert.separation.unwrap().invariant, "X_mod3");

    let v = json(&[
        "explore", "equiv", t1, t2, "--moves", "weak", "--max-n", "5",
    ]);
    let cert: ClassCertificate = serde_json::from_value(v).unwrap();
    assert_eq!(cert.verdict, Verdict::Equivalent);
    assert!(cert.path.len() <= 2);
    cert.replay(&t1.parse().unwrap(), &t2.parse().unwrap())
        .unwrap();

    let v = json(&["explore", "family", "T", "5"]);
    let xs: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["X"].as_u64().unwrap())
        .collect();
    assert_eq!(xs, vec![3, 4, 7, 8, 11]);
    assert_eq!(
        knotproj(&["explore", "family", "Q", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn knot_commands() {
    assert_eq!(stdout(&knotproj(&["knots", "det", "a b c a b c"])), "3\n");
    let v = json(&["knots", "bracket", "a a"]);
    assert_eq!(
        v["normalized"],
        json(&["knots", "bracket", ""])["normalized"]
    );
    let out = knotproj(&["knots", "bracket", "a b c a b c"]);
    assert!(stdout(&out).contains("bracket    -7:1 -3:-1 5:-1"));
    let v = json(&["knots", "resolve", "a b c a b c"]);
    assert_eq!(v["writhe"], 3);
}
