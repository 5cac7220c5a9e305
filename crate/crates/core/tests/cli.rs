mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use prelie::algebra::dual_representation;
use prelie::document::parse_document;
use prelie::operators::is_o_operator;
use prelie::search::{search, Execution, Grid, Target};
use serde_json::Value;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn prelie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prelie")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn a2() -> String {
    fixture_path("a2_phn").display().to_string()
}

#[test]
fn pre_lie_check_passes() {
    let out = prelie(&["check", &a2(), "--pre-lie"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1/1 checks passed"));
}

#[test]
fn non_nijenhuis_operator_fails_with_witness() {
    let out = prelie(&["check", &a2(), "--nijenhuis", "N_bad"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(e1,e1)"), "{}", stdout(&out));
}

#[test]
fn json_records_carry_witness_only_on_failure() {
    let out = prelie(&["--format", "json", "check", &a2(), "--nijenhuis", "N", "--nijenhuis", "N_bad"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 2);
    for r in records {
        assert!(r["check"].is_string() && r["reference"].is_string());
        let failed = r["result"] == "fail";
        assert_eq!(failed, r.get("witness").is_some());
    }
}

#[test]
fn corrupted_file_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(fixture_path("a2_phn")).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let out = prelie(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line") && err.contains("column"), "{err}");
}

#[test]
fn unknown_names_are_input_errors() {
    assert_eq!(prelie(&["check", &a2(), "--nijenhuis", "missing"]).status.code(), Some(2));
    assert_eq!(prelie(&["check", &a2(), "--rep", "nonexistent"]).status.code(), Some(2));
    assert_eq!(prelie(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn o_operator_matches_library() {
    let doc = common::fixture("a2_phn");
    let rep = dual_representation(&doc.algebra);
    for op in ["N", "N_bad"] {
        let expected = is_o_operator(&doc.algebra, &rep, doc.operator(op).unwrap()).unwrap().holds;
        let out = prelie(&["check", &a2(), "--o-operator", op, "--rep", "dual"]);
        assert_eq!(out.status.code(), Some(if expected { 0 } else { 1 }), "{op}");
    }
}

#[test]
fn rota_baxter_takes_weight() {
    let path = fixture_path("rb_plane_a").display().to_string();
    assert_eq!(prelie(&["check", &path, "--rota-baxter", "R", "--weight", "0"]).status.code(), Some(0));
    assert_eq!(prelie(&["check", &path, "--rota-baxter", "R", "--weight", "1/2"]).status.code(), Some(1));
}

#[test]
fn structure_checks_on_fixtures() {
    let pk = fixture_path("para_kahler_lie").display().to_string();
    assert_eq!(prelie(&["check", &pk, "--para-kahler", "omega", "N1"]).status.code(), Some(0));
    let pq = fixture_path("para_kahler_prelie").display().to_string();
    let out = prelie(&["check", &pq, "--quadratic", "omega", "--paracomplex", "N1", "--paracomplex", "N2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = prelie(&["check", &a2(), "--phn", "B", "N", "--hessian", "B", "--s-matrix", "r1", "--rep", "regular"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn deform_writes_a_pre_lie_document() {
    let dir = tempfile::tempdir().unwrap();
    for t in [None, Some("1/2")] {
        let path = dir.path().join("deformed.json");
        let mut args = vec!["deform".to_string(), a2(), "--nijenhuis".into(), "N".into()];
        if let Some(t) = t {
            args.extend(["--t".into(), t.into()]);
        }
        args.extend(["-o".into(), path.display().to_string()]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(prelie(&args).status.code(), Some(0));
        let doc = parse_document(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(common::pre_lie_oracle(&doc.algebra));
        let out = prelie(&["check", path.to_str().unwrap(), "--pre-lie", "--nijenhuis", "N"]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(prelie(&["deform", &a2(), "--nijenhuis", "N_bad"]).status.code(), Some(1));
}

#[test]
fn search_matches_library() {
    let out = prelie(&["--format", "json", "search", &a2(), "--target", "nijenhuis", "--grid=-1..1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let doc = common::fixture("a2_phn");
    let grid = Grid::range(-1, 1, &[1]).unwrap();
    let expected = search(&doc.algebra, &Target::Nijenhuis, &grid, Execution::Sequential).unwrap();
    assert_eq!(v["candidates"], expected.candidates);
    assert_eq!(v["matches"].as_array().unwrap().len(), expected.matches.len());
    let out = prelie(&["search", &a2(), "--target", "nijenhuis", "--grid=-20..20"]);
    assert_eq!(out.status.code(), Some(2), "candidate cap is a resource error");
}

#[test]
fn fixtures_all_pass_in_order() {
    let out = prelie(&["fixtures", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<(String, String)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            assert_eq!(r["result"], "pass");
            (r["subject"].as_str().unwrap().to_owned(), r["check"].as_str().unwrap().to_owned())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}
