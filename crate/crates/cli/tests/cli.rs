use std::process::{Command, Output};

use serde_json::{json, Value};

fn qci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qci")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn algebra_info() {
    let out = qci(&["--c", "2", "--a", "3", "--p", "7", "algebra"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!((v["dim"].clone(), v["a_bar"].clone(), v["q"].clone()), (json!(9), json!(3), json!(2)));

    let v = stdout_json(&qci(&["algebra", "--c", "3", "--a", "2", "--p", "5"]));
    assert_eq!((v["dim"].clone(), v["a_bar"].clone(), v["q"].clone()), (json!(8), json!(2), json!(4)));
}

#[test]
fn degenerate_a_bar_is_rejected() {
    let out = qci(&["--c", "2", "--a", "2", "--p", "2", "algebra"]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr_json(&out);
    assert!(diag["message"].as_str().unwrap().contains("a_bar"));
}

#[test]
fn explicit_q_is_checked() {
    let out = qci(&["--q", "4", "algebra"]);
    assert_eq!(stdout_json(&out)["q"], json!(4));
    let out = qci(&["--q", "3", "algebra"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("NotPrimitiveRoot"));
}

#[test]
fn variety_of_standard_modules() {
    let v = stdout_json(&qci(&["variety", "--module", "cyclic:1,1"]));
    assert_eq!(v["points"], json!([[1, 1]]));
    assert_eq!(v["trivial"], json!(false));

    let v = stdout_json(&qci(&["variety", "--module", "free:1"]));
    assert_eq!(v["points"], json!([]));
    assert_eq!(v["trivial"], json!(true));

    // Images of all 8 rational points under cubing coordinates.
    let v = stdout_json(&qci(&["variety", "--module", "k"]));
    assert_eq!(v["points"], json!([[0, 1], [1, 0], [1, 1], [1, 6]]));
}

#[test]
fn resolve_examples() {
    let v = stdout_json(&qci(&["resolve", "--module", "k", "--depth", "8"]));
    assert_eq!(v["betti"], json!([1, 2, 3, 4, 5, 6, 7, 8, 9]));
    assert_eq!(v["complexity"], json!(2));

    let v = stdout_json(&qci(&["resolve", "--module", "free:1"]));
    assert_eq!(v["betti"], json!([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(v["complexity"], json!(0));

    let v = stdout_json(&qci(&["resolve", "--module", "cyclic:1,1", "--depth", "8"]));
    assert!(v["betti"].as_array().unwrap().iter().all(|b| b.as_u64().unwrap() <= 1));
    assert_eq!(v["complexity"], json!(1));
}

#[test]
fn short_resolution_cannot_estimate_complexity() {
    let out = qci(&["resolve", "--module", "k", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("InsufficientData"));
}

#[test]
fn counterexample_defaults_confirm() {
    let out = qci(&["counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["confirmed"], json!(true));
    assert_eq!(v["counterexample"]["v_m"]["points"], json!([[1, 1]]));
    assert_eq!(v["counterexample"]["v_bm"]["points"], json!([[1, 6]]));
    assert_eq!(v["counterexample"]["containment_holds"], json!(false));
    assert_eq!(v["corollary"]["sides"]["intersection"]["points"], json!([[1, 1]]));
}

#[test]
fn counterexample_precondition_failures() {
    let out = qci(&["counterexample", "--mu", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr_json(&out);
    assert_eq!(diag["error"], json!("PreconditionViolated"));
    assert!(diag["message"].as_str().unwrap().contains("mu_i^a"));

    let out = qci(&["counterexample", "--p", "11", "--a", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("FieldUnsuitable"));

    let out = qci(&["counterexample", "--lambda", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn second_field_counterexample() {
    let out = qci(&["counterexample", "--a", "2", "--p", "5", "--mu", "1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["counterexample"]["v_bm"]["points"], json!([[1, 4]]));
}

#[test]
fn bad_designators_and_flags_exit_2() {
    for args in [&["variety", "--module", "torsion:1"][..], &["variety", "--module", "cyclic:1"], &["--bogus", "algebra"]] {
        let out = qci(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr_json(&out)["message"].is_string());
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["counterexample"][..],
        &["resolve", "--module", "cyclic:1,2"],
        &["variety", "--module", "k", "--c", "3", "--a", "2", "--p", "5"],
        &["suite", "--seed", "3", "--cases", "4"],
    ] {
        let (a, b) = (qci(args), qci(args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn suite_reports_counts() {
    let out = qci(&["suite", "--cases", "3", "--seed", "9"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], json!(true));
    assert!(v["properties_run"].as_u64().unwrap() >= 20);
    assert_eq!(v["config"]["cases"], json!(3));
}

#[test]
fn file_modules_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    // Au_(1,0) over c=2, a=2, p=5: x1 acts as zero, x2 as a nilpotent block.
    let module = json!({"spec": {"c": 2, "a": 2, "p": 5, "q": 4}, "dim": 2, "actions": [[0, 0, 0, 0], [0, 0, 4, 0]]});
    let path = dir.path().join("m.json");
    std::fs::write(&path, module.to_string()).unwrap();
    let designator = format!("file:{}", path.display());

    let out = qci(&["--a", "2", "--p", "5", "variety", "--module", &designator]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["points"], json!([[1, 0]]));

    let out = qci(&["variety", "--module", &designator]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("SpecMismatch"));

    let broken = dir.path().join("bad.json");
    std::fs::write(&broken, r#"{"spec": {"c": 2, "a": 2, "p": 5, "q": 4}, "dim": 2, "actions": [[0, 1, 0, 0], [0, 0, 1, 0]]}"#).unwrap();
    let out = qci(&["--a", "2", "--p", "5", "variety", "--module", &format!("file:{}", broken.display())]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_and_table_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qci(&["algebra", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], json!(9));

    let out = qci(&["algebra", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["dim", "9"]));
}
