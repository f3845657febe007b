use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shapovalov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dim_all_methods_agree_on_a_rock_core() {
    let out = run(&["dim", "--ell", "2", "--core", "2,1", "--d", "1", "--mu", "1", "--colors", "0", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["fock"], "4");
    assert_eq!(v["sym"], "4");
    assert_eq!(v["formula"], "4");
    assert_eq!(v["agree"], true);
}

#[test]
fn dim_formula_only() {
    let out = run(&["dim", "--ell", "2", "--core", "1", "--d", "2", "--mu", "2", "--colors", "1", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["formula"], "9");
}

#[test]
fn dim_from_a_weyl_word() {
    // s_0 s_1 s_0 moves Λ_0 by 2α_0 + α_1, the content of (2, 1) when ell = 2.
    let out = run(&["dim", "--ell", "2", "--word", "0,1,0", "--d", "1", "--mu", "1", "--colors", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["core"], "2,1");
    assert_eq!(v["fock"], "3");
}

#[test]
fn dim_rejects_invalid_input() {
    let base = ["dim", "--ell", "2", "--d", "1", "--mu", "1"];
    let with = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        run(&args).status.code()
    };
    assert_eq!(with(&["--core", "1,1", "--colors", "0"]), Some(1));
    assert_eq!(with(&["--core", "2,1", "--colors", "2"]), Some(1));
    assert_eq!(run(&["dim", "--ell", "2", "--core", "2,1", "--d", "2", "--mu", "1", "--colors", "0"]).status.code(), Some(1));
    assert_eq!(with(&["--core", "1", "--colors", "0", "--strict-hypothesis"]), Some(1));
}

#[test]
fn dim_outside_the_hypothesis_reports_a_mismatch() {
    let out = run(&["dim", "--ell", "2", "--core", "", "--d", "1", "--mu", "1", "--colors", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["rock"], false);
}

#[test]
fn core_and_quotient() {
    let out = run(&["core", "--p", "5", "--partition", "16,11,10,10,9,4,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["core"], "1");
    assert_eq!(v["weight"], 12);

    let v = json(&run(&["core", "--p", "5", "--partition", "1"]));
    assert_eq!(v["weight"], 0);
    assert!(v["quotient"].as_array().unwrap().iter().all(|c| c == ""));

    assert_eq!(run(&["core", "--p", "5", "--partition", "2,2"]).status.code(), Some(1));
    assert_eq!(run(&["core", "--p", "4", "--partition", "1"]).status.code(), Some(1));
}

#[test]
fn fock_apply_single_generators() {
    let v = json(&run(&["fock-apply", "--ell", "2", "--start", "", "--monomial", "f0"]));
    assert_eq!(v, serde_json::json!({"1": "1"}));
    let v = json(&run(&["fock-apply", "--ell", "1", "--start", "3", "--monomial", "f0"]));
    assert_eq!(v, serde_json::json!({"4": "2", "3,1": "1"}));
}

#[test]
fn fock_apply_composition_matches_explicit_monomial() {
    let a = run(&["fock-apply", "--ell", "2", "--start", "2,1", "--cc", "1/0"]);
    let b = run(&["fock-apply", "--ell", "2", "--start", "2,1", "--monomial", "(1,0)"]);
    let c = run(&["fock-apply", "--ell", "2", "--start", "2,1", "--monomial", "f0^(2);f1^(2);f2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(!json(&a).as_object().unwrap().is_empty());
    assert_eq!(run(&["fock-apply", "--ell", "2", "--monomial", "f7"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["fock-apply", "--ell", "2", "--start", "2,1", "--cc", "2/1"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_writes_a_report() {
    let dir = std::env::temp_dir().join(format!("shapovalov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["verify", "--ell", "1,2", "--d-max", "2", "--jobs", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["status"], "all-agree");
    assert_eq!(report["mismatches"], 0);
    let first = &report["instances"][0];
    for key in ["ell", "core", "d", "mu", "colors", "fock_value", "sym_value", "formula_value", "status"] {
        assert!(!first[key].is_null(), "missing {key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_table_format() {
    let out = run(&["verify", "--ell", "1", "--d-max", "1", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().ends_with("status all-agree"));
}

#[test]
fn rock_find_lists_minimal_cores() {
    let v = json(&run(&["rock-find", "--ell", "1", "--d", "2", "--max-size", "12"]));
    assert_eq!(v[0], "4,1");
    let v = json(&run(&["rock-find", "--ell", "2", "--d", "1", "--count", "1"]));
    assert_eq!(v, serde_json::json!(["2,1"]));
}
