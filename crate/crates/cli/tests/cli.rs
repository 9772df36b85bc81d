use std::process::{Command, Output};

use serde_json::Value;

fn spinharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinharm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("structured output is JSON")
}

#[test]
fn report_cp3() {
    let o = spinharm(&["report", "cp3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("harmonic: ALL_T"), "{text}");
    assert!(text.contains("class: W1- ⊕ W2-"), "{text}");
}

#[test]
fn report_aw11_at_five_quarters() {
    let o = spinharm(&["report", "aw11", "--at", "5/4", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["at"]["flags"], serde_json::json!(["W1"]));
    assert_eq!(v["at"]["t"], "5/4");
    assert_eq!(v["canonical_parameters"]["roots"], serde_json::json!(["1/8"]));
    assert_eq!(v["harmonicity"]["verdict"], "ALL_T");
}

#[test]
fn report_spin4_states_the_computed_verdict() {
    let v = json(&spinharm(&["report", "spin4", "--format", "structured"]));
    // The printed example claims {3/2}; the exact residual vanishes identically.
    assert_eq!(v["harmonicity"]["verdict"], "ALL_T");
    assert_eq!(v["eta"][3], "(3 - u^2)/(4*u)");
}

#[test]
fn structured_output_is_deterministic_with_sorted_keys() {
    let a = spinharm(&["report", "spin4", "--format", "structured", "--include-negative-roots"]);
    let b = spinharm(&["report", "spin4", "--format", "structured", "--include-negative-roots"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(v["canonical_parameters"]["nonpositive_roots"].is_array());
}

#[test]
fn dump_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["cp3", "spin4", "aw11"] {
        let dumped = spinharm(&["dump", name]);
        assert_eq!(dumped.status.code(), Some(0));
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &dumped.stdout).unwrap();
        let again = spinharm(&["dump", path.to_str().unwrap()]);
        assert_eq!(again.stdout, dumped.stdout, "{name}");
        let from_file = spinharm(&["report", path.to_str().unwrap(), "--format", "structured"]);
        let builtin = spinharm(&["report", name, "--format", "structured"]);
        assert_eq!(from_file.stdout, builtin.stdout);
    }
}

#[test]
fn bad_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let text = String::from_utf8(spinharm(&["dump", "cp3"]).stdout).unwrap().replacen("\"-u/2\"", "\"1/(2*\"", 1);
    std::fs::write(&path, text).unwrap();
    let o = spinharm(&["report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));

    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(spinharm(&["report", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(spinharm(&["report", "missing-model"]).status.code(), Some(2));
    assert_eq!(spinharm(&["report", "cp3", "--at", "x/y"]).status.code(), Some(2));
    assert_eq!(spinharm(&["scan", "cp3", "--from", "2", "--to", "1"]).status.code(), Some(2));
}

#[test]
fn scan_cp3_stays_below_tolerance() {
    let o = spinharm(&["scan", "cp3", "--from", "1/10", "--to", "4", "--steps", "50", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 51);
    assert!(rows.iter().all(|r| r["residual"].as_f64().unwrap() < 1e-12));
}

#[test]
fn scan_spin4_minimum() {
    let o = spinharm(&["scan", "spin4", "--from", "1/2", "--to", "5/2", "--steps", "200", "--format", "structured"]);
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    let near = rows.iter().find(|r| r["t"] == "3/2").expect("grid contains 3/2");
    assert!(near["residual"].as_f64().unwrap() < 1e-9);
}

#[test]
fn scan_text_table() {
    let o = spinharm(&["scan", "aw11", "--steps", "10"]);
    let text = stdout(&o);
    assert!(text.starts_with("# aw11: exact verdict ALL_T"));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn verify_reports_every_criterion() {
    let o = spinharm(&["verify", "--samples", "10", "--format", "structured"]);
    let v = json(&o);
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 9);
    let failing: Vec<u64> = criteria.iter().filter(|c| c["passed"] == false).map(|c| c["id"].as_u64().unwrap()).collect();
    // Criteria 5-7 contain sub-checks that the exact computation contradicts.
    assert_eq!(failing, vec![5, 6, 7]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_catches_a_wrong_lift_factor() {
    let o = spinharm(&["verify", "--samples", "5", "--lift-factor", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("criterion 4 FAIL"), "{text}");
    assert!(text.contains("4: S = -diag"), "{text}");
}

#[test]
fn verify_catches_a_wrong_substitution() {
    let o = spinharm(&["verify", "--samples", "5", "--spin4-substitution", "t=u^2"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("5: m-projection of Lambda(X4)"), "{text}");
}
