use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multicurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn rigid_invariants_table() {
    let out = run(&[
        "invariants", "rigid", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1",
        "--degE", "0", "--degF", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R = 3"));
    assert!(text.contains("Deg = -2"));
    assert!(text.contains("slope = -2/3"));
    assert!(text.contains("first graded"));
    assert!(text.contains("second graded"));
}

#[test]
fn verify_lemma_json_is_empty() {
    let out = run(&["verify-lemma", "--rank-max", "2", "--deg-max", "3", "--format", "json"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"counterexamples\":[]"));
}

#[test]
fn genus_too_small_is_domain_error() {
    let out = run(&[
        "moduli", "nonempty", "--n", "2", "--g", "1", "--degL", "-3", "--a", "1", "--k", "1",
        "--epsilon", "0", "--delta", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("GenusTooSmall"));
}

#[test]
fn malformed_invocation_is_usage_error() {
    let out = run(&["invariants", "rigid", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "invariants", "rigid", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1",
        "--degE", "0", "--degF", "1", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("usage error"));
}

#[test]
fn bad_premise_is_usage_error() {
    let out = run(&[
        "certify", "theo3", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1",
        "--degE", "0", "--degF", "1", "--premise", "Q=stable",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown premise subject"));
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["invariants", "rigid", "--n", "3", "--g", "2", "--degL", "-1", "--a", "2", "--k",
             "1", "--degE", "2", "--degF", "-1", "--format", "json"],
        vec!["certify", "theo2", "--n", "3", "--g", "2", "--degL", "-1", "--r", "1", "--delta",
             "0", "--format", "json"],
        vec!["scan", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1",
             "--delta-min", "-1", "--delta-max", "1", "--epsilon-min", "0", "--epsilon-max", "1",
             "--format", "json"],
        vec!["hn", "--g", "2", "--degL", "-2", "--dD", "0", "--format", "json"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut re = serde_json::to_string(&parsed).unwrap();
        re.push('\n');
        assert_eq!(re, text, "{args:?}");
        assert_eq!(parsed["schema_version"], "1");
    }
}

#[test]
fn scan_csv_shape_and_determinism() {
    let args = [
        "scan", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1", "--delta-min",
        "0", "--delta-max", "1", "--epsilon-min", "-1", "--epsilon-max", "0", "--format", "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "delta,epsilon,R,d,nonempty,dim");
    assert_eq!(lines.len(), 5);
    assert!(!text.contains('\r'));
    assert!(lines.contains(&"1,0,3,-2,true,12"));
}

#[test]
fn one_row_and_empty_scans() {
    let out = run(&[
        "scan", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1", "--delta-min",
        "1", "--delta-max", "1", "--epsilon-min", "0", "--epsilon-max", "0", "--format", "csv",
    ]);
    assert_eq!(stdout(&out).lines().count(), 2);

    // reversed bounds are a domain error, not an empty result
    let out = run(&[
        "scan", "--n", "2", "--g", "2", "--degL", "-3", "--a", "1", "--k", "1", "--delta-min",
        "1", "--delta-max", "0", "--epsilon-min", "0", "--epsilon-max", "0", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn theo2_rank_one_auto_premise() {
    let out = run(&[
        "certify", "theo2", "--n", "2", "--g", "2", "--degL", "-1", "--r", "1", "--delta", "0",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["conclusion"], "stable");
    assert_eq!(v["result"]["premises"][0]["origin"], "rankone");
}

#[test]
fn selftest_is_reproducible() {
    let a = run(&["selftest", "--seed", "7", "--cases", "100"]);
    let b = run(&["selftest", "--seed", "7", "--cases", "100"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("0 suite failure(s)"));
}
