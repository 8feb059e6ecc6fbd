use std::process::{Command, Output};

use serde_json::Value;

fn crystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystal"))
        .args(args)
        .env_remove("CRYSTAL_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

#[test]
fn roof_of_221() {
    let out = crystal(&["roof", "--e", "3", "--m", "0", "--lambda", "[2,2,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[5,3,1]");
}

#[test]
fn base_ceil_floor() {
    let args = |cmd: &'static str| crystal(&[cmd, "--e", "3", "--lambda", "[2,2,1]"]);
    assert_eq!(stdout(&args("base")), "[2]");
    assert_eq!(stdout(&args("ceil")), "[5,3,1]");
    assert_eq!(stdout(&args("floor")), "[2]");
}

#[test]
fn tau_with_zero_charge_is_identity() {
    let out = crystal(&["tau", "--e", "3", "--m", "0", "--lambda", "[1]"]);
    assert_eq!(stdout(&out), "[1]");
    let out = crystal(&["tau", "--e", "3", "--m", "1", "--lambda", "[]"]);
    assert_eq!(stdout(&out), "[2]");
}

#[test]
fn lspath_json_and_text() {
    let out = crystal(&["lspath", "--e", "3", "--lambda", "[2,2,1]"]);
    let v = json(&out);
    let masses: Vec<&str> = v["segments"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["mass"].as_str().unwrap())
        .collect();
    assert_eq!(masses, ["1/3", "1/6", "1/2"]);
    let out = crystal(&[
        "--format",
        "text",
        "lspath",
        "--e",
        "3",
        "--lambda",
        "[3,1,1,1]",
    ]);
    assert_eq!(stdout(&out), "[4,2,1,1]^1/3 ⊗ [3,1,1]^2/3");
}

#[test]
fn lspath_along_explicit_word() {
    let out = crystal(&["lspath", "--e", "3", "--lambda", "[2]", "--word", "[0,1]"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["segments"][0]["core"], serde_json::json!([2]));
    let out = crystal(&["lspath", "--e", "3", "--lambda", "[2]", "--word", "[0,2]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mullineux_of_row() {
    let out = crystal(&["mullineux", "--e", "3", "--lambda", "[2]"]);
    assert_eq!(stdout(&out), "[1,1]");
}

#[test]
fn kleshchev_verdicts() {
    let out = crystal(&[
        "kleshchev",
        "--e",
        "3",
        "--lambda",
        "[2,2,1]",
        "--mu",
        "[1,1]",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["accepted"], Value::Bool(false));
    let out = crystal(&[
        "--format",
        "text",
        "kleshchev",
        "--e",
        "3",
        "--lambda",
        "[2,2,1]",
        "--mu",
        "[2]",
    ]);
    assert_eq!(stdout(&out), "accepted");
}

#[test]
fn kleshchev_explain_lists_certificates() {
    let out = crystal(&[
        "kleshchev",
        "--e",
        "3",
        "--m",
        "1",
        "--lambda",
        "[1]",
        "--mu",
        "[1]",
        "--explain",
    ]);
    let v = json(&out);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["checks"][0]["translated"], Value::Bool(true));
    assert!(v["components"][0]["beta"]["threshold"].is_i64());
}

#[test]
fn kleshchev_multipartition_and_bad_pattern() {
    let ok = crystal(&[
        "kleshchev",
        "--e",
        "2",
        "--components",
        "[[1],[1],[]]",
        "--charges",
        "[0,0,1]",
    ]);
    assert!(ok.status.success());
    let bad = crystal(&[
        "kleshchev",
        "--e",
        "3",
        "--components",
        "[[1],[]]",
        "--charges",
        "[1,0]",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("charge pattern"));
}

#[test]
fn enumerate_kleshchev_counts() {
    let out = crystal(&["enumerate-kleshchev", "--e", "2", "--m", "1", "--n", "3"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 4);
}

#[test]
fn crystal_graph_dot() {
    let out = crystal(&["crystal-graph", "--e", "2", "--depth", "2", "--dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("n0 -> n1 [label=\"0\"];"));
    let out = crystal(&[
        "crystal-graph",
        "--e",
        "3",
        "--charges",
        "[0,1]",
        "--depth",
        "3",
    ]);
    let v = json(&out);
    assert_eq!(v["nodes"][0], serde_json::json!([[], []]));
}

#[test]
fn demazure_membership() {
    let yes = crystal(&["demazure", "--e", "3", "--lambda", "[2]", "--word", "[1,0]"]);
    assert_eq!(stdout(&yes), "true");
    let no = crystal(&["demazure", "--e", "3", "--lambda", "[2]", "--word", "[0]"]);
    assert_eq!(stdout(&no), "false");
    let upper = crystal(&[
        "demazure", "--e", "3", "--lambda", "[2]", "--word", "[]", "--kind", "upper",
    ]);
    assert_eq!(stdout(&upper), "true");
}

#[test]
fn verify_main_passes() {
    let out = crystal(&["verify", "--suite", "main", "--e", "2", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["counterexample"].is_null());
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_crystal"))
            .args([
                "--seed", "5", "verify", "--suite", "demazure", "--e", "3", "--max-n", "6",
            ])
            .env("CRYSTAL_WORKERS", workers)
            .output()
            .unwrap()
    };
    assert_eq!(stdout(&run("1")), stdout(&run("3")));
}

#[test]
fn abacus_show() {
    let out = crystal(&["abacus", "--e", "3", "--lambda", "[4,2,1]", "--show"]);
    assert_eq!(
        stdout(&out),
        "-6  -5  -4\n-3   .  -1\n .   1   .\n .   4   ."
    );
    let out = crystal(&["abacus", "--e", "3", "--lambda", "[4,2,1]"]);
    assert_eq!(json(&out)["exceptional"], serde_json::json!([4, 1, -1]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["roof", "--e", "3", "--lambda", "[4]"][..],
        &["roof", "--e", "1", "--lambda", "[1]"],
        &["roof", "--e", "3", "--lambda", "not json"],
        &["roof", "--e", "3", "--m", "5", "--lambda", "[1]"],
        &["tau", "--e", "3", "--lambda", "[1,1,1]"],
        &["frobnicate"],
    ] {
        assert_eq!(crystal(args).status.code(), Some(2), "{args:?}");
    }
}
