use std::process::{Command, Output};

use serde_json::Value;

fn bisyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisyl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

/// Drops timing so reruns can be compared byte for byte.
fn without_timing(o: &Output) -> String {
    let mut lines = Vec::new();
    for mut v in json_lines(o) {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        lines.push(v.to_string());
    }
    lines.join("\n")
}

#[test]
fn verify_sylvester_json() {
    let o = bisyl(&["verify", "--check", "sylvester", "--n", "3", "--k", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["check"], "sylvester");
    assert_eq!(v["pass"], true);
    // Field order is part of the schema.
    let raw = String::from_utf8_lossy(&o.stdout);
    let at = |key: &str| raw.find(&format!("\"{key}\":")).unwrap();
    let order = ["check", "n", "k", "pass", "stats", "elapsed_ms"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{raw}");
}

#[test]
fn verify_without_k_runs_every_k() {
    let o = bisyl(&["verify", "--check", "sylvester", "--n", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let ks: Vec<u64> = json_lines(&o).iter().map(|v| v["k"].as_u64().unwrap()).collect();
    assert_eq!(ks, [0, 1, 2, 3]);
}

#[test]
fn quotient_reports_unconstrained_count() {
    let o = bisyl(&[
        "quotient",
        "--mode",
        "ab0",
        "--n",
        "3",
        "--k",
        "2",
        "--unconstrained-count",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["divisible"], true);
    assert_eq!(v["unconstrained_detw_stats"]["monomials"], 110_268);
    assert_eq!(v["detw_stats"]["degree"], 18);
    assert_eq!(v["stats"]["degree"], 10);
}

#[test]
fn quotient_omits_unconstrained_count_by_default() {
    let o = bisyl(&["quotient", "--mode", "b0", "--n", "2", "--k", "1", "--json"]);
    assert_eq!(code(&o), 0);
    assert!(json_lines(&o)[0].get("unconstrained_detw_stats").is_none());
}

#[test]
fn precondition_errors_exit_2() {
    for args in [
        &["verify", "--check", "chio", "--n", "0"][..],
        &["verify", "--check", "griolv", "--n", "1"],
        &["verify", "--check", "sylvester", "--n", "2", "--k", "3"],
        &["quotient", "--mode", "b0", "--n", "4", "--k", "2"],
        &[
            "fuzz",
            "--theorem",
            "b0",
            "--n",
            "9",
            "--k",
            "2",
            "--trials",
            "1",
            "--seed",
            "0",
            "--bound",
            "5",
        ],
        &[
            "fuzz",
            "--theorem",
            "b0",
            "--n",
            "3",
            "--k",
            "2",
            "--trials",
            "0",
            "--seed",
            "0",
            "--bound",
            "5",
        ],
        &[
            "fuzz",
            "--theorem",
            "sylv",
            "--n",
            "3",
            "--k",
            "1",
            "--trials",
            "5",
            "--seed",
            "0",
            "--bound",
            "5",
            "--negative-control",
        ],
    ] {
        let o = bisyl(args);
        assert_eq!(code(&o), 2, "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(err.lines().count(), 1, "one-line diagnostic for {args:?}: {err}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&bisyl(&[])), 2);
    assert_eq!(code(&bisyl(&["verify", "--check", "sylvester"])), 2);
    assert_eq!(code(&bisyl(&["verify", "--check", "nope", "--n", "2"])), 2);
    assert_eq!(code(&bisyl(&["selftest", "--unknown"])), 2);
    assert_eq!(code(&bisyl(&["fuzz", "--theorem", "b0", "--n", "3", "--k", "1"])), 2);
    assert_eq!(code(&bisyl(&["--help"])), 0);
}

#[test]
fn large_divisibility_falls_back_to_pointwise() {
    let o = bisyl(&[
        "verify", "--check", "ab0", "--n", "5", "--k", "2", "--trials", "20", "--seed", "3", "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["evidence"], "pointwise");
    assert_eq!(v["failures"], 0);
}

#[test]
fn fuzz_is_reproducible() {
    let args = [
        "fuzz",
        "--theorem",
        "ab0",
        "--n",
        "4",
        "--k",
        "2",
        "--trials",
        "30",
        "--seed",
        "11",
        "--bound",
        "40",
        "--json",
    ];
    let (a, b) = (bisyl(&args), bisyl(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(without_timing(&a), without_timing(&b));
    assert_eq!(json_lines(&a)[0]["passes"], 30);
}

#[test]
fn negative_control_passes_when_it_finds_failures() {
    let args = [
        "fuzz",
        "--theorem",
        "b0",
        "--n",
        "3",
        "--k",
        "2",
        "--trials",
        "100",
        "--seed",
        "5",
        "--bound",
        "100",
        "--negative-control",
        "--json",
    ];
    let o = bisyl(&args);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert!(v["failures"].as_u64().unwrap() >= 1);
    assert!(v["first_failure"]["matrices"]["A"].is_string());
    assert_eq!(without_timing(&o), without_timing(&bisyl(&args)));
}

#[test]
fn human_output_is_one_line_per_report() {
    let o = bisyl(&[
        "verify",
        "--check",
        "cauchy-binet",
        "--n",
        "3",
        "--p",
        "2",
        "--m",
        "3",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS cauchy-binet")));
}

#[test]
fn verbose_logs_to_stderr_only() {
    let o = bisyl(&[
        "quotient",
        "--mode",
        "b0",
        "--n",
        "2",
        "--k",
        "1",
        "--json",
        "--verbose",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_lines(&o).len(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("det W"));
}

#[test]
fn selftest_json_matrix() {
    let o = bisyl(&["selftest", "--json"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["pass"], true);
    let ids: Vec<u64> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    assert_eq!(ids, (1..=11).collect::<Vec<u64>>());
}
