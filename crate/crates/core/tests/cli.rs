use std::process::{Command, Output};

use boole_core::Rational;
use serde_json::Value;

fn boole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boole"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn count_checks(doc: &Value, check: &str) -> usize {
    doc["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["check"] == check)
        .count()
}

#[test]
fn verify_unit_spacing_sweep() {
    let out = boole(&[
        "verify", "--a", "0", "--b", "1", "--n-max", "10", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["params"]["a"], "0/1");
    assert_eq!(doc["params"]["n_max"], 10);
    assert_eq!(count_checks(&doc, "theorem"), 66);
    assert_eq!(doc["summary"]["failures"], 0);
    assert_eq!(
        doc["summary"]["total"].as_u64().unwrap() as usize,
        doc["cases"].as_array().unwrap().len()
    );
}

#[test]
fn verify_single_case_sweep() {
    let out = boole(&[
        "verify", "--a", "1", "--b", "2", "--n-max", "0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let theorem: Vec<&Value> = doc["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["check"] == "theorem")
        .collect();
    assert_eq!(theorem.len(), 1);
    assert_eq!(theorem[0]["lhs"], "1/1");
    assert_eq!(theorem[0]["rhs"], "1/1");
}

#[test]
fn verify_injected_failure_exits_one() {
    let out = boole(&[
        "verify",
        "--a",
        "0",
        "--b",
        "1",
        "--n-max",
        "3",
        "--format",
        "json",
        "--inject-failure",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    let failed: Vec<&Value> = doc["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(
        (failed[0]["n"].as_u64(), failed[0]["m"].as_u64()),
        (Some(3), Some(3))
    );
}

#[test]
fn verify_with_zero_spacing_notes_skipped_checks() {
    let out = boole(&[
        "verify", "--a", "7", "--b", "0", "--n-max", "6", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(count_checks(&doc, "theorem"), 28);
    assert_eq!(count_checks(&doc, "system_row"), 0);
    assert!(!doc["notes"].as_array().unwrap().is_empty());
}

#[test]
fn verify_csv_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = boole(&[
        "verify",
        "--n-max",
        "2",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("n,m,check,a,b,lhs,rhs,pass"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn seeded_verify_is_byte_identical() {
    let args = [
        "verify", "--n-max", "5", "--trials", "10", "--seed", "42", "--format", "json",
    ];
    let (first, second) = (boole(&args), boole(&args));
    assert_eq!(first.stdout, second.stdout);
    let other = boole(&[
        "verify", "--n-max", "5", "--trials", "10", "--seed", "43", "--format", "json",
    ]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn solve_reports_both_routes() {
    let out = boole(&[
        "solve", "--a", "0", "--b", "1", "--n", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["solver"], serde_json::json!(["1/1", "-2/1", "1/1"]));
    assert_eq!(doc["closed_form"], doc["solver"]);

    let out = boole(&["solve", "--a", "9/4", "--b", "-1/3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("solver:      [-1, 3, -3, 1]"));
}

#[test]
fn solve_singular_system_exits_one() {
    let out = boole(&["solve", "--a", "1", "--b", "0", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
}

#[test]
fn det_values_agree() {
    let doc = json(&boole(&[
        "det", "--a", "0", "--b", "1", "--n", "2", "--format", "json",
    ]));
    for key in ["closed", "pairwise", "bareiss"] {
        assert_eq!(doc[key], "2/1");
    }
    let out = boole(&[
        "det", "--a", "0", "--b", "2", "--n", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["closed"], "768/1");
    let out = boole(&["det", "--a", "5", "--b", "0", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("V,0/1,0/1,"));
}

#[test]
fn stirling_tables() {
    let doc = json(&boole(&[
        "stirling", "--m-max", "3", "--n-max", "3", "--format", "json",
    ]));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert!(rows
        .iter()
        .any(|r| r["m"] == 3 && r["n"] == 2 && r["stirling"] == "3/1"));
    assert!(rows.iter().all(|r| r["pass"] == true));

    let out = boole(&[
        "stirling", "--m-max", "0", "--n-max", "0", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "m,n,stirling,boole_sum,factorial_times_stirling,pass\n0,0,1/1,1/1,1/1,true\n"
    );

    let out = boole(&[
        "stirling", "--m-max", "6", "--n-max", "4", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\n6,4,65/1,1560/1,1560/1,true\n"));
}

#[test]
fn bench_csv_rows() {
    let out = boole(&["bench", "--n-max", "8", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,closed_ns,bareiss_ns,agree"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], (i + 1).to_string());
        assert!(row[1].parse::<u128>().is_ok() && row[2].parse::<u128>().is_ok());
        assert_eq!(row[3], "true");
    }

    let out = boole(&["bench", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--unknown"],
        vec!["bench", "--n-max", "0"],
        vec!["solve", "--b", "1/0"],
        vec!["det", "--a", "x"],
        vec!["stirling", "--seed", "1"],
        vec!["verify", "--format", "xml"],
        vec![],
    ] {
        let out = boole(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(boole(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_rationals_round_trip() {
    let out = boole(&[
        "verify", "--a", "-3/4", "--b", "5/6", "--n-max", "4", "--trials", "3", "--format", "json",
    ]);
    let doc = json(&out);
    for case in doc["cases"].as_array().unwrap() {
        for key in ["a", "b", "lhs", "rhs"] {
            let text = case[key].as_str().unwrap();
            let value: Rational = text.parse().unwrap();
            assert_eq!(value.to_fraction_string(), text);
        }
    }
}
