use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reciprocity-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// Drops the timing field so reports can be compared byte for byte.
fn without_timing(o: &Output) -> String {
    json_lines(o)
        .into_iter()
        .map(|mut v| {
            if let Some(obj) = v.as_object_mut() {
                obj.remove("elapsed_ms");
            }
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn single_computations() {
    let o = run(&["dedekind", "2", "3", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["naive"], "-1/18");
    assert_eq!(v["fast"], "-1/18");
    assert_eq!(v["equal"], true);

    let o = run(&["dedekind", "2", "3", "--n", "1", "--rhs", "prop4"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"a":2,"b":3,"n":1,"variant":"prop4","lhs":"-1/3","rhs":"-1/3","equal":true}"#
    );

    let o = run(&["knot", "2", "3"]);
    assert_eq!(stdout(&o).trim(), r#"{"a":2,"b":3,"sum15":"-4/3","closed9":"-4/3","equal":true}"#);

    let o = run(&["semigroup", "3", "5", "sylvester", "1"]);
    assert_eq!(json_lines(&o)[0]["value"], "14");

    let o = run(&["bernoulli", "12"]);
    assert_eq!(json_lines(&o)[0]["value"], "-691/2730");
}

#[test]
fn csv_output() {
    let o = run(&["spectra", "2", "3", "--n", "1", "--x", "-2/3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,n,x,method,value"));
    assert_eq!(lines.next(), Some("2,3,1,-2/3,brute,16/9"));
    assert_eq!(lines.next(), Some("2,3,1,-2/3,closed,16/9"));
}

#[test]
fn usage_errors_exit_with_two() {
    let o = run(&["dedekind", "4", "6", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd(a,b) must be 1"));

    for args in [
        &["frobnicate"][..],
        &["spectra", "2", "3", "--n", "1", "--x", "1/0"],
        &["dedekind", "2", "3", "--n", "2"],
        &["bench", "--pairs", "4:6", "--n", "3"],
        &["verify", "nonsense"],
        &["semigroup", "3", "5", "apery", "7"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }

    let o = bin()
        .args(["verify", "eq9", "--a-max", "3"])
        .env("RECIPROCITY_LAB_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_empty_range() {
    let o = run(&["verify", "eq1", "--a-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["cases_run"], 0);
    assert_eq!(lines[0]["failures"], Value::Array(vec![]));
}

#[test]
fn verify_eq9_counts_coprime_pairs() {
    let o = run(&["verify", "eq9", "--summary-only"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = (2..=50u64)
        .flat_map(|a| (a + 1..=50).map(move |b| (a, b)))
        .filter(|&(a, b)| num_gcd(a, b) == 1)
        .count();
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["cases_run"], expected as u64);
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn verify_errata_reports_printed_and_corrected_values() {
    let o = run(&["verify", "errata"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let find = |id: &str| lines.iter().find(|v| v["params"]["id"] == id).unwrap().clone();
    let eq11 = find("eq11");
    assert_eq!((eq11["lhs"].as_str(), eq11["rhs"].as_str()), (Some("5/3"), Some("1/6")));
    let zero = find("prop5_zero");
    assert_eq!((zero["lhs"].as_str(), zero["rhs"].as_str()), (Some("13/6"), Some("2")));
    let summary = lines.last().unwrap();
    assert_eq!(summary["identity"], "errata");
    assert_eq!(summary["failures"], Value::Array(vec![]));
}

#[test]
fn verify_output_is_deterministic_across_thread_counts() {
    let args = ["verify", "prop2_rsets", "--a-max", "7", "--b-max", "9"];
    let one = bin().args(args).env("RECIPROCITY_LAB_THREADS", "1").output().unwrap();
    let four = bin().args(args).env("RECIPROCITY_LAB_THREADS", "4").output().unwrap();
    let again = bin().args(args).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(without_timing(&one), without_timing(&four));
    assert_eq!(without_timing(&one), without_timing(&again));

    let lines = json_lines(&one);
    let keys: Vec<(u64, u64, u64)> = lines[..lines.len() - 1]
        .iter()
        .map(|v| {
            let p = &v["params"];
            (p["a"].as_u64().unwrap(), p["b"].as_u64().unwrap(), p["n"].as_u64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn verify_small_sweeps_pass() {
    for args in [
        &["verify", "prop4", "--a-max", "8", "--b-max", "12", "--n-list", "1,3"][..],
        &["verify", "gassert_shor", "--a-max", "3", "--b-max", "5", "--summary-only"],
        &["verify", "mordell_split", "--a-max", "4", "--b-max", "6", "--summary-only"],
        &["verify", "prop5", "--a-max", "4", "--b-max", "4", "--x-list", "-2/3,7"],
        &["verify", "eq12", "--b-max", "5", "--format", "csv"],
        &["verify", "eq11", "--b-max", "6", "--summary-only", "--format", "csv"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn bench_table() {
    let o = run(&["bench", "--pairs", "", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[]");

    let o = run(&["bench", "--pairs", "2:3,89:144", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_lines(&o).remove(0);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["equal"] == true));
}
