use std::process::Command;

use proth3::report::{ResultRecord, SearchLine};

fn proth3(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_proth3"))
        .args(args)
        .env_remove("THREADS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_human_output() {
    let (code, out, _) = proth3(&["classify", "--p", "7", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "prime (non-divisor of GF(3,1))");
    let (code, out, _) = proth3(&["classify", "--p", "5", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "composite (divisible by 3)");
}

#[test]
fn classify_json_output() {
    let (code, out, _) = proth3(&["classify", "--p", "5", "--n", "3", "--json"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"p":"5","n":3,"R":"41","verdict":"prime","evidence":"proth_bound","witness":null,"elapsed_ms":"#));
    let record: ResultRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(record.verdict, "prime");
}

#[test]
fn classify_primover_exit_code() {
    // 205 is not prime; attesting it routes 3281 = 17 * 193 to the ambiguous branch
    let (code, out, _) = proth3(&[
        "classify", "--p", "205", "--n", "4", "--attest-prime", "--sieve-budget", "0", "--json",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains(r#""verdict":"primover","evidence":"gf_divisor_unresolved""#));
    let (code, out, _) = proth3(&["classify", "--p", "205", "--n", "4", "--attest-prime"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "composite (factor 17)");
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(proth3(&["classify", "--p", "7"]).0, 3);
    assert_eq!(proth3(&["classify", "--p", "seven", "--n", "2"]).0, 3);
    assert_eq!(proth3(&["classify", "--p", "9", "--n", "2"]).0, 3);
    assert_eq!(proth3(&["classify", "--p", "7", "--n", "1"]).0, 3);
    assert_eq!(proth3(&["bogus"]).0, 3);
    assert_eq!(proth3(&["--help"]).0, 0);
}

#[test]
fn search_writes_one_line_per_prime() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    let path_str = path.to_str().unwrap();
    let args = ["search", "--p-min", "3", "--p-max", "20", "--n-max", "10", "--out", path_str];
    let (code, _, _) = proth3(&args);
    assert_eq!(code, 0);
    let first = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<SearchLine> = first.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    let table: Vec<(&str, Option<u32>)> = lines.iter().map(|l| (l.p.as_str(), l.min_n)).collect();
    assert_eq!(
        table,
        [("3", Some(1)), ("5", Some(1)), ("7", Some(2)), ("11", Some(1)), ("13", Some(2)), ("17", Some(3)), ("19", Some(6))]
    );
    // rerunning rewrites the file rather than appending
    proth3(&args);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
}

#[test]
fn search_edge_cases() {
    let (code, out, _) = proth3(&["search", "--p-min", "5", "--p-max", "5", "--n-max", "1"]);
    assert_eq!(code, 0);
    let line: SearchLine = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(line.min_n, Some(1));
    assert_eq!(proth3(&["search", "--p-min", "3", "--p-max", "5", "--n-max", "0"]).0, 3);
    let (code, _, err) = proth3(&[
        "search", "--p-min", "3", "--p-max", "5", "--n-max", "3", "--out", "/nonexistent/dir/r.jsonl",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("cannot write"));
}

#[test]
fn gf3_table() {
    let (code, out, _) = proth3(&["gf3", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "6562 = 2 · 17 · 193; 17 = FormA(k=1); 193 = FormB(m=2)");
    let (_, out, _) = proth3(&["gf3", "--n", "1"]);
    assert_eq!(out.trim(), "10 = 2 · 5; 5 = FormA(k=1)");
    assert_eq!(proth3(&["gf3", "--n", "99"]).0, 3);
    let (_, out, _) = proth3(&["gf3", "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["factors"][1]["factor"], "41");
    assert_eq!(v["factors"][1]["form"]["k"], "5");
}

#[test]
fn verify_reports_zero_discrepancies() {
    let (code, out, _) = proth3(&["verify", "--p-max", "100", "--n-max", "12"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("0 discrepancies"), "{out}");
    let (code, out, _) = proth3(&["verify", "--p-max", "3", "--n-max", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("multiplier p = 3:    1"));
}
