use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strs(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect()
}

#[test]
fn poly_gn1() {
    let v = json(&["poly", "--family", "gn:1"]);
    assert_eq!(strs(&v["coeffs"]), ["1", "3", "1"]);
    assert_eq!(v["properties"]["symmetric"], true);
    assert_eq!(v["alpha"], 2);
}

#[test]
fn poly_multipartite_not_unimodal() {
    let v = json(&["poly", "--family", "multipartite:1x26,8"]);
    assert_eq!(strs(&v["coeffs"]), ["1", "34", "28", "56", "70", "56", "28", "8", "1"]);
    assert_eq!(v["properties"]["unimodal"], false);
    assert_eq!(v["properties"]["first_violation"]["unimodal"], 2);
}

#[test]
fn poly_graph6_and_file() {
    assert_eq!(strs(&json(&["poly", "--g6", "A_"])["coeffs"]), ["1", "2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    std::fs::write(&path, "# path on three vertices\n3 2\n0 1\n1 2\n").unwrap();
    let v = json(&["poly", "--file", path.to_str().unwrap()]);
    assert_eq!(strs(&v["coeffs"]), ["1", "3", "1"]);
}

#[test]
fn products() {
    let v = json(&["product", "lex", "--left", "family:complete:2", "--right", "family:complete:2"]);
    assert_eq!(v["identity_ok"], true);
    assert_eq!(strs(&v["coeffs"]), ["1", "4"]);

    let v = json(&["product", "rooted", "--left", "family:path:3", "--right", "family:path:2", "--root", "0"]);
    assert_eq!(v["identity_ok"], true);
    assert_eq!(strs(&v["coeffs"]), ["1", "6", "10", "5"]);
    assert_eq!(v["graph_coeffs"], v["formula_coeffs"]);

    let v = json(&["product", "union", "--left", "family:complete:1", "--right", "family:complete:1"]);
    assert_eq!(strs(&v["coeffs"]), ["1", "2", "1"]);

    let v = json(&["product", "join", "--left", "g6:A_", "--right", "family:empty:3"]);
    assert_eq!(v["identity_ok"], true);
    assert_eq!(strs(&v["coeffs"]), ["1", "5", "3", "1"]);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "thm52", "--nmax", "20"]);
    assert_eq!(v["passes"], 21);
    assert_eq!(v["passed"], true);

    let v = json(&["verify", "prop41", "--g", "family:path:4", "--tree", "T", "--root", "4"]);
    assert_eq!(v["log_concave"], true);

    let v = json(&["verify", "closedform", "--n", "11", "--tol", "1e-6"]);
    assert_eq!(v["passed"], true);

    let v = json(&["verify", "gn", "--nmax", "6"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);

    let v = json(&["verify", "thm22", "--samples", "20", "--seed", "5"]);
    assert_eq!(v["passed"], true);

    let v = json(&["verify", "prop26", "--g1", "family:complete:2", "--g2", "family:empty:3"]);
    assert_eq!(v["verdicts"][0]["holds"], true);
}

#[test]
fn scan_counts_and_report() {
    let out = run(&["scan", "trees", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "n=2: 1 trees, 0 violations",
            "n=3: 1 trees, 0 violations",
            "n=4: 2 trees, 0 violations",
            "n=5: 3 trees, 0 violations",
        ]
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let out = run(&["scan", "trees", "--nmax", "7", "--out", path.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    let records: Vec<Value> = body.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 1 + 1 + 2 + 3 + 6 + 11);
    assert!(records.iter().all(|r| r["unimodal"] == true && r["code"].is_string()));

    let out = run(&["scan", "trees", "--nmax", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "n=2: 1 trees, 0 violations");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: [&[&str]; 3] = [
        &["verify", "thm22", "--samples", "15"],
        &["poly", "--family", "gn:6"],
        &["scan", "trees", "--nmax", "8", "--jobs", "3"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    run(&["scan", "trees", "--nmax", "9", "--jobs", "1", "--out", a.to_str().unwrap()]);
    run(&["scan", "trees", "--nmax", "9", "--jobs", "4", "--out", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["poly", "--g6", "!!"]), Some(2));
    assert_eq!(code(&["poly", "--family", "nonsense:3"]), Some(2));
    assert_eq!(code(&["product", "rooted", "--left", "family:path:3", "--right", "family:path:2"]), Some(2));
    assert_eq!(code(&["product", "lex", "--left", "bogus", "--right", "g6:A_"]), Some(2));
    assert_eq!(code(&["poly", "--family", "complete:65"]), Some(3));
    assert_eq!(
        code(&["product", "lex", "--left", "family:complete:9", "--right", "family:complete:8"]),
        Some(3)
    );
    assert_eq!(code(&["poly", "--file", "/nonexistent/graph.txt"]), Some(4));
    assert_eq!(code(&["scan", "trees", "--nmax", "3", "--out", "/nonexistent/dir/out.jsonl"]), Some(4));
    assert_eq!(code(&["scan", "trees", "--nmax", "15"]), Some(2));
    assert_eq!(code(&["verify", "prop41", "--g", "family:path:4", "--root", "9"]), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    // Zero tolerance rejects the rounding in the float expansion.
    let out = run(&["verify", "closedform", "--nmax", "40", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
}
