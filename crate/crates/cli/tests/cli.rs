use std::path::PathBuf;

use assert_cmd::Command;

fn sts() -> Command {
    Command::cargo_bin("sts").unwrap()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name)
}

fn stdout(args: &[&str]) -> String {
    let out = sts()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn scalar_invariants() {
    assert_eq!(stdout(&["sig", "3_1"]).trim(), "-2");
    assert_eq!(stdout(&["sig", "9_42"]).trim(), "2");
    assert_eq!(stdout(&["det", "9_42"]).trim(), "7");
    assert_eq!(
        stdout(&["det", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]"]).trim(),
        "3"
    );
    assert_eq!(stdout(&["s", "9_42", "--field", "F2"]).trim(), "0");
    assert_eq!(stdout(&["s", "T(2,5)"]).trim(), "4");
    assert_eq!(stdout(&["ss", "m9_42"]).trim(), "0");
    assert_eq!(stdout(&["--sequential", "ss", "3_1"]).trim(), "1");
}

#[test]
fn homology_grid() {
    let out = stdout(&["homology", "m9_42", "--ring", "ZH", "--reduced"]);
    let row0 = out
        .lines()
        .find(|l| l.trim_start().starts_with("0 "))
        .unwrap();
    assert!(row0.contains("Z[H]/(H)") && row0.contains("Z[H] "), "{out}");
    assert_eq!(out.matches("Z[H]/(H)").count(), 4);
    let json = stdout(&["homology", "3_1", "--ring", "Q", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["complete"], true);
}

#[test]
fn complex_dump() {
    let json = stdout(&["ckh", "m9_42", "--ring", "ZH", "--reduced", "--simplify"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
    assert!(v["differentials"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["hpow"] == 1));
}

#[test]
fn exit_codes() {
    sts().args(["qa", "9_42"]).assert().code(2);
    sts().args(["qa", "8_20"]).assert().success();
    sts().args(["det", "no_such_knot"]).assert().code(1);
    sts().args(["s", "3_1", "--field", "F11"]).assert().code(1);
    sts().args(["ss", "L4a1"]).assert().code(1);
}

#[test]
fn lspace_tree() {
    let out = stdout(&[
        "lspace-verify",
        data("prop_tree_9_42.json").to_str().unwrap(),
    ]);
    assert!(out.contains("dim upper bound 7, |H_1| = 7"));
    let dir = std::env::temp_dir().join(format!("sts-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    let text = std::fs::read_to_string(data("prop_tree_9_42.json"))
        .unwrap()
        .replacen("\"det\": 7", "\"det\": 9", 1);
    std::fs::write(&bad, text).unwrap();
    sts()
        .args(["lspace-verify", bad.to_str().unwrap()])
        .assert()
        .code(1);
}

#[test]
fn sln_check() {
    let out = stdout(&[
        "sln-check",
        data("homfly_9_42_delta.csv").to_str().unwrap(),
        "--n",
        "3..10",
    ]);
    assert!(out.contains("s (N = 10)      0"));
    let dir = std::env::temp_dir().join(format!("sts-sln-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let thick = dir.join("thick.csv");
    std::fs::write(&thick, "q,a,delta,dim\n0,0,0,1\n2,0,-2,1\n4,0,-4,1\n").unwrap();
    sts()
        .args(["sln-check", thick.to_str().unwrap()])
        .assert()
        .code(2);
}

#[test]
fn table_command() {
    let dir = std::env::temp_dir().join(format!("sts-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(
        stdout(&["table", empty.to_str().unwrap()]),
        "name,neg_sigma_half,q_m,theta,g4,qalt,positivity\n"
    );
    let out = stdout(&["table", data("knots_le10.csv").to_str().unwrap()]);
    assert_eq!(out.lines().count(), 251);
    assert!(out.contains("9_42,1,1,1,1,non-q.alt,-"));
    assert!(out.contains("10_136,1,\"[-1,1]\",1,1,non-q.alt,-"));
    // the reference table disagrees on a few rows, so diff mode reports an error
    sts()
        .args([
            "table",
            data("knots_le10.csv").to_str().unwrap(),
            "--diff",
            data("paper_table_le9.csv").to_str().unwrap(),
        ])
        .assert()
        .code(1);
}
