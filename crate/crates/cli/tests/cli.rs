use std::io::Write;
use std::process::{Command, Output, Stdio};

fn btalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btalg")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = btalg(&a);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dim_values() {
    for (n, d) in [(1, 1), (2, 4), (3, 30), (4, 360), (5, 6240)] {
        let v = json(&["dim", "--n", &n.to_string()]);
        assert_eq!(v["dim"], d);
        let blocks = v["blocks"].as_array().unwrap();
        let sum: u64 = blocks.iter().map(|b| b["dim"].as_u64().unwrap()).sum();
        assert_eq!(sum, d);
        assert!(blocks.iter().all(|b| b["dim"] == b["cellular_count"]));
    }
}

#[test]
fn ptl_and_etl() {
    for (n, d) in [(1, 1), (3, 29), (4, 334), (5, 5512)] {
        assert_eq!(json(&["ptl", "--n", &n.to_string()])["ptl_dim"], d);
    }
    assert_eq!(json(&["etl", "--n", "4", "--N", "4"])["etl_dim"], 360);
    assert_eq!(json(&["etl", "--n", "4", "--N", "2"])["etl_dim"], 334);
}

#[test]
fn annihilator_reports() {
    let v = json(&["annihilator", "--n", "3", "--N", "3"]);
    for r in v.as_array().unwrap() {
        assert_eq!(r["predicted"], 0);
        assert_eq!(r["bruteforce"], 0);
        assert_eq!(r["match"], true);
    }
    let v = json(&["annihilator", "--n", "3", "--N", "2"]);
    let total: u64 = v.as_array().unwrap().iter().map(|r| r["predicted"].as_u64().unwrap()).sum();
    assert_eq!(total, 1);
    let v = json(&["annihilator", "--n", "4", "--N", "2", "--alpha", "3,1"]);
    assert_eq!(v[0]["alpha"], serde_json::json!([3, 1]));
    assert_eq!(v[0]["bruteforce"], 16);
    assert_eq!(v[0]["points"].as_array().unwrap().len(), 3);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["annihilator", "--n", "3", "--N", "2", "--primes", "1000003,998244353", "--seed", "9", "--json"];
    let a = btalg(&args);
    let b = btalg(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let mut other = args;
    other[8] = "10";
    assert_ne!(btalg(&other).stdout, a.stdout);
}

#[test]
fn verify_exit_codes() {
    for args in [["verify", "--n", "2", "--N", "2"], ["verify", "--n", "3", "--N", "3"]] {
        let out = btalg(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
    let out = btalg(&["verify", "--n", "3", "--N", "3", "--corrupt-g", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn invalid_config_exits_2() {
    for args in [
        vec!["ptl", "--n", "7"],
        vec!["annihilator", "--n", "5", "--N", "2"],
        vec!["annihilator", "--n", "3", "--N", "2", "--alpha", "2,2"],
        vec!["annihilator", "--n", "3", "--N", "2", "--primes", "100"],
        vec!["dim", "--n", "0"],
        vec!["action", "--n", "3", "--N", "2", "--r", "1", "--generator", "g3"],
        vec!["frobnicate"],
    ] {
        assert_eq!(btalg(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn multiply_from_stdin() {
    let g1 = r#"{"n":3,"terms":[{"partition":[[1],[2],[3]],"word":[2,1,3],"coeff":{"0":"1"}}]}"#;
    let e1 = r#"{"n":3,"terms":[{"partition":[[1,2],[3]],"word":[1,2,3],"coeff":{"0":"1"}}]}"#;
    let run = |input: String| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_btalg"))
            .args(["multiply", "--json"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        child.wait_with_output().unwrap()
    };
    // g1 g1 = 1 + (q - q^-1) e1 g1
    let out = run(format!("{g1}\n{g1}"));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().any(|t| t["word"] == serde_json::json!([1, 2, 3]) && t["coeff"] == serde_json::json!({"0": "1"})));
    assert!(terms.iter().any(|t| t["partition"] == serde_json::json!([[1, 2], [3]]) && t["coeff"] == serde_json::json!({"-1": "-1", "1": "1"})));
    // e1 is idempotent
    let out = run(format!("{e1} {e1}"));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::from_str::<serde_json::Value>(e1).unwrap());
    assert_eq!(run(g1.to_string()).status.code(), Some(2));
}

#[test]
fn action_triples() {
    let out = btalg(&["action", "--n", "2", "--N", "2", "--r", "1", "--generator", "e1"]);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // one color: e1 is the identity on all four basis vectors
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|t| t["row"] == t["col"] && t["coeff"] == serde_json::json!({"0": "1"})));
}

#[test]
fn basis_dump() {
    let v = json(&["basis", "--n", "3", "--alpha", "2,1", "--flavor", "n"]);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 18);
    for r in recs {
        assert!(r.get("Lam").is_some() && r.get("s").is_some() && r.get("t").is_some());
        assert_eq!(r["element"]["n"], 3);
    }
}
