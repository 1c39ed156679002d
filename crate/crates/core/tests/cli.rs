use std::process::{Command, Output};

use serde_json::Value;

fn idealarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealarr"))
        .args(args)
        .env_remove("IDEALARR_RANK_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_suites_exit_zero() {
    let o = idealarr(&["verify", "main", "--type", "B3", "--all-ideals"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("20 ideals checked, 0 failures"));

    let o = idealarr(&["verify", "local-global", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 roots checked, 0 failures"));

    let o = idealarr(&["verify", "charpoly", "--type", "F4", "--all-ideals"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("105 ideals checked, 0 failures"));

    let o = idealarr(&["verify", "saito", "--type", "B3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json_report() {
    let o = idealarr(&["verify", "main", "--type", "G2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checked"], 8);
    assert_eq!(v["failures"], 0);
    let last = &v["results"][7];
    assert_eq!(last["exponents"], serde_json::json!([1, 5]));
    assert_eq!(last["layers"].as_array().unwrap().len(), 5);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let a = idealarr(&["charpoly", "--type", "B3", "--all-ideals", "--format", "csv", "--jobs", "1"]);
    let b = idealarr(&["charpoly", "--type", "B3", "--all-ideals", "--format", "csv", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("type,ideal_id,size,e_1,e_2,e_3,c_0,c_1,c_2,c_3"));
    assert_eq!(lines.last(), Some("B3,19,9,1,3,5,-15,23,-9,1"));
}

#[test]
fn generators_are_closed() {
    let o = idealarr(&["ideals", "--type", "B2", "--generators", "[[1,1]]", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["ideal"]["members"], serde_json::json!([0, 1, 2]));
    assert_eq!(v[0]["ideal"]["generators"], serde_json::json!([2]));
}

#[test]
fn roots_json_schema() {
    let o = idealarr(&["roots", "--type", "G2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "G2");
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["positive_roots"][5], serde_json::json!([3, 2]));
}

#[test]
fn basis_emits_derivations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = idealarr(&[
        "basis",
        "--type",
        "B3",
        "--truncate",
        "7",
        "--emit-derivations",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([1, 3, 3]));
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 3);
    let term = &basis[0]["coeffs"][0][0];
    assert!(term["exponents"].is_array());
    assert!(term["num"].is_string() && term["den"].is_string());
}

#[test]
fn rank_limit_from_environment() {
    let o = idealarr(&["basis", "--type", "A5", "--truncate", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--rank-limit"));

    let o = Command::new(env!("CARGO_BIN_EXE_idealarr"))
        .args(["basis", "--type", "A5", "--truncate", "3"])
        .env("IDEALARR_RANK_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));

    let o = Command::new(env!("CARGO_BIN_EXE_idealarr"))
        .args(["basis", "--type", "A5", "--truncate", "3", "--rank-limit", "4"])
        .env("IDEALARR_RANK_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_exponents_merge() {
    let o = idealarr(&["exponents", "--type", "A2xA1", "--truncate", "2,1", "--lattice-check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exponents"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["lattice_check"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["exponents", "--type", "H3", "--truncate", "1"][..],
        &["exponents", "--type", "A2", "--truncate", "1", "--all-ideals"],
        &["verify", "nonsense", "--type", "A2"],
        &["ideals", "--type", "A2", "--generators", "[[1,2]]"],
    ] {
        assert_eq!(idealarr(args).status.code(), Some(2), "{args:?}");
    }
}
