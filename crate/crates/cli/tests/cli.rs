use std::process::{Command, Output};

use serde_json::Value;

fn holoflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holoflow"))
        .args(args)
        .env_remove("HOLOFLOW_JOBS")
        .output()
        .expect("run holoflow")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn invariance_passes_for_the_main_family() {
    let o = holoflow(&["verify-invariance", "--window", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["sweeps"].as_array().unwrap().len(), 3);
    assert_eq!(v["pass"], true);
}

#[test]
fn perturbed_table_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("op.json");
    std::fs::write(
        &path,
        r#"{"variant":"cubical","d":3,"scale":0,"perturb":{"entry":"alpha","index":[0,0,1],"delta":"1/7"}}"#,
    )
    .unwrap();
    let o = holoflow(&["verify-invariance", "--op", path.to_str().unwrap(), "--window", "2", "--scales=0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violations"));
}

#[test]
fn perturbed_explicit_table_fails() {
    let dump = holoflow(&["tables", "--range", "2", "--format", "json"]);
    assert_eq!(dump.status.code(), Some(0));
    let clean = stdout(&dump);
    let o = holoflow(&["verify-invariance", "--op", &clean]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let mut v = json(&dump);
    let entries = v["b"].as_array_mut().expect("b entries");
    let first = entries.iter_mut().find(|e| e["value"] == "-1").expect("a -1 entry");
    first["value"] = Value::from("-2");
    let o = holoflow(&["verify-invariance", "--op", &v.to_string()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(holoflow(&["sphere-check", "--areas", "1/2,1/4"]).status.code(), Some(2));
    assert_eq!(holoflow(&["sphere-check", "--areas", "1/2,x"]).status.code(), Some(2));
    assert_eq!(holoflow(&["verify-compat", "--op", "sphere", "--areas", "1/2,1/2"]).status.code(), Some(2));
    assert_eq!(holoflow(&["verify-invariance", "--op", "/nonexistent/op.json"]).status.code(), Some(2));
    assert_eq!(holoflow(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn compat_pair_shows_the_refinement_sum() {
    let o = holoflow(&[
        "verify-compat",
        "--window",
        "2",
        "--scales=-1",
        "--pair",
        "[1,1,0]@-1",
        "[2,1,1]@-1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pair"]["coefficient"], "-8");
    assert_eq!(v["pair"]["children_sum"], "-8");
    assert_eq!(v["pair"]["residual"], "0");
    assert_eq!(v["pair"]["children_p"].as_array().unwrap().len(), 4);
}

#[test]
fn sphere_check_csv_has_one_row_per_monomial() {
    let o = holoflow(&["sphere-check", "--areas", "1/2,1/4,1/4", "--max-degree", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(r.headers().unwrap(), vec!["monomial", "series", "gaussian", "equal"]);
    let rows: Vec<_> = r.records().map(|x| x.unwrap()).collect();
    // monomials of degree 0..=4 in two variables
    assert_eq!(rows.len(), 1 + 2 + 3 + 4 + 5);
    assert_eq!(&rows[0][0], "1");
    assert!(rows.iter().all(|x| &x[3] == "true"));
}

#[test]
fn tables_contain_the_alternative_entry() {
    let o = holoflow(&["tables", "--op", "alt3", "--range", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let found = r
        .records()
        .map(|x| x.unwrap())
        .any(|x| &x[0] == "b" && &x[1] == "x[1,1,0]@0" && &x[2] == "x[1,1,2]@0" && &x[3] == "-1");
    assert!(found);
}

#[test]
fn covariance_diagonal_is_twenty() {
    let o = holoflow(&["covariance", "--window", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<_> = r.records().map(|x| x.unwrap()).collect();
    let diag: Vec<_> = rows.iter().filter(|x| x[0] == x[1]).collect();
    assert!(!diag.is_empty());
    assert!(diag.iter().all(|x| &x[2] == "20"));
}

#[test]
fn sphere_covariance_with_decimals_and_psd() {
    let o = holoflow(&["covariance", "--op", "sphere", "--areas", "1/2,1/4,1/4", "--psd", "--decimal", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["entries"][0][0]["exact"], "1/2");
    assert_eq!(v["entries"][0][1]["exact"], "-1/4");
    assert_eq!(v["entries"][1][1]["decimal"], "0.375");
    assert!(v["psd"].is_object());
}

#[test]
fn moments_match_the_gaussian() {
    let o = holoflow(&["moments", "--areas", "1/10,2/10,3/10,4/10", "--poly", "x1*x2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["series"]["1"], "-1/25");
    assert_eq!(v["equal"], true);
    assert_eq!(v["operator"]["areas"][1], "1/5");
}

#[test]
fn welldefined_separates_the_families() {
    let ok = holoflow(&["welldefined", "--trials", "3", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["violations"], 0);
    let alt = holoflow(&["welldefined", "--op", "alt3", "--d", "4", "--window", "2", "--trials", "3"]);
    assert_eq!(alt.status.code(), Some(0));
    let main = holoflow(&["welldefined", "--d", "4", "--window", "2", "--trials", "3"]);
    assert_eq!(main.status.code(), Some(1));
}

#[test]
fn output_is_deterministic_and_honours_out() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &std::path::Path| {
        vec![
            "welldefined".to_string(),
            "--trials".into(),
            "4".into(),
            "--seed".into(),
            "7".into(),
            "--format".into(),
            "json".into(),
            "--out".into(),
            p.to_str().unwrap().to_string(),
        ]
    };
    let o1 = Command::new(env!("CARGO_BIN_EXE_holoflow")).args(args(&a)).output().unwrap();
    let o2 = Command::new(env!("CARGO_BIN_EXE_holoflow"))
        .args(args(&b))
        .env("HOLOFLOW_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(o1.status.code(), Some(0));
    assert_eq!(o2.status.code(), Some(0));
    assert!(o1.stdout.is_empty());
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn bad_jobs_value_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_holoflow"))
        .args(["tables", "--range", "1"])
        .env("HOLOFLOW_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
