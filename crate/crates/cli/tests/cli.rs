use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valuative")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const U12: &str = r#"{"d":2,"class":"M","values":[0,1,1,1]}"#;
const U24: &str = r#"{"d":4,"class":"M","values":[0,1,1,2,1,2,2,2,1,2,2,2,2,2,2,2]}"#;

#[test]
fn expand_uniform() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u12.json", U12);
    let o = bin(&["expand", "--in", &f]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["coeff"], 1);
    assert_eq!(entries[0]["key"]["chain"], serde_json::json!([3]));
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"d":1,"class":"M","values":[1,1]}"#);
    let o = bin(&["validate", "--in", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NonZeroEmptySet"));

    let good = write(dir.path(), "u24.json", U24);
    let o = bin(&["validate", "--in", &good]);
    assert_eq!(o.status.code(), Some(0));

    assert_eq!(bin(&["validate"]).status.code(), Some(2));
    assert_eq!(bin(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(bin(&["tables", "--what", "q", "--class", "M"]).status.code(), Some(2));
}

#[test]
fn tables_t_pm() {
    let o = bin(&["tables", "--what", "t", "--class", "PM", "--dmax", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row4 = text.lines().find(|l| l.starts_with("4,")).unwrap();
    let cells: Vec<&str> = row4.split(',').collect();
    assert_eq!(cells[4], "27");
    assert!(row4.ends_with(",ok"));
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["tables", "--what", "t", "--class", "M", "--sym", "--dmax", "5", "--format", "json"];
    let base = bin(&args);
    for jobs in ["1", "3"] {
        let mut a = vec!["--jobs", jobs];
        a.extend(args);
        assert_eq!(bin(&a).stdout, base.stdout);
    }
    assert_eq!(bin(&["--jobs", "0", "series-check", "--id", "p-m"]).status.code(), Some(2));
}

#[test]
fn emitted_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u24.json", U24);
    fn again<T: serde::Serialize + serde::de::DeserializeOwned>(text: &str) -> String {
        let v: T = serde_json::from_str(text).unwrap();
        serde_json::to_string(&v).unwrap() + "\n"
    }
    let text = stdout(&bin(&["expand", "--in", &f]));
    assert_eq!(again::<valuative::ExpansionVector>(&text), text);
    let text = stdout(&bin(&["invariant", "--in", &f, "--form", "g"]));
    assert_eq!(again::<valuative::invariants::GCoefficients>(&text), text);
    let text = stdout(&bin(&["invariant", "--in", &f, "--form", "tutte-direct"]));
    assert_eq!(again::<valuative::invariants::BivariatePolynomial>(&text), text);
    let text = stdout(&bin(&["enumerate", "--d", "3", "--r", "2", "--class", "PM"]));
    for line in text.lines() {
        assert_eq!(again::<valuative::RankFunction>(line), format!("{line}\n"));
    }
    let g = stdout(&bin(&["invariant", "--in", &f, "--form", "g"]));
    let parsed: valuative::invariants::GCoefficients = serde_json::from_str(&g).unwrap();
    assert_eq!(parsed.total(), 24);
    let a = stdout(&bin(&["invariant", "--in", &f, "--form", "tutte-direct"]));
    let b = stdout(&bin(&["invariant", "--in", &f, "--form", "tutte-from-g"]));
    assert_eq!(a, b);
}

#[test]
fn enumerate_counts() {
    let lines = |args: &[&str]| stdout(&bin(args)).lines().count();
    assert_eq!(lines(&["enumerate", "--d", "4", "--r", "2", "--class", "M", "--kind", "p"]), 33);
    assert_eq!(lines(&["enumerate", "--d", "3", "--r", "2", "--class", "PM", "--kind", "p"]), 19);
    assert_eq!(lines(&["enumerate", "--d", "6", "--r", "3", "--class", "M", "--kind", "tsym"]), 3);
    // Labeled matroids on 4 elements by rank: 1, 15, 36, 15, 1.
    let by_rank: Vec<usize> = (0..=4)
        .map(|r| lines(&["enumerate", "--d", "4", "--r", &r.to_string(), "--class", "M"]))
        .collect();
    assert_eq!(by_rank, [1, 15, 36, 15, 1]);
}

#[test]
fn series_check_runs() {
    let o = bin(&["series-check", "--id", "tsym-pm", "--degree", "6"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["mismatch"].is_null());
    assert_eq!(bin(&["series-check", "--id", "nope"]).status.code(), Some(2));
}

#[test]
fn decomposition_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let (_, pieces) = valuative::decomposition::hypersimplex_split();
    let json = |rk: &valuative::RankFunction| serde_json::to_string(rk).unwrap();
    let good = format!(r#"{{"target":{U24},"pieces":[{},{}]}}"#, json(&pieces[0]), json(&pieces[1]));
    let f = write(dir.path(), "split.json", &good);
    let o = bin(&["check-decomposition", "--in", &f]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "VALID");
    assert_eq!(v["intersections"][0]["pieces"], serde_json::json!([1, 2]));

    let gap = format!(r#"{{"target":{U24},"pieces":[{}]}}"#, json(&pieces[0]));
    let f = write(dir.path(), "gap.json", &gap);
    let o = bin(&["check-decomposition", "--in", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "INVALID");
    assert!(v["witness"].as_str().unwrap().starts_with("CoverGap"));
}

#[test]
fn hopf_utilities() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u12.json", U12);
    let v: Value = serde_json::from_str(&stdout(&bin(&["hopf", "coproduct", "--in", &f]))).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let v: Value = serde_json::from_str(&stdout(&bin(&["hopf", "antipode", "--in", &f]))).unwrap();
    let coeffs: Vec<i64> = v.as_array().unwrap().iter().map(|t| t["coeff"].as_i64().unwrap()).collect();
    assert_eq!(coeffs.iter().sum::<i64>(), 1);
    // Brackets vanish on direct sums.
    let sum = write(dir.path(), "sum.json", r#"{"d":2,"class":"M","values":[0,1,0,1]}"#);
    let v: Value =
        serde_json::from_str(&stdout(&bin(&["hopf", "bracket", "--word", "01", "--in", &sum]))).unwrap();
    assert_eq!(v["pairing"], "0");
    assert_eq!(bin(&["hopf", "bracket", "--word", "10"]).status.code(), Some(1));
}
