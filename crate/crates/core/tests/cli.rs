use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const GL4_PAIR: &str = r#"{"field":"R","factors":[{"type":"D","k":3,"lambda":"1/2"},{"type":"D","k":3,"lambda":"1/2"}],"eta":{"k":1,"z":"1"}}"#;

fn shalika(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shalika"))
        .args(args)
        .env_remove("SHALIKA_FORMAT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn module_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn tsv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap()
        .split('\t')
        .map(String::from)
        .collect();
    let rows = lines
        .map(|l| l.split('\t').map(String::from).collect())
        .collect();
    (header, rows)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) if a.is_empty() => "-".into(),
        Value::Array(a) => a
            .iter()
            .map(|p| {
                let pair = p.as_array().unwrap();
                format!("{}-{}", pair[0], pair[1])
            })
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

fn json_key(header: &str) -> &str {
    if header == "|N_omega|" {
        "n_omega"
    } else {
        header
    }
}

fn assert_same_records(json: &Value, tsv: &str) {
    let records: Vec<&Value> = match json {
        Value::Array(a) => a.iter().collect(),
        v => vec![v],
    };
    let (header, rows) = tsv_rows(tsv);
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(records) {
        let obj = rec.as_object().unwrap();
        assert_eq!(obj.len(), header.len());
        for (h, c) in header.iter().zip(row) {
            assert_eq!(&cell(&obj[json_key(h)]), c, "column {h}");
        }
    }
}

#[test]
fn gl4_table() {
    let o = shalika(&["orbits", "2+2", "--classify", "--format", "tsv"]);
    assert!(o.status.success());
    let (header, rows) = tsv_rows(&stdout(&o));
    assert_eq!(
        header,
        ["omega", "class", "psi_sets", "s_omega", "|N_omega|"]
    );
    let classes: Vec<(&str, &str)> = rows
        .iter()
        .map(|r| (r[0].as_str(), r[1].as_str()))
        .collect();
    assert_eq!(
        classes,
        [
            ("3,4,1,2", "Matching"),
            ("3,1,2,4", "PsiVanishing"),
            ("1,3,2,4", "Matching"),
            ("1,2,3,4", "PsiVanishing"),
        ]
    );
}

#[test]
fn gl6_unvanishing_rows() {
    let o = shalika(&["orbits", "2+2+2", "--classify", "--format", "tsv"]);
    let (_, rows) = tsv_rows(&stdout(&o));
    let live: Vec<(&str, &str)> = rows
        .iter()
        .filter(|r| r[1] != "PsiVanishing")
        .map(|r| (r[0].as_str(), r[1].as_str()))
        .collect();
    assert_eq!(live.len(), 5);
    assert!(live.contains(&("3,5,6,1,2,4", "Unmatching")));
    assert_eq!(live.iter().filter(|r| r.1 == "Matching").count(), 4);
}

#[test]
fn tsv_and_json_agree() {
    let dir = TempDir::new().unwrap();
    let f = module_file(&dir, "m.json", GL4_PAIR);
    let f = f.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["orbits", "2+1+1", "--classify"],
        vec!["orbits", "1+1+1+1"],
        vec!["param-check", f],
        vec!["period", f, "--generic"],
        vec!["epsilon", f, "--a", "-1/2"],
        vec!["verify", "--max-n", "2"],
    ];
    for args in cases {
        let json = shalika(&args);
        let mut targs = args.clone();
        targs.extend(["--format", "tsv"]);
        let tsv = shalika(&targs);
        assert!(json.status.success() && tsv.status.success(), "{args:?}");
        let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
        assert_same_records(&v, &stdout(&tsv));
    }
}

#[test]
fn output_is_reproducible() {
    for args in [
        vec!["verify", "--max-n", "3", "--seed", "17"],
        vec!["orbits", "2+2+2+2", "--classify"],
    ] {
        let a = shalika(&args);
        let b = shalika(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn verify_default_passes() {
    let o = shalika(&["verify"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for suite in v.as_array().unwrap() {
        assert_eq!(suite["failures"], 0);
        assert!(suite["checked"].as_u64().unwrap() > 0);
    }
}

#[test]
fn gl4_pair_decisions() {
    let dir = TempDir::new().unwrap();
    let f = module_file(&dir, "m.json", GL4_PAIR);
    let f = f.to_str().unwrap();

    let v: Value = serde_json::from_str(&stdout(&shalika(&["period", f, "--generic"]))).unwrap();
    assert_eq!(v["verdict"], "Exists");
    assert_eq!(v["compatible_orbits"], 1);
    assert_eq!(v["witness_omega"], "3,4,1,2");

    let v: Value = serde_json::from_str(&stdout(&shalika(&["period", f]))).unwrap();
    assert_eq!(v["verdict"], "NecessaryOnlyNotGeneric");

    let v: Value = serde_json::from_str(&stdout(&shalika(&["epsilon", f, "--a", "3"]))).unwrap();
    assert_eq!(v["epsilon"], -1);

    let o = shalika(&["param-check", f, "--eta-k", "0", "--eta-z", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["symplectic"], false);
}

#[test]
fn env_overrides_format() {
    let o = Command::new(env!("CARGO_BIN_EXE_shalika"))
        .args(["orbits", "1+1", "--format", "json"])
        .env("SHALIKA_FORMAT", "tsv")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("omega\tgamma\tsigma\n"));
}

#[test]
fn validation_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let broken = module_file(&dir, "a.json", "{\"field\":");
    let bad_k = module_file(&dir, "b.json", &GL4_PAIR.replace("\"k\":1", "\"k\":5"));
    let odd = module_file(
        &dir,
        "c.json",
        r#"{"field":"R","factors":[{"type":"chi","k":0,"lambda":"0"}],"eta":{"k":0,"z":"0"}}"#,
    );
    let cases: Vec<Vec<&str>> = vec![
        vec!["param-check", broken.to_str().unwrap()],
        vec!["param-check", bad_k.to_str().unwrap()],
        vec!["period", odd.to_str().unwrap()],
        vec!["period", bad_k.to_str().unwrap(), "--linear"],
        vec!["orbits", "3+1"],
        vec!["orbits", "2+1"],
        vec!["orbits", "2+2", "--bogus"],
        vec!["epsilon", odd.to_str().unwrap(), "--a", "0"],
        vec!["param-check", "/nonexistent/module.json"],
    ];
    for args in cases {
        let o = shalika(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn linear_needs_generic() {
    let dir = TempDir::new().unwrap();
    let f = module_file(&dir, "m.json", GL4_PAIR);
    let o = shalika(&["period", f.to_str().unwrap(), "--linear"]);
    assert_eq!(o.status.code(), Some(2));
    let o = shalika(&["period", f.to_str().unwrap(), "--linear", "--generic"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "Exists");
}

#[test]
fn library_entry_point_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = shalika_core::cli::run_with_env(
        ["shalika", "orbits", "2+2", "--classify"],
        Some("tsv"),
        &mut out,
        &mut err,
    );
    assert_eq!(status, 0);
    let bin = shalika(&["orbits", "2+2", "--classify", "--format", "tsv"]);
    assert_eq!(out, bin.stdout);
}
