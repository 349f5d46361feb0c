use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn zrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dim_methods_agree() {
    for alg in ["z2rel", "signed", "partition"] {
        for k in ["1", "2", "3"] {
            let f = zrel(&["dim", "--algebra", alg, "--k", k, "--method", "formula"]);
            let e = zrel(&["dim", "--algebra", alg, "--k", k, "--method", "enumerate"]);
            assert!(f.status.success() && e.status.success());
            assert_eq!(stdout(&f), stdout(&e), "{alg} k={k}");
        }
    }
    assert_eq!(
        stdout(&zrel(&[
            "dim",
            "--algebra",
            "z2rel",
            "--k",
            "2",
            "--method",
            "formula"
        ])),
        "164\n"
    );
    assert_eq!(
        stdout(&zrel(&[
            "dim",
            "--algebra",
            "signed",
            "--k",
            "3",
            "--method",
            "formula"
        ])),
        "5055\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(zrel(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        zrel(&["dim", "--algebra", "z2rel", "--k", "1", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zrel(&["dim", "--algebra", "brauer", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zrel(&["dim", "--algebra", "z2rel", "--k", "0"])
            .status
            .code(),
        Some(2)
    );
    let bad = zrel(&[
        "gram",
        "--algebra",
        "z2rel",
        "--k",
        "1",
        "--label",
        "2,1,0,2,0,0",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let char2 = zrel(&[
        "irreducibles",
        "--algebra",
        "z2rel",
        "--k",
        "1",
        "--char",
        "2",
    ]);
    assert_eq!(char2.status.code(), Some(2));
}

#[test]
fn verify_roundtrip_passes() {
    let o = zrel(&[
        "verify",
        "--suite",
        "roundtrip",
        "--algebra",
        "signed",
        "--k",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["checked"], 85);
    assert_eq!(report["passed"], true);
    assert!(report.get("elapsed_ms").is_some());
}

#[test]
fn sampled_output_is_byte_stable() {
    let args = [
        "verify",
        "--suite",
        "tabular",
        "--algebra",
        "z2rel",
        "--k",
        "2",
        "--samples",
        "40",
        "--seed",
        "3",
        "--no-timing",
    ];
    let a = zrel(&args);
    let b = zrel(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn basis_and_arithmetic_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("basis.jsonl");
    let o = zrel(&[
        "basis",
        "--algebra",
        "z2rel",
        "--k",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let lines: Vec<Value> = fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 7);

    // E = singletons diagram; E * E = x^2 E
    let e = lines
        .iter()
        .find(|d| d["blocks"].as_array().unwrap().len() == 4)
        .unwrap()
        .clone();
    let elem = serde_json::json!({"algebra": "z2rel", "k": 1, "terms": [{"coeff": {"coeffs": {"0": "1"}}, "diagram": e}]});
    let path = dir.path().join("e.json");
    fs::write(&path, elem.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let o = zrel(&["mul", "--k", "1", p, p]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let prod: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = prod["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["diagram"], e);
    assert_eq!(zrel(&["mul", "--k", "2", p, p]).status.code(), Some(2));

    let dpath = dir.path().join("d.json");
    let identity = lines
        .iter()
        .find(|d| {
            d["blocks"].as_array().unwrap().len() == 2
                && d["blocks"][0]
                    .as_array()
                    .unwrap()
                    .iter()
                    .any(|v| v[0] == "1'" && v[1] == "e")
                && d["blocks"][0]
                    .as_array()
                    .unwrap()
                    .iter()
                    .any(|v| v[0] == "1" && v[1] == "e")
        })
        .unwrap();
    fs::write(&dpath, identity.to_string()).unwrap();
    let o = zrel(&["decompose", "--k", "1", dpath.to_str().unwrap()]);
    assert!(o.status.success());
    let dec: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(dec["top"], dec["bottom"]);
    assert_eq!(dec["group"]["signs"], serde_json::json!([0]));
}

#[test]
fn gram_csv_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.csv");
    let o = zrel(&[
        "gram",
        "--algebra",
        "z2rel",
        "--k",
        "1",
        "--label",
        "0,0,0,0,0,0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.contains("x^2"));

    let o = zrel(&[
        "irreducibles",
        "--algebra",
        "signed",
        "--k",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let t: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t["sum_dim_d_squared"], 3);

    let o = zrel(&["irreducibles", "--algebra", "z2rel", "--k", "1", "--x", "1"]);
    let text = stdout(&o);
    assert!(text.contains("sum dim(D)^2 = 4"), "{text}");
}
