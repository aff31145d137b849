//! End-to-end tests of the binary: exit codes, output formats, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfhomology"))
}

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str], workers: Option<&str>) -> Output {
    let mut c = bin();
    c.args(args);
    if let Some(w) = workers {
        c.env("HOPFHOMOLOGY_WORKERS", w);
    }
    c.output().unwrap()
}

fn report_json(path: &Path, workers: Option<&str>) -> Output {
    run(&["report", path.to_str().unwrap(), "--format=json"], workers)
}

fn temp_instance(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfhomology-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn every_instance_runs_clean_and_deterministically() {
    let mut files: Vec<_> = std::fs::read_dir(instance("")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        let a = report_json(&f, Some("1"));
        assert!(a.status.success(), "{}: {}", f.display(), String::from_utf8_lossy(&a.stdout));
        let b = report_json(&f, Some("4"));
        assert_eq!(a.stdout, b.stdout, "{} differs across worker counts", f.display());
        let c = report_json(&f, None);
        assert_eq!(a.stdout, c.stdout, "{} differs across runs", f.display());
    }
}

#[test]
fn sqrt2_report_matches_golden() {
    let out = report_json(&instance("sqrt2.json"), None);
    assert!(out.status.success());
    let path = golden("sqrt2.report.json");
    if std::env::var_os("HOPFHOMOLOGY_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(path).unwrap());
}

#[test]
fn dual_s3_run_example() {
    let text = r#"{"version":"hopfhomology/1","scalar":"Q",
        "objects":[{"name":"H","kind":"construction","call":"dual_group_algebra(S3)"}],
        "tasks":[{"op":"validate_hopf","args":{"hopf":"H"}},{"op":"compute_R_H","args":{"hopf":"H"}}]}"#;
    let p = temp_instance("dual_s3_two.json", text);
    let out = report_json(&p, None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["version"], "hopfhomology/1");
    assert_eq!(v["total"], 2);
    assert_eq!(v["tasks"][0]["status"], "pass");
    assert_eq!(v["tasks"][1]["status"], "pass");
    assert_eq!(v["tasks"][1]["result"]["dim"], 3);
}

#[test]
fn te_iso_dims_table() {
    let text = r#"{"version":"hopfhomology/1","scalar":"Q",
        "objects":[{"name":"E","kind":"construction","call":"galois_field_extension_sqrt(2)"}],
        "tasks":[{"op":"verify_theorem_te_iso","args":{"extension":"E"}}]}"#;
    let p = temp_instance("te.json", text);
    let out = run(&["--truncation", "2", "report", p.to_str().unwrap(), "--format", "json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tasks"][0]["truncation"], 2);
    let degrees = v["tasks"][0]["result"]["degrees"].as_array().unwrap();
    let lhs: Vec<u64> = degrees.iter().map(|d| d["lhs_dim"].as_u64().unwrap()).collect();
    assert_eq!(lhs, [1, 0, 0]);
}

#[test]
fn unexpected_failure_exits_nonzero() {
    let text = r#"{"version":"hopfhomology/1","scalar":"Q",
        "objects":[{"name":"B","kind":"construction","call":"zero_antipode(group_algebra(Z2))"}],
        "tasks":[{"op":"validate_hopf","args":{"hopf":"B"}}]}"#;
    let p = temp_instance("broken.json", text);
    let out = run(&["run", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let human = String::from_utf8(out.stdout).unwrap();
    assert!(human.contains("counterexample"), "{human}");
    assert!(human.contains("0/1 tasks as expected"));
}

#[test]
fn failing_sayd_row_carries_counterexample() {
    let out = run(&["run", instance("negative_controls.json").to_str().unwrap()], None);
    assert!(out.status.success());
    let human = String::from_utf8(out.stdout).unwrap();
    let row = human.lines().find(|l| l.contains("sayd_check_degree0 [left action through ε]")).unwrap();
    assert!(row.contains("fail    fail"), "{row}");
    assert!(row.contains(r#"counterexample {"axiom":"crossed module identity in H","tuple":[1,0]}"#), "{row}");
}

#[test]
fn non_symmetric_bimodule_is_rejected_with_indices() {
    let text = r#"{"version":"hopfhomology/1","scalar":"Q",
        "objects":[{"name":"E","kind":"construction","call":"galois_field_extension_sqrt(2)"},
                   {"name":"W","kind":"construction","call":"twisted(E)"}],
        "tasks":[{"op":"verify_theorem_izo2","expect":"fail","args":{"bimodule":"W"}}]}"#;
    let p = temp_instance("twisted.json", text);
    let out = run(&["run", p.to_str().unwrap()], None);
    assert!(out.status.success());
    let human = String::from_utf8(out.stdout).unwrap();
    assert!(human.contains("counterexample {\"center_basis\":1,\"module_basis\":0}"), "{human}");
}

#[test]
fn parse_errors() {
    let bad_rational = r#"{"version":"hopfhomology/1","scalar":"Q",
        "objects":[{"name":"m","kind":"matrix","rows":[["1/0"]]}],"tasks":[]}"#;
    let out = run(&["validate", temp_instance("bad.json", bad_rational).to_str().unwrap()], None);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("\"m\""), "{err}");
    let bad_scalar = r#"{"version":"hopfhomology/1","scalar":"F2","objects":[],"tasks":[]}"#;
    let out = run(&["run", temp_instance("f2.json", bad_scalar).to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_report_and_list_ops() {
    let p = temp_instance("empty.json", r#"{"version":"hopfhomology/1","scalar":"Q","objects":[],"tasks":[]}"#);
    let out = run(&["report", p.to_str().unwrap(), "--format=human"], None);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "hopfhomology report (hopfhomology/1) for empty.json\nno tasks\n"
    );
    let out = run(&["list-ops"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    for op in hopfhomology::ops::OPS {
        assert!(text.lines().any(|l| l.starts_with(op.name)), "{} missing from list-ops", op.name);
    }
}
