//! The `semihilbert` binary end to end: files, formats and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use semihilbert::bounds::BoundReport;
use semihilbert::instance::Instance;
use semihilbert::radius::RadiusEstimate;
use semihilbert::suite::SuiteReport;

const JORDAN: &str = r#"{
  "dim": 2,
  "A": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
  "T": [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semihilbert")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn radius_of_jordan_block() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "jordan2.json", JORDAN);
    let out = run(&["radius", "--in", &input]);
    assert_eq!(out.status.code(), Some(0));
    let rad: RadiusEstimate = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rad.contains(0.5) && rad.width() <= 1e-5, "{rad:?}");
}

#[test]
fn range_cloud_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "jordan2.json", JORDAN);
    let csv_path = dir.path().join("cloud.csv");
    let out = run(&["range", "--in", &input, "--n-theta", "360", "--out", csv_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["theta", "re", "im"]);
    let mut rows = 0;
    let mut boundary = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        let re: f64 = rec[1].parse().unwrap();
        let im: f64 = rec[2].parse().unwrap();
        assert!(re * re + im * im <= 0.25 + 1e-9);
        boundary += usize::from(!rec[0].is_empty());
        rows += 1;
    }
    assert!(rows >= 360);
    assert_eq!(boundary, 360);
}

#[test]
fn gen_is_byte_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&["gen", "--dim", "4", "--rank-a", "2", "--seed", "11", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let inst = Instance::read(&a).unwrap();
    assert_eq!(inst.to_json().as_bytes(), &ta[..]);
    assert!(inst.s.is_some());
}

#[test]
fn bounds_lists_every_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    run(&["gen", "--dim", "3", "--seed", "2", "--out", path.to_str().unwrap()]);
    let out = run(&["bounds", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: Vec<BoundReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 8 + 6 + 10);
    assert!(reports.iter().all(|r| r.holds));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--n",
        "6",
        "--dims",
        "2..4",
        "--seed",
        "1",
        "--grid-n",
        "360",
        "--samples",
        "200",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: SuiteReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.instances.len(), 6);
    assert!(report.counterexamples.is_empty());
    assert_eq!((report.config.dim_min, report.config.dim_max), (2, 4));
}

#[test]
fn verify_probe_construction() {
    let out = run(&["verify", "--n", "3", "--dims", "3", "--construction", "nonadjointable_probe", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.tallies.not_adjointable, 3);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--dims", "1..3"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--dim", "3", "--construction", "nonadjointable_probe", "--rank-a", "3"]).status.code(),
        Some(2)
    );

    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["radius", "--in", missing.to_str().unwrap()]).status.code(), Some(3));
    let garbage = write(dir.path(), "garbage.json", "{ not json");
    let out = run(&["radius", "--in", &garbage]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);

    let short =
        write(dir.path(), "short.json", r#"{"dim": 2, "A": [[[1,0],[0,0]]], "T": [[[0,0],[1,0]],[[0,0],[0,0]]]}"#);
    assert_eq!(run(&["radius", "--in", &short]).status.code(), Some(4));

    // A = diag(1, 0), T = [[1, 1], [0, 1]] has no A-adjoint.
    let probe = write(
        dir.path(),
        "probe.json",
        r#"{"dim": 2, "A": [[[1,0],[0,0]],[[0,0],[0,0]]], "T": [[[1,0],[1,0]],[[0,0],[1,0]]]}"#,
    );
    assert_eq!(run(&["bounds", "--in", &probe]).status.code(), Some(5));
}
