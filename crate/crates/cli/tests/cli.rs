use std::fs;
use std::process::{Command, Output};

use multdisc_cli::table::Table;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multdisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn sums_writes_expected_columns() {
    let o = run(&["sums", "-f", "counterexample-g", "-n", "10000"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    assert_eq!(t.header, ["x", "S", "abs-max", "mean"]);
    let last = t.rows.last().unwrap();
    assert_eq!(last[0].to_string(), "10000");
    assert_eq!(last[1].to_string(), "0");
    assert_eq!(last[2].to_string(), "1");
}

#[test]
fn verify_g_passes_to_ten_million() {
    let o = run(&["verify-g", "--limit", "10000000"]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn sigma0_rejects_counterexample_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    fs::write(&path, r#"{"kind": "builtin", "builtin": "counterexample-g"}"#).unwrap();
    let o = run(&["sigma0", "-f", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("Lemma hypothesis violated"), "{}", stderr(&o));
}

#[test]
fn sigma0_reports_dyadic_root() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    fs::write(&path, r#"{"kind": "completely-multiplicative", "prime-values": {"2": -1}}"#).unwrap();
    let o = run(&["sigma0", "-f", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    assert_eq!(t.header, ["k0", "alpha", "sigma0"]);
    assert_eq!(t.rows[0][0].to_string(), "3");
}

#[test]
fn missing_and_malformed_specs_fail() {
    let o = run(&["sums", "-f", "/nonexistent/spec.json", "-n", "100"]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error:"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"kind": "completely-multiplicative", "prime-values": {"2": 0}}"#).unwrap();
    let o = run(&["sums", "-f", path.to_str().unwrap(), "-n", "100"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("value outside"), "{}", stderr(&o));

    let o = run(&["sums", "-f", "zeta", "-n", "100"]);
    assert!(!o.status.success());
}

#[test]
fn random_study_is_reproducible_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = run(&["random-study", "--c", "0.5", "--seeds", "3,4", "-n", "100000", "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let first = fs::read_to_string(&a).unwrap();
    assert_eq!(first, fs::read_to_string(&b).unwrap());
    assert!(!first.contains('\r'));
    let t = Table::from_csv_str(&first).unwrap();
    assert_eq!(t.rows.len(), 2);
    assert_eq!(t.to_csv_string(), first);
}

#[test]
fn dirichlet_and_probe_tables() {
    let o = run(&["dirichlet", "-f", "one", "--sigma", "2", "-n", "100000"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    let direct = t.column("direct").unwrap();
    let v: f64 = t.rows[0][direct].to_string().parse().unwrap();
    assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-4);

    let o = run(&["probe", "-f", "liouville", "--c", "-1", "--s", "2", "-n", "100000"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    assert!(t.column("composed-bound").is_some());
}

#[test]
fn search_and_hap() {
    let o = run(&["search", "-n", "10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    assert_eq!(t.rows.len(), 9);
    assert_eq!(t.rows[8][1].to_string(), "2");
    assert_eq!(t.rows[7][1].to_string(), "1");

    let o = run(&["hap", "-f", "counterexample-g", "-n", "1000", "-d", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = Table::from_csv_str(&stdout(&o)).unwrap();
    assert_eq!(t.header, ["d", "n", "abs-sum"]);
    assert_eq!(t.rows[1][2].to_string(), "500");
}
