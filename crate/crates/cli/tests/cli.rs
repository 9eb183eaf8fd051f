use std::fs;
use std::process::{Command, Output};

fn birack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birack")).args(args).env_remove("BIRACK_WORKERS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_classical_passes() {
    let o = birack(&["check", "--builtin", "R5_40", "--theory", "classical"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("result: pass"));
}

#[test]
fn check_biquandle_fails_with_witness() {
    let o = birack(&["check", "--builtin", "R5_40", "--biquandle"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL s-biquandle  witness x=1"), "{}", stdout(&o));
}

#[test]
fn check_json_round_trips() {
    let o = birack(&["check", "--builtin", "BR6_125", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: birack::algebra::TheoryReport = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report.passed);
    assert_eq!(report.birack.as_deref(), Some("BR6_125"));
}

#[test]
fn malformed_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "name: X\nU(s) = ((1 2), (1 2))\nD(s) = ((1 2), oops)\n").unwrap();
    let o = birack(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn file_source_with_name() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.txt");
    let text = birack::catalog::to_text(&birack::catalog::builtins());
    fs::write(&path, text).unwrap();
    let p = path.to_str().unwrap();
    let o = birack(&["poly", "--braid", "s1 s1 s1", "--file", p, "--name", "R6_114"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let direct = birack(&["poly", "--braid", "s1 s1 s1", "--builtin", "R6_114"]);
    assert_eq!(stdout(&o), stdout(&direct));

    let ambiguous = birack(&["poly", "--braid", "s1", "--file", p]);
    assert_eq!(ambiguous.status.code(), Some(1));
}

#[test]
fn poly_examples() {
    let cases: [(&[&str], &str); 3] = [
        (&["--braid", "s1 s1 s1", "--builtin", "R5_40"], "9t + 11"),
        (&["--braid-macro", "fig8", "--builtin", "BR6_125", "--refined"], "3t^2 + 3t + (3s^2+3)"),
        (&["--braid-macro", "bigelow2", "--builtin", "R5_40"], "3567t + 7273"),
    ];
    for (args, expected) in cases {
        let mut full = vec!["poly"];
        full.extend_from_slice(args);
        let o = birack(&full);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim_end(), expected);
    }
}

#[test]
fn poly_oracle_agrees() {
    let o = birack(&["poly", "--braid", "s1 -s2 s1 -s2", "--builtin", "R6_114", "--oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn poly_braid_file_and_strands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    fs::write(&path, "s1^3\n").unwrap();
    let o = birack(&["poly", "--braid-file", path.to_str().unwrap(), "--builtin", "R5_40"]);
    assert_eq!(stdout(&o).trim_end(), "9t + 11");
    let o = birack(&["poly", "--braid", "s3", "--strands", "3", "--builtin", "R5_40"]);
    assert_eq!(o.status.code(), Some(1));
    let o = birack(&["poly", "--braid", "s1 x", "--builtin", "R5_40"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("byte 3"), "{}", stderr(&o));
}

#[test]
fn poly_json_schema() {
    let o = birack(&["poly", "--braid-macro", "trefoil", "--builtin", "BR6_125", "--refined", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["strands"], 2);
    assert_eq!(v["writhe"], 3);
    let poly: birack::invariant::BirackPolynomial = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(poly.to_string(), v["polynomial"].as_str().unwrap());
    assert!(poly.refined().is_some());
}

#[test]
fn budget_refusal_exits_three() {
    let o = birack(&["poly", "--braid-macro", "bigelow1", "--builtin", "R6_114", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("46656"), "{}", stderr(&o));
}

#[test]
fn verify_all_cells() {
    let o = birack(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("26/26 cells match"));
}

#[test]
fn verify_is_worker_independent() {
    let one = birack(&["verify", "--workers", "1"]);
    let eight = birack(&["verify", "--workers", "8"]);
    assert_eq!(one.stdout, eight.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_birack")).arg("verify").env("BIRACK_WORKERS", "3").output().unwrap();
    assert_eq!(one.stdout, env.stdout);
}

#[test]
fn tampered_golden_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.tsv");
    let tampered = birack::golden::EMBEDDED.replacen("9t + 11", "9t + 12", 1);
    fs::write(&path, tampered).unwrap();
    let o = birack(&["verify", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("expected \"9t + 12\", got \"9t + 11\""), "{}", stdout(&o));

    fs::write(&path, "table1\ttrefoil\tR5_40\n").unwrap();
    let o = birack(&["verify", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_sizes() {
    let o = birack(&["enumerate", "-n", "1", "--mode", "rack"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(birack::catalog::parse_biracks(&stdout(&o)).unwrap().len(), 1);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("racks3.txt");
    let o = birack(&["enumerate", "-n", "3", "--mode", "rack", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(birack::catalog::load(&path).unwrap().len(), 6);

    let o = birack(&["enumerate", "-n", "9", "--mode", "birack"]);
    assert_eq!(o.status.code(), Some(1));
    let o = birack(&["enumerate", "-n", "4", "--mode", "birack", "--node-budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn info_reports_period() {
    for (name, k) in [("R5_40", 2), ("R6_114", 2), ("BR6_125", 3)] {
        let o = birack(&["info", "--builtin", name]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(&format!("period k = {k}")), "{}", stdout(&o));
    }
    let o = birack(&["info", "--builtin", "BR6_125", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 6);
    assert_eq!(v["sub_biracks"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(birack(&["bogus"]).status.code(), Some(1));
    assert_eq!(birack(&["poly", "--builtin", "R5_40"]).status.code(), Some(1));
    assert_eq!(birack(&["check", "--builtin", "R9"]).status.code(), Some(1));
    assert_eq!(birack(&["check", "--builtin", "R5_40", "--theory", "nope"]).status.code(), Some(1));
    assert_eq!(birack(&["--help"]).status.code(), Some(0));
}
