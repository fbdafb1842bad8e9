//! The `hyp3` binary end to end: JSON on stdout, exit codes, determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn hyp3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyp3")).args(args).env_remove("HYP3_TOL").output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn theta_genus_one_at_i() {
    let o = hyp3(&["theta", "--genus", "1", "--char", "0,0", "--tau", "i", "--tol", "1e-12"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let re: f64 = v["results"]["value"]["re"].to_string().parse().unwrap();
    // π^{1/4} / Γ(3/4)
    assert!((re - 1.086_434_811_213_308).abs() < 1e-12);
}

#[test]
fn theta_genus_three_upper_triangle() {
    let o = hyp3(&["theta", "--genus", "3", "--char", "110;110", "--tau", "1.5i,0.3,0.1,1.2i,0.2,1.4i"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pass"], Value::Bool(true));
}

#[test]
fn every_subcommand_answers() {
    for args in [
        vec!["cones", "--cone", "K3+1"],
        vec!["cones", "--cone", "C4", "--char", "110;110", "--box", "2"],
        vec!["lot", "--cone", "K4"],
        vec!["lot", "--cone", "C4", "--roots", "1/3,1/4", "--verify"],
        vec!["lot", "--cone", "K3+1", "--secondary", "--roots", "1/3,1/4"],
        vec!["mann", "--coeffs", "1,1,1"],
        vec!["mann", "--coeffs", "1,-1,1,-1", "--order", "12"],
        vec!["family", "--u", "1/2+1/2i"],
        vec!["suite", "--criteria", "1"],
    ] {
        let o = hyp3(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json(&o)["pass"], Value::Bool(true), "{args:?}");
    }
}

#[test]
fn mann_three_ones_has_two_solutions() {
    let v = json(&hyp3(&["mann", "--coeffs", "1,1,1"]));
    assert_eq!(v["results"]["solutions"], 2);
}

#[test]
fn family_degree_is_reported() {
    let v = json(&hyp3(&["family", "--u", "1/3+1/3i", "--check", "degree"]));
    assert_eq!(v["results"]["degree"], 9);
}

#[test]
fn z2z4_reports_the_non_symplectic_matrix() {
    // The supplied S is not symplectic, so the command reports a failed check.
    let o = hyp3(&["z2z4"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let s = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "S symplectic").unwrap();
    assert_eq!(s["pass"], Value::Bool(false));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hyp3(&["family", "--u", "abc"]).status.code(), Some(2));
    assert_eq!(hyp3(&["lot", "--cone", "K9"]).status.code(), Some(2));
    assert_eq!(hyp3(&["mann", "--coeffs", "1"]).status.code(), Some(2));
    assert_eq!(hyp3(&[]).status.code(), Some(2));
    assert_eq!(hyp3(&["--help"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["family", "--u", "1/4+1/4i", "--check", "vanishing"];
    assert_eq!(hyp3(&args).stdout, hyp3(&args).stdout);
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("hyp3-cli-{}.json", std::process::id()));
    let o = hyp3(&["--quiet", "--out", path.to_str().unwrap(), "mann", "--coeffs", "1,1"]);
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, o.stdout);
    assert!(o.stderr.is_empty());
}
