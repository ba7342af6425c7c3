use std::path::PathBuf;
use std::process::Command;

use solvco::cli::{run, run_with_stdin, Outcome};
use solvco::io::parse_structure_file;

fn solvco(args: &[&str]) -> Outcome {
    run(std::iter::once("solvco").chain(args.iter().copied()))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("solvco-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn lines(o: &Outcome) -> Vec<&str> {
    o.stdout.lines().collect()
}

#[test]
fn hyperelliptic_cohomology_tsv() {
    let o = solvco(&["cohomology", "hyperelliptic4", "--reps", "--format", "tsv"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let l = lines(&o);
    assert!(l.contains(&"betti.1\t2"));
    assert!(l.contains(&"rep.1.1\te3"));
    assert!(l.contains(&"rep.1.2\te4"));
}

#[test]
fn tsv_output_is_stable() {
    let a = solvco(&["cohomology", "nakamura", "--reps", "--format", "tsv"]);
    let b = solvco(&["cohomology", "nakamura", "--reps", "--format", "tsv"]);
    assert_eq!(a, b);
}

#[test]
fn split_then_cohomology_pipeline() {
    let split = solvco(&[
        "split",
        "nakamura",
        "--complement",
        "1,2",
        "--kill",
        "compact",
    ]);
    assert_eq!(split.code, 0, "{}", split.stderr);
    let path = temp_file("tilde.txt", &split.stdout);
    let tilde = solvco(&["cohomology", path.to_str().unwrap(), "--format", "tsv"]);
    let base = solvco(&["cohomology", "nakamura", "--format", "tsv"]);
    assert_eq!(tilde.code, 0);
    assert_ne!(tilde.stdout, base.stdout);
    assert!(lines(&tilde).contains(&"betti.2\t5"));
    assert_eq!(
        parse_structure_file(&split.stdout).unwrap(),
        solvco::catalog::catalog_get("nakamura_tilde")
            .unwrap()
            .algebra
    );
}

#[test]
fn stdin_input() {
    let mut stdin = || Ok("dim 3\nd e3 = -1 e1^e2\n".to_string());
    let o = run_with_stdin(["solvco", "cohomology", "-"], &mut stdin);
    assert_eq!(o.code, 0);
    assert_eq!(
        lines(&o)[..4],
        ["betti 0 1", "betti 1 2", "betti 2 2", "betti 3 1"]
    );
}

#[test]
fn validate_reports_jacobi_violation() {
    let path = temp_file("bad.txt", "dim 3\nd e3 = -e1^e2\nd e1 = -e2^e3 - e1^e3\n");
    let o = solvco(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(
        o.stderr.contains("Jacobi identity fails on (e"),
        "{}",
        o.stderr
    );
}

#[test]
fn parse_errors_exit_3() {
    let path = temp_file("parse.txt", "dim 2\nd e1 = 1 e2^e1\n");
    let o = solvco(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.code, 3);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    assert_eq!(solvco(&["validate", "no-such-thing"]).code, 3);
    assert_eq!(solvco(&["frobnicate"]).code, 3);
    assert_eq!(
        solvco(&["split", "sol3", "--complement", "9", "--kill", "full"]).code,
        3
    );
    assert_eq!(solvco(&["catalog", "bogus"]).code, 3);
    assert_eq!(solvco(&["--help"]).code, 0);
}

#[test]
fn split_rejects_bad_complement() {
    let o = solvco(&["split", "sol3", "--complement", "2", "--kill", "full"]);
    assert_eq!(o.code, 1);
}

#[test]
fn info_reports_flag() {
    let o = solvco(&["info", "sol3", "--format", "tsv"]);
    assert_eq!(o.code, 0);
    assert!(lines(&o).contains(&"completely-solvable\tyes"));
    let o = solvco(&["info", "rot3"]);
    assert!(lines(&o).contains(&"completely-solvable no"));
    assert!(o.stdout.contains("witness ad(e1)"));
}

#[test]
fn almost_abelian_reports() {
    let b = temp_file("order3.txt", "3 3\n0 -1 0\n1 -1 0\n0 0 1\n");
    let o = solvco(&["almost-abelian", "--holonomy", b.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let l = lines(&o);
    assert!(l.contains(&"b1 2"));
    assert!(l.contains(&"order 3"));
    assert!(l.iter().any(|s| s.starts_with("mostow fails")));
    assert!(l.contains(&"betti 3 2"));

    let id = temp_file("id.txt", "2 2\n1 0\n0 1\n");
    let z = temp_file("rot.txt", "2 2\n0 2\n-2 0\n");
    let o = solvco(&[
        "almost-abelian",
        "--holonomy",
        id.to_str().unwrap(),
        "--derivation",
        z.to_str().unwrap(),
        "--scale",
        "pi",
        "--format",
        "tsv",
    ]);
    let l = lines(&o);
    assert!(l.contains(&"mostow.status\tfails"));
    assert!(l.contains(&"derham-valid\tno"));
    assert!(l.contains(&"betti.1\t3"));
}

#[test]
fn undetermined_exit_code() {
    // Companion of x^3 - x - 1: one real root, two complex roots off the unit circle.
    let b = temp_file("plastic.txt", "3 3\n0 0 1\n1 0 1\n0 1 0\n");
    let o = solvco(&["almost-abelian", "--holonomy", b.to_str().unwrap()]);
    assert_eq!(o.code, 2, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("mostow undetermined"));
}

#[test]
fn catalog_listing_and_dump() {
    let o = solvco(&["catalog"]);
    assert!(o.stdout.lines().any(|l| l.starts_with("nakamura_tilde\t")));
    let o = solvco(&["catalog", "hyperelliptic4"]);
    assert!(o.stdout.ends_with("dim 4\nd e1 = e2^e4\nd e2 = -e1^e4\n"));
    assert!(parse_structure_file(&o.stdout).is_ok());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_solvco");
    let out = Command::new(bin)
        .args(["cohomology", "abelian3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("betti 1 3"));
    let out = Command::new(bin)
        .args(["catalog", "bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
