use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use semiglue_cli::report::ReportDocument;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

fn semiglue(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_semiglue"));
    cmd.args(args)
        .env_remove("SEMIGLUE_KMAX")
        .env_remove("SEMIGLUE_JSON")
        .env_remove("SEMIGLUE_DEGREE_BOUND")
        .env_remove("SEMIGLUE_WORK_LIMIT");
    cmd
}

fn run(sub: &str, file: &str, extra: &[&str]) -> Output {
    let path = corpus(file);
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    semiglue(&args).output().unwrap()
}

fn expect(sub: &str, file: &str, extra: &[&str], code: i32, needles: &[&str]) {
    let out = run(sub, file, extra);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{sub} {file}\n{stdout}{stderr}"
    );
    for n in needles {
        assert!(
            stdout.contains(n) || stderr.contains(n),
            "{sub} {file}: missing {n:?}\n{stdout}{stderr}"
        );
    }
}

#[test]
fn lattice_points() {
    expect(
        "lattice-point",
        "twisted_pair.txt",
        &[],
        0,
        &["u = (1,1,0)"],
    );
    expect("lattice-point", "prime_pair.txt", &[], 0, &["u = (1,1,2)"]);
    expect(
        "lattice-point",
        "twisted_pair_shifted.txt",
        &[],
        0,
        &["u = (1,2,0)"],
    );
}

#[test]
fn check_gluing() {
    expect(
        "check-gluing",
        "twisted_pair.txt",
        &[],
        0,
        &["is_gluing = true", "mu(I_C) = 7"],
    );
    expect(
        "check-gluing",
        "shifted_pair.txt",
        &[],
        0,
        &["is_gluing = true", "rho = x4 - y4"],
    );
    expect(
        "check-gluing",
        "shifted_pair_unit.txt",
        &[],
        1,
        &["is_gluing = false"],
    );
    expect(
        "check-gluing",
        "twisted_pair_shifted.txt",
        &[],
        1,
        &["is_gluing = false"],
    );
    expect(
        "check-gluing",
        "linear_pair.txt",
        &[],
        1,
        &["is_gluing = false"],
    );
    expect(
        "check-gluing",
        "shifted_pair_unit.txt",
        &["--k1", "2", "--k2", "1"],
        0,
        &["is_gluing = true"],
    );
}

#[test]
fn prime_pair_glues_with_its_multipliers() {
    expect(
        "check-gluing",
        "prime_pair.txt",
        &[],
        0,
        &["is_gluing = true", "A·(0,0,0,1) = 2·u", "mu(I_C) = 6"],
    );
}

#[test]
fn find_gluing() {
    expect(
        "find-gluing",
        "no_coprime_pair.txt",
        &[],
        3,
        &["no coprime pair within bound 50"],
    );
    expect(
        "find-gluing",
        "no_coprime_pair.txt",
        &["--kmax", "7"],
        3,
        &["no coprime pair within bound 7"],
    );
    expect(
        "find-gluing",
        "twisted_pair.txt",
        &[],
        0,
        &["is_gluing = true"],
    );
}

#[test]
fn audit() {
    expect(
        "audit",
        "twisted_pair.txt",
        &[],
        0,
        &["(a) coprime multipliers: yes", "(d) A·X = B·Y: yes"],
    );
}

#[test]
fn levels() {
    expect("level", "level_twisted.txt", &[], 0, &["= 6"]);
    expect("level", "level_shifted.txt", &[], 1, &["is not in I_C"]);
}

#[test]
fn embeddings() {
    expect(
        "embed-glue",
        "embed_cubics.txt",
        &[],
        0,
        &["rho = x3 - y1", "is_gluing = true"],
    );
    expect(
        "embed-glue",
        "embed_steps_12.txt",
        &[],
        0,
        &["mu(I_A) = 3", "is_gluing = true"],
    );
    expect(
        "embed-glue",
        "embed_steps_14.txt",
        &[],
        0,
        &["mu(I_A) = 5", "is_gluing = true"],
    );
}

#[test]
fn toric_ideals() {
    expect(
        "toric",
        "twisted_cubic.txt",
        &[],
        0,
        &["mu = 3", "x2^2 - x1*x3"],
    );
    expect("toric", "prime_b.txt", &[], 0, &["mu = 2"]);
    expect("toric", "single.txt", &[], 0, &["mu = 0"]);
    expect(
        "toric",
        "twisted_cubic.txt",
        &["--degree-bound", "9"],
        0,
        &["0 outside I_A"],
    );
}

#[test]
fn input_errors() {
    expect(
        "lattice-point",
        "mismatched.txt",
        &[],
        2,
        &["length 2, expected 3"],
    );
    expect("lattice-point", "does_not_exist.txt", &[], 2, &["reading"]);
    expect("check-gluing", "twisted_cubic.txt", &[], 2, &["missing B"]);
    let out = semiglue(&["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_round_trips() {
    let out = run("check-gluing", "twisted_pair.txt", &["--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.command, "check-gluing");
    assert_eq!((doc.outcome.as_str(), doc.exit_code), ("yes", 0));
    assert_eq!(doc.result["is_gluing"], true);
    assert_eq!(doc.result["u"], serde_json::json!([1, 1, 0]));
    assert_eq!(doc.provenance.bounds.kmax, 50);
    assert_eq!(doc.provenance.input_sha256.len(), 64);
    assert_eq!(doc.to_json().trim(), text.trim());

    let again = run("check-gluing", "twisted_pair.txt", &["--json"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn json_error_report() {
    let out = run("lattice-point", "mismatched.txt", &["--json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = ReportDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.outcome, "input-error");
    assert!(doc.result["error"].as_str().unwrap().contains("length"));
}

#[test]
fn environment_sets_bounds() {
    let path = corpus("no_coprime_pair.txt");
    let out = semiglue(&["find-gluing", path.to_str().unwrap()])
        .env("SEMIGLUE_KMAX", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("within bound 12"));
}

#[test]
fn reads_stdin() {
    let mut child = semiglue(&["lattice-point", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(
            br#"{"A": [[4,0,0],[3,1,0],[2,2,0],[1,3,0]], "B": [[3,3,0],[3,2,1],[3,1,2],[3,0,3]]}"#,
        )
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("u = (1,1,0)"));
}

#[test]
fn membership_and_betti() {
    let mut child = semiglue(&["membership", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"A:\n2 0\n0 2\nv: 3 2\n")
        .unwrap();
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(1));

    let mut child = semiglue(&["betti-glue", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"betti_a: 1 3 2\nbetti_b: 1 3 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("beta(C) = (1,7,19,25,16,4)"));
}
