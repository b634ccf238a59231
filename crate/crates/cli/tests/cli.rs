use std::process::{Command, Output};

use g2forms::Verdict;

fn g2forms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2forms")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_exit_codes() {
    let o = g2forms(&["classify", "A_{4,8}+e(1,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Exists"));

    let o = g2forms(&["classify", "A_{4,10}+e(2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("orbit-sign"));

    let o = g2forms(&["classify", "A_{4,99}+e(2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = g2forms(&["classify", "r3mu^{0}+e(2)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_json_parses_back() {
    let o = g2forms(&["--json", "classify", "A_{4,9}^{1}+r3mu^{-1/4}"]);
    assert_eq!(o.status.code(), Some(1));
    let v = Verdict::from_json(&stdout(&o)).unwrap();
    assert!(!v.exists);
    assert_eq!(v.obstruction.unwrap().tag(), "discriminant");
}

#[test]
fn explain_shows_the_bound() {
    let o = g2forms(&["classify", "--explain", "A_{4,2}^{-2}+h3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("= 4 + 2 = 6"));
}

#[test]
fn cohomology_output() {
    let o = g2forms(&["cohomology", "A_{4,8}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1,0,1,1)");
    let o = g2forms(&["--json", "cohomology", "h3"]);
    assert_eq!(serde_json::from_str::<Vec<usize>>(&stdout(&o)).unwrap(), vec![2, 2, 1]);
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (pair, route) in [
        ("r2+r2+r3mu^{1}", "exceptional-basis"),
        ("A_{4,1}+e(2)", "symplectic-subspace"),
        ("A_{4,7}+r3", "h3-kernel-generic"),
        ("A_{4,12}+so(3)", "contact"),
    ] {
        let path = dir.path().join("cert.json");
        let p = path.to_str().unwrap();
        let o = g2forms(&["construct", pair, "-o", p, "--route"]);
        assert_eq!(o.status.code(), Some(0), "{pair}");
        assert_eq!(stdout(&o).trim(), route);
        let o = g2forms(&["verify", p]);
        assert_eq!(o.status.code(), Some(0), "{pair}");
        assert!(stdout(&o).starts_with("valid"));
    }
}

#[test]
fn classify_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    let o = g2forms(&["classify", "A_{4,8}+r2+R", "--certificate", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(g2forms(&["verify", p]).status.code(), Some(0));
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    assert_eq!(g2forms(&["construct", "A_{4,1}+e(2)", "-o", p]).status.code(), Some(0));
    let mut cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // swap the algebra for one where the form is not closed
    let other = g2forms(&["construct", "A_{4,12}+so(3)"]);
    let other: serde_json::Value = serde_json::from_str(&stdout(&other)).unwrap();
    cert["algebra"] = other["algebra"].clone();
    std::fs::write(&path, cert.to_string()).unwrap();
    assert_eq!(g2forms(&["verify", p]).status.code(), Some(1));
}

#[test]
fn construct_refuses_negative_pairs() {
    let o = g2forms(&["construct", "A_{4,1}+h3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn catalog_and_sweep() {
    let o = g2forms(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("A_{4,9}") && s.contains("−1 < α ≤ 1"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pairs.txt");
    std::fs::write(&path, "# small grid\nA_{4,1}+e(2)\nA_{4,1}+h3\nR4+R3\n").unwrap();
    let o = g2forms(&["--json", "sweep", "--params", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["pairs"], 3);
    assert_eq!(v["summary"]["exists"], 2);
    assert_eq!(v["summary"]["passed"], 2);
}
