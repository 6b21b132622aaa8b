use std::fs;
use std::process::{Command, Output};

const GOLDEN: [&str; 2] = ["x^4*y", "x^7 + x*y^4"];

fn zp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zp"))
        .args(args)
        .output()
        .expect("zp runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn with_golden<'a>(cmd: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend(GOLDEN);
    v.extend(extra);
    v
}

#[test]
fn zeta_of_the_worked_example() {
    let o = zp(&with_golden("zeta", &[]));
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).lines().next(),
        Some("(5s^2+16s+8)/((4+7s)(2+5s)(1+s))")
    );
}

#[test]
fn poles_of_the_maximal_ideal() {
    let o = zp(&["poles", "x", "y"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-2 (order 1)\n");
}

#[test]
fn classify_lists_conditions() {
    let o = zp(&with_golden("classify", &["--check"]));
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in ["-1: cond1 (S1)", "-2/5: cond4 (E1)", "-1/2: none", "-4/7: cond3 (E3)"] {
        assert!(out.contains(line), "{out}");
    }
    assert!(out.contains("match"));
}

#[test]
fn dot_output() {
    let o = zp(&with_golden("principalize", &["--dot"]));
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("graph principalization {"));
    assert!(out.contains("E2 -- E3;"));
}

#[test]
fn output_is_reproducible() {
    let a = zp(&with_golden("verify", &["--json", "--seed", "5"]));
    let b = zp(&with_golden("verify", &["--json", "--seed", "5"]));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_intersection_counts() {
    let o = zp(&with_golden("verify", &[]));
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("E1: N=5 nu=2 m=2 n=3"), "{out}");
    assert!(out.contains("E2: N=6 nu=3 m=2 n=0"), "{out}");
    assert!(out.contains("E3: N=7 nu=4 m=1 n=1"), "{out}");

    let o = zp(&["verify", "x^5*y", "x^9 + y^6"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn family_and_realize() {
    let o = zp(&["family", "7", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("chain (5,2)(6,3)(7,4)"));
    assert!(out.contains("pole -4/7"));

    let o = zp(&["realize", "--", "-3/5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(a,b)=(5,3); verified pole -3/5\n");

    assert_eq!(code(&zp(&["realize", "--", "-7/5"])), 2);
    assert_eq!(code(&zp(&["realize", "--", "-5/2"])), 2);
    assert_eq!(code(&zp(&["realize", "0"])), 2);
    assert_eq!(code(&zp(&["family", "3", "5"])), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&zp(&["principalize", "x + 1"])), 2);
    assert_eq!(code(&zp(&["principalize", "x y"])), 2);
    assert_eq!(code(&zp(&["principalize", "0"])), 2);
    let o = zp(&["principalize", "y^2 - 2*x^2", "x^3"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("t^2-2"));
    assert_eq!(code(&zp(&with_golden("principalize", &["--max-blowups", "2"]))), 3);
}

#[test]
fn stored_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let o = zp(&with_golden("principalize", &["--json"]));
    assert_eq!(code(&o), 0);
    fs::write(&good, &o.stdout).unwrap();

    let g = good.to_str().unwrap();
    let o = zp(&["zeta", "--diagram-json", g]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("(5s^2+16s+8)/((4+7s)(2+5s)(1+s))"));
    assert_eq!(code(&zp(&["verify", "--diagram-json", g])), 0);

    // E2 gets numerical data that violates the ν ≤ N + 1 bound.
    let full = fs::read_to_string(&good).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&full).unwrap();
    let vertices = v["diagram"]["vertices"].as_array_mut().unwrap();
    let e2 = vertices.iter_mut().find(|x| x["id"] == "E2").unwrap();
    e2["nu"] = serde_json::json!(9);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, v.to_string()).unwrap();
    assert_eq!(code(&zp(&["verify", "--diagram-json", bad.to_str().unwrap()])), 4);

    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{ not json").unwrap();
    assert_eq!(code(&zp(&["zeta", "--diagram-json", junk.to_str().unwrap()])), 2);
}

#[test]
fn generator_files_in_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    fs::write(&a, "# worked example\nx^4*y\nx^7 + x*y^4\n").unwrap();
    fs::write(&b, "x\ny\n").unwrap();
    let o = zp(&[
        "zeta",
        "--file",
        a.to_str().unwrap(),
        "--file",
        b.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let ia = out.find("a.txt").unwrap();
    let ib = out.find("b.txt").unwrap();
    assert!(ia < ib);
    assert!(out.contains("(5s^2+16s+8)/((4+7s)(2+5s)(1+s))"));
    assert!(out.contains("2/(2+s)"));
}
