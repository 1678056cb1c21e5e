//! End-to-end runs of the `simperm` binary: output text and exit codes.

use std::process::{Command, Output};

fn simperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = simperm(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> Option<i32> {
    simperm(args).status.code()
}

#[test]
fn check_reports_the_class() {
    let out = stdout_of(&["check", "6,5,4,1,3,2"]);
    assert!(out.starts_with("MixedSimple s=1 q=3\n"), "{out}");
    assert!(out.contains("block permutation: 2,1"));
    assert!(out.contains("{1..3} beta") && out.contains("{4..6} alpha"));
    assert_eq!(stdout_of(&["check", "1"]), "Pow2Simple\n");
    assert_eq!(stdout_of(&["check", "(1,3,2)"]), "OddSimple alpha\n");
    assert_eq!(stdout_of(&["check", "(1,2,3)"]), "OddSimple beta\n");
    assert_eq!(stdout_of(&["check", "2,3,4,1"]), "NotSimple\n");
    assert_eq!(exit_code(&["check", "2,2,3"]), Some(2));
    assert_eq!(exit_code(&["check", "x"]), Some(2));
}

#[test]
fn enumerate_lists_order_six_and_ten() {
    let six = stdout_of(&["enumerate", "--order", "6"]);
    assert_eq!(six.lines().count(), 12);
    assert!(six.contains("5,6,4,2,3,1\n") && six.contains("6,5,4,1,3,2\n"));
    let ten = stdout_of(&["enumerate", "--order", "10", "--oracle"]);
    let lines: Vec<&str> = ten.lines().collect();
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[20], "MATCH");
    assert!(lines.contains(&"9,6,7,10,8,5,4,1,3,2"));
    assert_eq!(exit_code(&["enumerate", "--order", "8"]), Some(2));
    assert_eq!(exit_code(&["enumerate", "--order", "2"]), Some(2));
    assert_eq!(
        exit_code(&["enumerate", "--order", "14", "--oracle"]),
        Some(2)
    );
}

#[test]
fn enumerate_json_schema() {
    let out = stdout_of(&["enumerate", "--order", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["count"], 12);
    assert_eq!(v["perms"].as_array().unwrap().len(), 12);
    assert_eq!(v["perms"][0], serde_json::json!([4, 5, 6, 3, 1, 2]));
    assert!(v.get("oracle").is_none());
    let out = stdout_of(&["enumerate", "--order", "6", "--json", "--oracle"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["oracle"], "MATCH");
}

#[test]
fn branch_prints_cycles() {
    assert_eq!(
        stdout_of(&["branch", "mixed_theta", "2"]),
        "(1,6,3,5,2,4)\n(1,10,5,8,3,7,2,9,4,6)\n"
    );
    assert_eq!(
        stdout_of(&["branch", "pow2_theta", "3"]),
        "(1)\n(1,2)\n(1,3,2,4)\n"
    );
    assert_eq!(exit_code(&["branch", "nonsense", "2"]), Some(2));
    assert_eq!(exit_code(&["branch", "pow2_phi", "0"]), Some(2));
}

#[test]
fn markov_edges_json_and_dot() {
    assert_eq!(
        stdout_of(&["markov", "2,3,4,1"]),
        "J1 -> J2\nJ2 -> J3\nJ3 -> J1\nJ3 -> J2\nJ3 -> J3\n"
    );
    assert_eq!(
        stdout_of(&["markov", "2,1", "--json"]),
        "{\"vertices\":1,\"edges\":[[1,1]]}\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let echoed = stdout_of(&["markov", "6,4,5,1,2,3", "--dot", path.to_str().unwrap()]);
    assert_eq!(echoed.trim_end(), path.to_str().unwrap());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph markov {\n  J1;\n"));
    assert_eq!(dot.matches(" -> ").count(), 9);
    // byte-identical on a second run
    let again = dir.path().join("h.dot");
    stdout_of(&["markov", "6,4,5,1,2,3", "--dot", again.to_str().unwrap()]);
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&again).unwrap()
    );
    assert_eq!(exit_code(&["markov", "1,2"]), Some(2));
    assert_eq!(exit_code(&["markov", "1"]), Some(2));
}

#[test]
fn forces_gives_verdict_and_witness() {
    assert_eq!(
        stdout_of(&["forces", "2,3,4,1", "3"]),
        "YES period 3 forced\nloop: J1 J2 J3\norbit: 7/4 -> 11/4 -> 15/4\n"
    );
    assert_eq!(stdout_of(&["forces", "5,4,2,1,3", "3"]), "NO\n");
    assert!(stdout_of(&["forces", "5,4,2,1,3", "5"]).starts_with("YES period 5 forced\n"));
    assert_eq!(exit_code(&["forces", "2,1,3", "2"]), Some(2));
    assert_eq!(exit_code(&["forces", "2,3,1", "0"]), Some(2));
}

#[test]
fn primitive_tabulates_branches() {
    assert_eq!(
        stdout_of(&["primitive", "2,3,4,1"]),
        "x < 1: f(x) = 2\nJ1 [1,2]: f(x) = 1x + 1\nJ2 [2,3]: f(x) = 1x + 1\nJ3 [3,4]: f(x) = -3x + 13\nx >= 4: f(x) = 1\n"
    );
}

#[test]
fn paste_and_reverse() {
    assert_eq!(
        stdout_of(&["paste", "left", "3,1,2", "1,2,3"]),
        "6,4,5,1,2,3\n"
    );
    assert_eq!(
        stdout_of(&["paste", "right", "3,1,2", "3,1,2"]),
        "3,1,2,6,4,5\n"
    );
    assert_eq!(
        stdout_of(&["paste", "cycles", "(1,3)", "(2,4)"]),
        "(1,3,2,4)\n"
    );
    assert_eq!(exit_code(&["paste", "cycles", "(1,2)", "(2,3)"]), Some(2));
    assert_eq!(exit_code(&["paste", "sideways", "1", "1"]), Some(2));
    assert_eq!(stdout_of(&["reverse", "2,3,1"]), "1,3,2\n");
    assert_eq!(stdout_of(&["reverse", "(1,3,2)", "--cycle"]), "(1,2,3)\n");
}

#[test]
fn cmp_prints_the_ordering() {
    assert_eq!(stdout_of(&["cmp", "3", "8"]), "3 ⊲ 8\n");
    assert_eq!(stdout_of(&["cmp", "8", "3"]), "3 ⊲ 8\n");
    assert_eq!(stdout_of(&["cmp", "6", "4"]), "6 ⊲ 4\n");
    assert_eq!(stdout_of(&["cmp", "2", "2"]), "2 = 2\n");
    assert_eq!(exit_code(&["cmp", "0", "2"]), Some(2));
    assert_eq!(exit_code(&["cmp", "-1", "2"]), Some(2));
}

#[test]
fn genealogy_walks_the_branch() {
    assert_eq!(
        stdout_of(&["genealogy", "3,4,2,1"]),
        "Pow2Simple\nbranch: pow2_theta\npredecessors: (1) ≺ (1,2)\nsuccessor: (1,5,3,7,2,6,4,8)\n"
    );
    let mixed = stdout_of(&["genealogy", "(1,8,3,9,4,7,2,10,5,6)"]);
    assert!(mixed.contains("branch: mixed_phi"));
    assert!(mixed.contains("square: beta ◇| beta"));
    assert!(mixed.contains("predecessor: (1,5,2,6,3,4)"));
    let odd = stdout_of(&["genealogy", "5,4,2,1,3"]);
    assert!(odd.contains("predecessor: (1,3,2)"));
    // a simple permutation outside the named branches
    let other = stdout_of(&["genealogy", "5,6,4,2,3,1"]);
    assert!(other.contains("square: alpha ◇| alpha") && other.contains("index: 5"));
    assert!(!other.contains("branch:"));
    assert_eq!(stdout_of(&["genealogy", "2,3,4,1"]), "NotSimple\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&[]), Some(2));
    assert_eq!(exit_code(&["frobnicate"]), Some(2));
    assert_eq!(exit_code(&["--help"]), Some(0));
}
