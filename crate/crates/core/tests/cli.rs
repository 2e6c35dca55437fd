//! End-to-end tests of the `wstable` binary: JSON fixtures, text output and
//! exit codes.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn wstable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wstable")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Fixture name, arguments and expected exit code.
const JSON_CASES: &[(&str, &[&str], i32)] = &[
    ("closure_o16", &["--weights", "3,2,1", "--json", "closure", "x1*x2*x3^2"], 0),
    ("bgens_o7", &["--weights", "2,1", "--json", "bgens", "x1^2, x1*x2^2, x2^4"], 0),
    ("is_wstable_o6", &["--weights", "2,1", "--json", "is-wstable", "x1, x2^2"], 0),
    ("tree_o9", &["--weights", "4,2,1", "--json", "tree", "x2^2*x3"], 0),
    ("tree_ideal_tree4", &["--json", "tree-ideal", "x^3, x^2*y, x*y^3, x*y^2*z"], 0),
    ("catalan_o10", &["--weights", "3,2,1", "--json", "catalan", "x1*x2^3*x3^2"], 0),
    ("hilbert_o16", &["--weights", "3,2,1", "--json", "--closure", "--expand-to", "12", "hilbert", "x1*x2*x3^2"], 0),
    ("stanley_o16", &["--weights", "3,2,1", "--json", "--closure", "stanley", "x1*x2*x3^2"], 0),
    ("poincare_o13", &["--weights", "3,2,1", "--json", "--closure", "poincare", "x1*x2*x3^2"], 0),
    ("betti_o17", &["--weights", "3,2,1", "--json", "--closure", "betti", "x1*x2*x3^2"], 0),
    ("cone_tree4", &["--json", "cone", "x^3, x^2*y, x*y^3, x*y^2*z"], 0),
    ("weight_vector_tree4", &["--json", "weight-vector", "x^3, x^2*y, x*y^3, x*y^2*z"], 0),
    ("weight_vector_counter", &["--json", "weight-vector", "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4"], 3),
];

#[test]
fn json_output_matches_fixtures() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    for (name, args, code) in JSON_CASES {
        let out = wstable(args);
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", stderr(&out));
        let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let text = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        let want: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(got, want, "{name}");
        let keys: Vec<&str> = got.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "input", "weights", "result"], "{name}");
    }
}

#[test]
fn catalan_text_is_byte_exact() {
    let out = wstable(&["--weights", "3,2,1", "catalan", "x1*x2^3*x3^2"]);
    let rows = [
        "1 0 0", "0 0 0", "0 0 0", "1 0 0", "0 0 0", "0 1 0", "1 0 0", "0 1 0", "0 1 0", "1 1 0", "0 1 2", "0 2 3",
        "1 1 0", "0 0 0",
    ];
    let want: String = rows.iter().map(|r| format!("| {r} |\n")).collect();
    assert_eq!(stdout(&out), want);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn closure_text_lists_generators() {
    let out = wstable(&["--weights", "3,2,1", "closure", "x1*x2*x3^2"]);
    assert_eq!(stdout(&out), "x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3^2\n");
    let letters = wstable(&["--weights", "2,1", "closure", "y^2"]);
    assert_eq!(stdout(&letters), "x, y^2\n");
}

#[test]
fn poincare_text_matches_worked_example() {
    let out = wstable(&["--weights", "3,2,1", "--closure", "poincare", "x1*x2*x3^2"]);
    assert_eq!(stdout(&out).trim_end(), "2*t^12*u^3 + t^11*u^2 + 3*t^10*u^2 + 2*t^9*u^2 + t^9*u + t^8*u + 3*t^7*u");
}

#[test]
fn weight_vector_text() {
    let out = wstable(&["weight-vector", "x^3, x^2*y, x*y^3, x*y^2*z"]);
    assert_eq!((stdout(&out).trim_end(), out.status.code()), ("5,3,1", Some(0)));
    let out = wstable(&["weight-vector", "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4"]);
    assert_eq!((stdout(&out).trim_end(), out.status.code()), ("not principally w-stable", Some(3)));
}

#[test]
fn input_can_come_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wstable"))
        .args(["--weights", "3,2,1", "closure", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x1*x2*x3^2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3^2\n");
}

#[test]
fn exit_codes() {
    let parse_error = wstable(&["--weights", "2,1", "closure", "x1, x2^"]);
    assert_eq!(parse_error.status.code(), Some(1));
    assert!(stderr(&parse_error).contains("column 8"), "{}", stderr(&parse_error));

    assert_eq!(wstable(&["frobnicate", "x"]).status.code(), Some(1));
    assert_eq!(wstable(&["--weights", "1,2", "closure", "x1"]).status.code(), Some(1));
    assert_eq!(wstable(&["--weights", "1,1,1", "--nvars", "2", "closure", "x1"]).status.code(), Some(1));

    let unstable = wstable(&["--weights", "2,1", "hilbert", "x1*x2"]);
    assert_eq!(unstable.status.code(), Some(2));
    assert!(stderr(&unstable).contains("not (2,1)-stable"));
    assert_eq!(wstable(&["cone", "x2"]).status.code(), Some(2));

    let no = wstable(&["--weights", "2,1", "is-wstable", "x2"]);
    assert_eq!((stdout(&no).trim_end(), no.status.code()), ("false", Some(3)));
    let yes = wstable(&["--weights", "2,1", "is-wstable", "x1, x2^2"]);
    assert_eq!((stdout(&yes).trim_end(), yes.status.code()), ("true", Some(0)));
}

#[test]
fn help_goes_to_stdout() {
    let out = wstable(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    for cmd in [
        "closure", "bgens", "is-wstable", "tree", "tree-ideal", "catalan", "hilbert", "stanley", "poincare", "betti",
        "cone", "weight-vector",
    ] {
        assert!(stdout(&out).contains(cmd), "help lacks {cmd}");
    }
}
