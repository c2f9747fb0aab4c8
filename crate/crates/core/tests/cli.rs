use std::path::PathBuf;
use std::process::Command;

use flatmorse::cli::{run, EXIT_ERROR, EXIT_INCONSISTENT, EXIT_INVALID, EXIT_NOT_EQUIVALENT, EXIT_OK};
use flatmorse::io;
use flatmorse::samples;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn flatmorse(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("flatmorse").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn validate() {
    let (code, out, _) = flatmorse(&["validate", "-g", &fixture("reference_tree.json"), "-f", &fixture("reference_function.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("valid: 6 critical vertices, 5 critical edges"), "{out}");
    let (code, _, err) = flatmorse(&["validate", "-g", &fixture("seven_vertex_tree.json"), "-f", &fixture("nonmonotone.json")]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("NonMonotone"), "{err}");
}

#[test]
fn persist_both_ways() {
    let g = fixture("reference_tree.json");
    let f = fixture("reference_function.json");
    let (code, fast, _) = flatmorse(&["persist", "-g", &g, "-f", &f]);
    assert_eq!(code, EXIT_OK);
    let (code, oracle, _) = flatmorse(&["persist", "-g", &g, "-f", &f, "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(fast, oracle);
    assert_eq!(io::parse_diagram(&fast).unwrap(), samples::reference_diagram());
}

#[test]
fn realize_then_persist() {
    let dir = tempfile::tempdir().unwrap();
    let function = dir.path().join("f.json").display().to_string();
    let tree = fixture("reference_tree.json");
    let diagram = fixture("reference_diagram.json");
    for extra in [&[][..], &["--randomize-choices", "17"][..]] {
        let mut args = vec!["realize", "-g", &tree, "-d", &diagram, "-o", &function];
        args.extend_from_slice(extra);
        let (code, out, err) = flatmorse(&args);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.is_empty());
        let (code, out, _) = flatmorse(&["persist", "-g", &tree, "-f", &function]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(io::parse_diagram(&out).unwrap(), samples::reference_diagram());
    }
}

#[test]
fn realize_rejects_inconsistent_and_non_trees() {
    let (code, _, _) = flatmorse(&["realize", "-g", &fixture("path3.json"), "-d", &fixture("pair_1_5.json")]);
    assert_eq!(code, EXIT_INCONSISTENT);
    let (code, _, _) = flatmorse(&["realize", "-g", &fixture("path3.json"), "-d", &fixture("pair_1_2.json")]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = flatmorse(&["realize", "-g", &fixture("hexagon.json"), "-d", &fixture("pair_1_2.json")]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn count() {
    assert_eq!(flatmorse(&["count", "--simplices", "11", "--pairs", "5"]).1, "945\n");
    assert_eq!(flatmorse(&["count", "--simplices", "12", "--pairs", "1", "--betti1", "1"]).0, EXIT_OK);
    assert_eq!(flatmorse(&["count", "--simplices", "5", "--pairs", "3"]).0, EXIT_INVALID);
}

#[test]
fn equiv() {
    let g = fixture("seven_vertex_tree.json");
    let (a, b) = (fixture("pair_a_first.json"), fixture("pair_a_second.json"));
    let (code, out, _) = flatmorse(&["equiv", "-g", &g, &a, &b, "--relation", "persistence"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "persistence: equivalent\n"));
    let (code, _, _) = flatmorse(&["equiv", "-g", &g, &a, &b, "--relation", "forman"]);
    assert_eq!(code, EXIT_NOT_EQUIVALENT);
    let (code, out, _) = flatmorse(&["equiv", "-g", &g, &a, &b]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "persistence=yes forman=no homological=yes graph=no\n");
    let p = fixture("path3.json");
    let (code, _, _) = flatmorse(&["equiv", "-g", &p, &fixture("path3_early.json"), &fixture("path3_late.json"), "--relation", "persistence"]);
    assert_eq!(code, EXIT_NOT_EQUIVALENT);
}

#[test]
fn enumerate_and_achievable() {
    let (code, out, err) = flatmorse(&["enumerate", "--tree", &fixture("path3.json"), "--check-roundtrip"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1 + 6 + 3);
    assert!(err.contains("10/10"), "{err}");
    let (code, out, _) = flatmorse(&["achievable", "-g", &fixture("path3.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().last(), Some("count: 10"));
}

#[test]
fn render() {
    let (code, out, _) = flatmorse(&["render", "-d", &fixture("small_barcode.json"), "--width", "40"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2 + 4);
    let (code, out, _) = flatmorse(&["render", "-d", &fixture("small_barcode.json"), "--format", "svg", "--width", "300"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("<svg") && out.ends_with("</svg>\n"));
    assert_eq!(flatmorse(&["render", "-d", &fixture("small_barcode.json"), "--width", "5"]).0, EXIT_ERROR);
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(flatmorse(&["bogus"]).0, EXIT_ERROR);
    assert_eq!(flatmorse(&["persist", "-g", "/nonexistent.json", "-f", "x"]).0, EXIT_ERROR);
    assert_eq!(flatmorse(&["persist", "-g", &fixture("reference_function.json"), "-f", "x"]).0, EXIT_ERROR);
    assert_eq!(flatmorse(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_flatmorse"))
        .args(["persist", "-g", &fixture("reference_tree.json"), "-f", &fixture("reference_function.json")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(io::parse_diagram(&String::from_utf8(out.stdout).unwrap()).unwrap(), samples::reference_diagram());
    let out = Command::new(env!("CARGO_BIN_EXE_flatmorse"))
        .args(["validate", "-g", &fixture("seven_vertex_tree.json"), "-f", &fixture("nonmonotone.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
}
