use std::process::Command;

use dyck_tilings::cli::main_with_args;

fn run(args: &[&str]) -> (String, i32) {
    let out = main_with_args(std::iter::once("dyck").chain(args.iter().copied()).map(String::from));
    (out.text, out.status)
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let (text, status) = run(&v);
    assert_eq!(status, 0, "{text}");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn hook_line() {
    let (text, status) = run(&["gf", "--hook", "--path", "UDUDUD"]);
    assert_eq!(status, 0);
    assert_eq!(text.trim(), "[3]! = 1 + 2q + 2q^2 + q^3");
}

#[test]
fn empty_path() {
    let (text, status) = run(&["enumerate", "--paths", "--n", "0"]);
    assert_eq!(status, 0);
    assert_eq!(text.trim(), "(empty)");
    let v = json(&["enumerate", "--paths", "--n", "0"]);
    assert_eq!(v["schema"], "dyck/enumerate/v1");
    assert_eq!(v["items"], serde_json::json!([""]));
}

#[test]
fn path_counts() {
    let (text, _) = run(&["enumerate", "--paths", "--n", "4"]);
    assert_eq!(text.lines().count(), 14);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["poset", "--path", "UDUUDUDD", "--label", "1423"][..],
        &["enumerate", "--labels", "--path", "UUDDUD"],
        &["lattice-check", "--n", "3"],
        &["enumerate", "--rational", "--n", "3", "--a", "1", "--b", "2"],
    ] {
        let first = run(args);
        for _ in 0..3 {
            assert_eq!(run(args), first, "{args:?}");
        }
        let mut j = args.to_vec();
        j.extend(["--format", "json"]);
        assert_eq!(run(&j), run(&j));
    }
}

#[test]
fn size_guards() {
    let (text, status) = run(&["enumerate", "--paths", "--n", "8"]);
    assert_eq!(status, 3, "{text}");
    assert!(text.contains("--max-size"));
    assert_eq!(run(&["enumerate", "--paths", "--n", "8", "--max-size", "8"]).1, 0);
    assert_eq!(run(&["enumerate", "--rational", "--n", "4", "--a", "1", "--b", "3"]).1, 3);
}

#[test]
fn bad_input() {
    assert_eq!(run(&["gf", "--hook", "--path", "DU"]).1, 2);
    assert_eq!(run(&["enumerate", "--paths", "--n", "2", "--format", "xml"]).1, 2);
    assert_eq!(run(&["frobnicate"]).1, 2);
}

#[test]
fn verify_paper_passes() {
    let (text, status) = run(&["verify-paper"]);
    assert_eq!(status, 0, "{text}");
    let v = json(&["verify-paper"]);
    assert_eq!(v["schema"], "dyck/verify-paper/v1");
}

#[test]
fn lattice_check_defaults_to_the_full_poset() {
    let v = json(&["lattice-check", "--path", "UDUDUD"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["reports"][0]["report"]["elements"], 6);
}

#[test]
fn dot_output() {
    let (text, status) = run(&["poset", "--path", "UDUDUD", "--label", "123", "--format", "dot"]);
    assert_eq!(status, 0);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 8);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dyck");
    let ok = Command::new(bin).args(["gf", "--hook", "--path", "UDUDUD"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "[3]! = 1 + 2q + 2q^2 + q^3");
    let refused = Command::new(bin).args(["enumerate", "--paths", "--n", "9"]).output().unwrap();
    assert_eq!(refused.status.code(), Some(3));
    assert!(refused.stdout.is_empty());
}

#[test]
fn output_carries_the_schema_keys() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema");
    let cases: [(&str, &[&str]); 6] = [
        ("enumerate", &["enumerate", "--paths", "--n", "3"]),
        ("bijection", &["bijection", "--path", "UDUUDD", "--label", "132"]),
        ("gf", &["gf", "--path", "UDUUDUDD"]),
        ("poset", &["poset", "--path", "UDUDUD", "--label", "123"]),
        ("lattice-check", &["lattice-check", "--n", "3"]),
        ("verify-paper", &["verify-paper"]),
    ];
    for (verb, args) in cases {
        let text = std::fs::read_to_string(dir.join(format!("{verb}.v1.json"))).unwrap();
        let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
        let out = json(args);
        assert_eq!(out["schema"], schema["properties"]["schema"]["const"], "{verb}");
        for key in schema["required"].as_array().unwrap() {
            assert!(out.get(key.as_str().unwrap()).is_some(), "{verb} lacks {key}");
        }
    }
}
