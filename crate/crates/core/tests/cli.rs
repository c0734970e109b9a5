use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use twisted_rb::cli::{run, Outcome};

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/instances")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn trbtool(args: &[&str]) -> Outcome {
    run(std::iter::once("trbtool").chain(args.iter().copied()))
}

fn code(args: &[&str]) -> i32 {
    trbtool(args).code
}

const TRB: [&str; 8] = [
    "sl2_zero",
    "sl2_inverse_cochain",
    "r2_coadjoint_inverse_cochain",
    "r2_nijenhuis_trb",
    "heisenberg_reynolds",
    "heisenberg_trivial",
    "heisenberg_invertible_rb",
    "line_inverse_cochain",
];

#[test]
fn every_corpus_file_validates() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/instances");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = trbtool(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}: {}", path.display(), out.stderr);
        n += 1;
    }
    assert!(n >= 15);
}

#[test]
fn operator_commands_on_corpus() {
    for name in TRB {
        let f = instance(name);
        for cmd in ["check-trb", "cohomology-of-t", "ns-from"] {
            let args: Vec<&str> = if cmd == "ns-from" { vec![cmd, "trb", &f] } else { vec![cmd, &f] };
            assert_eq!(code(&args), 0, "{cmd} {name}");
        }
        assert_eq!(code(&["check-mc", &f, "--sweep", "4"]), 0, "check-mc {name}");
    }
    let bad = instance("sl2_not_trb");
    assert_eq!(code(&["check-trb", &bad]), 1);
    assert_eq!(code(&["check-mc", &bad, "--sweep", "4"]), 1);
    assert_eq!(code(&["cohomology-of-t", &bad]), 1);
}

#[test]
fn mc_and_trb_verdicts_agree() {
    for name in TRB.iter().chain(["sl2_not_trb"].iter()) {
        let f = instance(name);
        let json = |cmd: &str| -> Value {
            let out = trbtool(&["--json", cmd, &f, "--sweep", "0"][..if cmd == "check-trb" { 3 } else { 5 }]);
            serde_json::from_str(&out.stdout).unwrap()
        };
        let (trb, mc) = (json("check-trb"), json("check-mc"));
        assert_eq!(trb["verdict"], mc["verdict"], "{name}");
    }
}

#[test]
fn remaining_commands() {
    let cases: &[(&[&str], i32)] = &[
        (&["ce-cohomology", "sl2_zero"], 0),
        (&["check-reynolds", "heisenberg_reynolds"], 0),
        (&["reynolds-from-derivation", "heisenberg_reynolds"], 0),
        (&["check-r-matrix", "abelian3_twisted_r_matrix"], 0),
        (&["check-r-matrix", "heisenberg_twisted_r_matrix"], 0),
        (&["check-r-matrix", "r2_r_matrix"], 0),
        (&["check-ns", "sl2_ns_lie"], 0),
        (&["trb-from-ns", "sl2_ns_lie"], 0),
        (&["deform-check", "sl2_inverse_cochain"], 0),
        (&["rigidity-probe", "line_inverse_cochain"], 0),
        (&["rigidity-probe", "sl2_inverse_cochain"], 1),
        (&["check-tgcs", "heisenberg_invertible_rb", "--sweep", "4"], 0),
        (&["check-tgcs", "r2_complex_structure", "--sweep", "4"], 0),
        (&["lie-tgcs", "r2_lie_gcs"], 0),
        (&["lie-tgcs", "abelian2_lie_gcs"], 0),
        (&["nijenhuis-element", "sl2_inverse_cochain", "--x", "[0,0,0]"], 0),
        (&["nijenhuis-element", "sl2_inverse_cochain", "--x", "[1,0,0]"], 1),
        (&["gauge", "sl2_inverse_cochain", "--b", "[[0,0,0],[0,0,0],[0,0,0]]"], 0),
        (&["gauge", "sl2_inverse_cochain", "--b", "[[1,0,0],[0,0,0],[0,0,0]]"], 2),
        (&["shift", "sl2_inverse_cochain", "--h", "[[0,1,0],[0,0,0],[0,0,0]]"], 0),
        (&["shift", "sl2_inverse_cochain", "--h", "[[1,0,0],[0,0,0],[0,0,1]]"], 2),
        (&["check-trb", "r2_r_matrix"], 2),
        (&["gauge", "sl2_inverse_cochain", "--b", "nope"], 2),
    ];
    for (args, expected) in cases {
        let f = instance(args[1]);
        let mut full = args.to_vec();
        full[1] = &f;
        let out = trbtool(&full);
        assert_eq!(out.code, *expected, "{args:?}: {}{}", out.stdout, out.stderr);
    }
    for (src, name) in [("nijenhuis", "r2_nijenhuis_operator"), ("assoc", "matrix_assoc_ns")] {
        assert_eq!(code(&["ns-from", src, &instance(name)]), 0, "{src}");
    }
}

#[test]
fn inconclusive_probe_says_so() {
    let out = trbtool(&["rigidity-probe", &instance("sl2_inverse_cochain")]);
    assert!(out.stdout.ends_with("verdict: inconclusive\n"), "{}", out.stdout);
}

#[test]
fn witt_report_has_66_rows() {
    let out = trbtool(&["--json", "witt-report"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["dimensions"]["rows"], 66);
    let rows = v["notes"].as_array().unwrap().iter().skip(1);
    assert_eq!(rows.filter(|r| r.as_str().unwrap().ends_with(" pass")).count(), 66);
    let out = trbtool(&["witt-report", "--nmax", "2"]);
    assert!(out.stdout.contains("verdict: pass"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["check-trb"]), 2);
    let out = trbtool(&["check-trb", "/nonexistent/instance.json"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("trbtool check-trb: error:"), "{}", out.stderr);
    let out = trbtool(&["--json", "check-trb", &instance("r2_r_matrix")]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((out.code, v["verdict"].as_str()), (2, Some("invalid")));
}

#[test]
fn failing_check_reports_a_witness() {
    let out = trbtool(&["--json", "check-trb", &instance("sl2_not_trb")]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "fail");
    let w = &v["witnesses"][0]["witness"];
    assert!(w["tuple"].is_array() && w["defect"].is_array(), "{w}");
    let text = trbtool(&["check-trb", &instance("sl2_not_trb")]).stdout;
    assert!(text.lines().any(|l| l.starts_with("FAIL  ")), "{text}");
}

#[test]
fn repeat_runs_are_byte_identical() {
    let f = instance("heisenberg_invertible_rb");
    for args in [
        vec!["--seed", "9", "check-mc", f.as_str(), "--sweep", "6"],
        vec!["--seed", "9", "--json", "check-tgcs", f.as_str(), "--sweep", "6"],
        vec!["--json", "cohomology-of-t", f.as_str()],
    ] {
        let (a, b) = (trbtool(&args), trbtool(&args));
        assert_eq!((a.code, &a.stdout), (b.code, &b.stdout), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_trbtool");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["check-trb", &instance("sl2_inverse_cochain")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("trbtool check-trb seed=0\n"));
    assert_eq!(status(&["check-trb", &instance("sl2_not_trb")]).status.code(), Some(1));
    let bad = status(&["check-trb", "/nonexistent/instance.json"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
