//! End-to-end tests of the `linkirr` binary: exit-code contract, output
//! shapes, and the invariant that every emitted witness re-validates.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkirr"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("linkirr-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

fn write_file(name: &str, content: &str) -> PathBuf {
    let path = scratch(name);
    fs::write(&path, content).expect("write fixture");
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn eta_of_k4_with_witness_roundtrip() {
    let k4 = write_file(
        "k4.g6",
        &linkirr::write_graph6(&linkirr::complete(4)).unwrap(),
    );
    let witness = scratch("k4-witness.labels");
    let out = bin()
        .args([
            "eta",
            k4.to_str().unwrap(),
            "--out",
            witness.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("eta = 3"));

    let check = bin()
        .args(["check", witness.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&check), 0, "witness must re-validate: {check:?}");
}

#[test]
fn eta_reports_infinity_with_a_blocking_pair() {
    let c4 = write_file("c4.g6", &linkirr::write_graph6(&linkirr::cycle(4)).unwrap());
    let out = bin().args(["eta", c4.to_str().unwrap()]).output().unwrap();
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("eta = infinity"), "{text}");
    assert!(text.contains("vertices"), "{text}");
}

#[test]
fn eta_of_order_zero_graph() {
    let empty = write_file("empty.g6", "?\n");
    let out = bin()
        .args(["eta", empty.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("eta = 0"));
}

#[test]
fn eta_label_cap_exhaustion_is_a_resource_error() {
    let k6 = write_file(
        "k6.g6",
        &linkirr::write_graph6(&linkirr::complete(6)).unwrap(),
    );
    let out = bin()
        .args(["eta", k6.to_str().unwrap(), "--max-labels", "1"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2, "{out:?}");
}

#[test]
fn eta_json_output_parses() {
    let k3 = write_file(
        "k3.g6",
        &linkirr::write_graph6(&linkirr::complete(3)).unwrap(),
    );
    let out = bin()
        .args(["eta", k3.to_str().unwrap(), "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["eta"], 3);
    assert_eq!(v["infinite"], false);
}

#[test]
fn check_flags_violations_with_exit_3() {
    let bad = write_file(
        "c6-uniform.labels",
        "n 6\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 0 5 1\n",
    );
    let out = bin()
        .args(["check", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("not link-irregular"));
}

#[test]
fn feasible_exit_codes() {
    let k3 = write_file(
        "k3f.g6",
        &linkirr::write_graph6(&linkirr::complete(3)).unwrap(),
    );
    assert_eq!(
        code(
            &bin()
                .args(["feasible", k3.to_str().unwrap()])
                .output()
                .unwrap()
        ),
        0
    );
    let c4 = write_file(
        "c4f.g6",
        &linkirr::write_graph6(&linkirr::cycle(4)).unwrap(),
    );
    assert_eq!(
        code(
            &bin()
                .args(["feasible", c4.to_str().unwrap()])
                .output()
                .unwrap()
        ),
        3
    );
}

#[test]
fn construct_outputs_revalidate() {
    for (kind, n) in [("kn", "6"), ("wheel", "15"), ("hn", "5")] {
        let path = scratch(&format!("construct-{kind}-{n}.labels"));
        let out = bin()
            .args(["construct", kind, n, "--out", path.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(code(&out), 0, "construct {kind} {n}: {out:?}");
        let check = bin()
            .args(["check", path.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(code(&check), 0, "construct {kind} {n} witness invalid");
    }
    let l = linkirr::parse_labeled(&fs::read_to_string(scratch("construct-kn-6.labels")).unwrap())
        .unwrap();
    assert_eq!(l.distinct_label_count(), 2);
}

#[test]
fn construct_infeasible_parameter_is_exit_4() {
    let out = bin().args(["construct", "wheel", "4"]).output().unwrap();
    assert_eq!(code(&out), 4, "{out:?}");
}

#[test]
fn construct_graph_kinds_emit_graph6() {
    let out = bin().args(["construct", "li6"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let g = linkirr::parse_graph6(stdout(&out).trim()).expect("graph6 output");
    assert_eq!(g.order(), 6);
    let out = bin().args(["construct", "gn", "8"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let g = linkirr::parse_graph6(stdout(&out).trim()).expect("graph6 output");
    assert_eq!((g.order(), g.size()), (8, 14));
}

#[test]
fn iso_compares_files() {
    let a = write_file(
        "iso-a.g6",
        &linkirr::write_graph6(&linkirr::cycle(5)).unwrap(),
    );
    // C_5 under a rotation is the same class
    let rotated = linkirr::cycle(5).permute(&[2, 3, 4, 0, 1]);
    let b = write_file("iso-b.g6", &linkirr::write_graph6(&rotated).unwrap());
    let out = bin()
        .args(["iso", a.to_str().unwrap(), b.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("isomorphic"));

    let c = write_file(
        "iso-c.g6",
        &linkirr::write_graph6(&linkirr::complete(5)).unwrap(),
    );
    let out = bin()
        .args(["iso", a.to_str().unwrap(), c.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn dot_renders_labels_and_colors() {
    let l = write_file("k3.labels", "n 3\ne 0 1 1\ne 1 2 2\ne 0 2 3\n");
    let out = bin().args(["dot", l.to_str().unwrap()]).output().unwrap();
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches(" -- ").count(), 3);
    assert!(text.contains("color="));
}

#[test]
fn survey_writes_consistent_json() {
    let k4 = write_file(
        "sv-k4.g6",
        &linkirr::write_graph6(&linkirr::complete(4)).unwrap(),
    );
    let c4 = write_file(
        "sv-c4.g6",
        &linkirr::write_graph6(&linkirr::cycle(4)).unwrap(),
    );
    let report_path = scratch("survey.json");
    let out = bin()
        .args([
            "survey",
            k4.to_str().unwrap(),
            c4.to_str().unwrap(),
            "--out",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{out:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["feasible"], true);
    assert_eq!(entries[0]["eta"], "3");
    assert_eq!(entries[1]["feasible"], false);
    assert_eq!(entries[1]["eta"], "infinity");
    // feasible entry carries a witness file that re-validates
    let witness = entries[0]["witness_file"].as_str().unwrap();
    assert_eq!(code(&bin().args(["check", witness]).output().unwrap()), 0);
}

#[test]
fn verify_paper_small_order_passes() {
    let report_path = scratch("verify-small.json");
    let out = bin()
        .args([
            "verify-paper",
            "--max-order",
            "5",
            "--out",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 11);
    assert!(!text.contains("FAIL"));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 11);
}

#[test]
fn unreadable_or_malformed_input_is_exit_1() {
    let out = bin()
        .args(["eta", "/nonexistent/file.g6"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    let garbage = write_file("garbage.g6", "\u{1}\u{2}\n");
    let out = bin()
        .args(["eta", garbage.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    // check requires the labeled format
    let k3 = write_file("k3g.g6", "Bw\n");
    let out = bin()
        .args(["check", k3.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
}
