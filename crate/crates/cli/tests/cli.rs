//! End-to-end tests of the `crosscap` binary: exit codes, output shapes, and
//! the determinism of census output sets.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn crosscap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = crosscap(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn path(p: &Path) -> String {
    p.to_str().expect("utf-8 path").to_string()
}

#[test]
fn verify_passes_on_the_sample_instance() {
    let (code, stdout, _) = run(&[
        "verify",
        &path(&fixture("algebra_z5.json")),
        "--tier",
        "extended",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("passed: true"), "{stdout}");
}

#[test]
fn verify_prints_the_axiom_id_for_a_mutated_instance() {
    let (code, stdout, _) = run(&["verify", &path(&fixture("mutation_d2_8_11.json"))]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("D2.8.11"), "{stdout}");
}

#[test]
fn verify_emits_the_json_report_on_request() {
    let (code, stdout, _) = run(&[
        "verify",
        &path(&fixture("mutation_d2_8_11.json")),
        "--json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["kind"], "extended");
    assert_eq!(v["passed"], false);
}

#[test]
fn verify_rejects_garbage_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    let (code, _, stderr) = run(&["verify", &path(&garbage)]);
    assert_eq!(code, 2, "{stderr}");
}

#[test]
fn verify_rejects_a_grade_crossing_involution_at_parse_time() {
    let (code, _, stderr) = run(&["verify", &path(&fixture("mutation_d2_8_2.json"))]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("preserve each grade"), "{stderr}");
}

#[test]
fn eval_prints_the_matrix_with_boundary_signatures() {
    let (code, stdout, _) = run(&[
        "eval",
        &path(&fixture("algebra_z5.json")),
        &path(&fixture("word_moebius.json")),
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("input:  []"), "{stdout}");
    assert!(stdout.contains("output: [\"0\"]"), "{stdout}");
    assert!(stdout.contains("matrix: [4]"), "{stdout}");
}

#[test]
fn eval_rejects_an_ill_typed_word_naming_the_layer() {
    let (code, _, stderr) = run(&[
        "eval",
        &path(&fixture("algebra_z5.json")),
        &path(&fixture("word_illtyped.json")),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("layer 1"), "{stderr}");
}

#[test]
fn invariant_prints_a_single_scalar() {
    let (code, stdout, _) = run(&[
        "invariant",
        &path(&fixture("algebra_z5.json")),
        &path(&fixture("surface_mixed.json")),
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "4");
}

#[test]
fn invariant_table_cross_checks_every_entry() {
    let (code, stdout, _) = run(&[
        "invariant",
        &path(&fixture("algebra_z5.json")),
        "--table",
        "3",
    ]);
    assert_eq!(code, 0, "{stdout}");
    // Each shape (h, c) with h + c ≤ 3 contributes 2^(2h+c) label rows:
    // (1+2+4+8) + (4+8+16) + (16+32) + 64 = 155.
    let rows: Vec<&str> = stdout.lines().collect();
    assert_eq!(rows.len(), 155, "{}", rows.len());
    assert!(rows[0].contains("invariant=1"), "{stdout}");
    assert!(!stdout.contains("MISMATCH"), "{stdout}");
}

#[test]
fn invariant_table_refuses_oversize_requests_without_acknowledgement() {
    let (code, _, stderr) = run(&[
        "invariant",
        &path(&fixture("algebra_z5.json")),
        "--table",
        "5",
    ]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("--allow-large"), "{stderr}");

    let (code, stdout, _) = run(&[
        "invariant",
        &path(&fixture("algebra_z5.json")),
        "--table",
        "5",
        "--allow-large",
    ]);
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn census_writes_deterministic_fixture_sets() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    for out in [&out_a, &out_b] {
        let (code, stdout, stderr) = run(&[
            "census",
            "--ring",
            "Z/2",
            "--pi",
            "1",
            "--ranks",
            "1,1",
            "--tier",
            "extended",
            "--out",
            &path(out),
        ]);
        assert_eq!(code, 0, "{stderr}");
        let summary: serde_json::Value = serde_json::from_str(&stdout).expect("summary JSON");
        assert_eq!(summary["raw_count"], 1, "{stdout}");
        assert_eq!(summary["iso_count"], 1, "{stdout}");
    }

    let names = |dir: &Path| -> Vec<String> {
        let mut names: Vec<String> = std::fs::read_dir(dir)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        names
    };
    assert_eq!(names(&out_a), vec!["algebra_0000.json", "summary.json"]);
    assert_eq!(names(&out_a), names(&out_b));
    for name in names(&out_a) {
        let a = std::fs::read(out_a.join(&name)).unwrap();
        let b = std::fs::read(out_b.join(&name)).unwrap();
        if name == "summary.json" {
            // The summary differs only in its timing field.
            let strip = |bytes: &[u8]| -> serde_json::Value {
                let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
                v["elapsed"] = serde_json::Value::Null;
                v
            };
            assert_eq!(strip(&a), strip(&b));
        } else {
            assert_eq!(a, b, "{name} differs between runs");
        }
    }

    // The written algebra verifies at the requested tier via the CLI itself.
    let (code, _, _) = run(&["verify", &path(&out_a.join("algebra_0000.json"))]);
    assert_eq!(code, 0);
}

#[test]
fn census_refuses_oversize_searches_with_exit_3() {
    let (code, _, stderr) = run(&["census", "--ring", "Z/101", "--ranks", "3,3"]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("refusing"), "{stderr}");
}

#[test]
fn census_rejects_inconsistent_rank_profiles() {
    let (code, _, stderr) = run(&["census", "--ring", "Z/2", "--ranks", "1,1,1"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, stderr) = run(&["census", "--ring", "Z/2", "--pi", "2", "--ranks", "1,1"]);
    assert_eq!(code, 2, "{stderr}");
}

#[test]
fn census_refuses_to_overwrite_an_existing_directory() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, stderr) = run(&[
        "census",
        "--ring",
        "Z/2",
        "--ranks",
        "1,1",
        "--out",
        &path(dir.path()),
    ]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("already exists"), "{stderr}");
}

#[test]
fn roundtrip_passes_on_the_sample_instance() {
    let (code, stdout, _) = run(&["roundtrip", &path(&fixture("algebra_z5.json"))]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("matches the input"), "{stdout}");
    assert!(stdout.contains("passed: true"), "{stdout}");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["verify"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
}
