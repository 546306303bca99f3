//! End-to-end tests against the compiled binary: pinned byte output,
//! JSON round trips, exit codes, and determinism.

use std::process::{Command, Output};

use liegiambelli_cli::json::series_from_json;
use liegiambelli_core::degeneracy::{giambelli_class, validate_growth, GiambelliForm};
use liegiambelli_core::free_lie::lie_class_honest;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liegiambelli"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

#[test]
fn locus_latex_output_is_byte_exact() {
    let out = run(&["locus", "--m", "4", "--growth", "2,2,4", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, b"w_2(M)+w_2(V)+w_1(V)^2\n");
}

#[test]
fn chern_text_output_is_pinned() {
    assert_eq!(stdout_of(&["chern", "--n", "2", "--k", "2", "--order", "4"]), "1 + c_1\n");
}

#[test]
fn dims_d_column_matches_the_witt_values() {
    let text = stdout_of(&["dims", "--n", "2", "--kmax", "5"]);
    let d: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(d, ["2", "1", "2", "3", "6"]);
}

#[test]
fn dims_with_ambient_dimension_adds_count_columns() {
    let text = stdout_of(&["dims", "--n", "2", "--kmax", "3", "--m", "4"]);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(
        header,
        ["k", "d", "partial", "sharp", "lemma4", "dim_jet", "dim_mat", "onto"]
    );
    // k = 2: dim_jet = 2*2*C(5,1) = 20, dim_mat = 2*d(2,2) = 2
    let k2: Vec<&str> = text.lines().nth(2).unwrap().split_whitespace().collect();
    assert_eq!(&k2[5..], ["20", "2", "yes"]);
    // k = 1 has no jet comparison
    let k1: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&k1[5..], ["-", "-", "-"]);
}

#[test]
fn locus_text_report_lists_the_reduction_and_diagrams() {
    let text = stdout_of(&["locus", "--m", "4", "--growth", "2,2,4"]);
    assert!(text.contains("reduced index set: {2}"));
    assert!(text.contains("lambda: [1, 1]"));
    assert!(text.contains("mu: [2]"));
    assert!(text.contains("cd: 2"));
    assert!(text.contains("class: w_2(M) + w_2(V) + w_1(V)^2"));
}

#[test]
fn hall_listing_respects_the_depth_filter() {
    let full = stdout_of(&["hall", "--n", "2", "--kmax", "4"]);
    // 2 + 1 + 2 + 3 words plus the header
    assert_eq!(full.lines().count(), 9);
    assert!(full.contains("(u (u (u v)))"));
    let deep = stdout_of(&["hall", "--n", "2", "--kmax", "4", "--max-depth-only"]);
    // right combs only: every level keeps all its words at n = 2 except rank
    // order; counts are 2, 1, 2, 3 at k = 1..4 minus non-combs (none at n=2, k<=4)
    for line in deep.lines().skip(1) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols[1], cols[2], "depth equals length in {line}");
    }
}

#[test]
fn chern_json_round_trips_through_the_parser() {
    let text = stdout_of(&["chern", "--n", "3", "--k", "3", "--order", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let parsed = series_from_json(&value).unwrap();
    assert_eq!(parsed, lie_class_honest(3, 3, 2).unwrap());
}

#[test]
fn locus_json_round_trips_through_the_parser() {
    let text = stdout_of(&["locus", "--m", "4", "--growth", "2,2,3,4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["reduced"], serde_json::json!([2, 3]));
    let parsed = series_from_json(&value["class"]).unwrap();
    let g = validate_growth(&[2, 2, 3, 4], 2, 4).unwrap();
    assert_eq!(parsed, giambelli_class(&g, GiambelliForm::Lambda, None).unwrap());
}

#[test]
fn strata_lists_the_expected_defects() {
    let text = stdout_of(&["strata", "--n", "3", "--m", "6"]);
    assert!(text.contains("admissible (3):"));
    assert!(text.contains("defect=(0,1,0) growth=3,5,6 cd=1"));
    assert!(text.contains("bounding (2):"));
    assert!(text.contains("defect=(0,3,0) growth=3,3,6 cd=9"));
    assert!(text.contains("defect=(0,1,8,0) growth=3,5,5,6 cd=9"));
    // the oracle agrees on the defect sets here
    let oracle = stdout_of(&["strata", "--n", "3", "--m", "6", "--oracle"]);
    for needle in ["defect=(0,0)", "defect=(0,1,0)", "defect=(0,2,0)", "defect=(0,3,0)"] {
        assert!(oracle.contains(needle), "oracle output misses {needle}");
    }
}

#[test]
fn check_accepts_numeric_and_named_suites() {
    let by_name = stdout_of(&["check", "--suite", "worked-examples"]);
    let by_number = stdout_of(&["check", "--suite", "1"]);
    assert_eq!(by_name, by_number);
    assert!(by_name.starts_with("criterion 1 (worked-examples): PASS"));
}

#[test]
fn usage_errors_exit_with_code_2() {
    for args in [
        vec!["locus", "--m", "4", "--growth", "2,x,4"],
        vec!["locus", "--m", "4", "--growth", "2,2,4", "--n", "3"],
        vec!["check", "--suite", "nosuch"],
        vec!["dims", "--n", "2"], // missing --kmax
        vec!["no-such-command"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn computational_errors_exit_with_code_1() {
    // growth entries exceed m: well-formed request, invalid mathematics
    let out = run(&["locus", "--m", "3", "--growth", "2,2,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    // the closed-form template families need n >= 3
    let out = run(&["strata", "--n", "2", "--m", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("use the oracle"));
}

#[test]
fn the_cell_cap_environment_variable_is_honored() {
    let out = bin()
        .args(["strata", "--n", "3", "--m", "6", "--oracle"])
        .env("LIEGIAMBELLI_MAX_CELLS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap"));

    let out = bin()
        .args(["dims", "--n", "2", "--kmax", "3"])
        .env("LIEGIAMBELLI_MAX_CELLS", "banana")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_file_and_keeps_stdout_empty() {
    let dir = std::env::temp_dir().join("liegiambelli-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("locus.tex");
    let out = bin()
        .args(["locus", "--m", "4", "--growth", "2,2,4", "--format", "latex"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), b"w_2(M)+w_2(V)+w_1(V)^2\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["strata", "--n", "3", "--m", "10", "--with-class", "--format", "json"],
        vec!["dims", "--n", "3", "--kmax", "6", "--m", "8", "--format", "json"],
        vec!["hall", "--n", "3", "--kmax", "4", "--format", "latex"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "args {args:?}");
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}
