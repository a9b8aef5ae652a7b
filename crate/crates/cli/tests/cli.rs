use std::fs;
use std::process::{Command, Output};

use rootzone::ComparisonReport;
use serde_json::Value;

fn rootzone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootzone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn upper_value(report: &ComparisonReport, id: &str) -> f64 {
    report
        .upper_results()
        .find(|b| b.id.as_str() == id)
        .and_then(|b| b.value)
        .unwrap()
}

#[test]
fn bounds_json_for_inline_real_polynomial() {
    let o = rootzone(&["bounds", "--poly", "1,0,0,1", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = ComparisonReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.polynomial.degree, 3);
    assert_eq!(r.bounds.len(), 32);
    assert!((upper_value(&r, "BP1") - 1.207107).abs() < 1e-6);
    assert!((upper_value(&r, "BP4") - 1.050501).abs() < 1e-6);
    assert!((r.best_annulus.r_upper - 1.050501).abs() < 1e-6);
    assert!(r.verdicts.unwrap().all_pass());
    assert!(!r.sharper_than_aok);
}

#[test]
fn bounds_json_schema_field_names() {
    let o = rootzone(&["bounds", "--poly", "2,0,1,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in [
        "polynomial",
        "bounds",
        "best_annulus",
        "rectangle",
        "oracle",
        "verdicts",
        "sharper_than_aok",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let b = &v["bounds"][0];
    for key in ["id", "kind", "value", "applicable", "reason"] {
        assert!(b.get(key).is_some(), "bounds entry missing {key}");
    }
    assert_eq!(v["verdicts"]["annulus"], "pass");
    assert_eq!(v["sharper_than_aok"], true);
}

#[test]
fn complex_inline_coefficients() {
    let o = rootzone(&["bounds", "--poly", "1+2i,-i,0.5,1", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = ComparisonReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.polynomial.coeffs[0], [1.0, 2.0]);
    assert_eq!(r.polynomial.coeffs[1], [0.0, -1.0]);
}

#[test]
fn selected_bounds_from_json_file_as_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(&path, r#"{"coeffs": [[2, 0], [0, 0], [1, 0], [1, 0]]}"#).unwrap();
    let o = rootzone(&[
        "bounds",
        "--input",
        path.to_str().unwrap(),
        "--bounds",
        "BP3,AOK",
        "--format",
        "table",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    let upper_rows: Vec<&str> = out
        .lines()
        .filter(|l| l.split_whitespace().nth(1) == Some("upper"))
        .collect();
    assert_eq!(upper_rows.len(), 2, "{out}");
    assert!(upper_rows[0].starts_with("BP3") && upper_rows[1].starts_with("AOK"));
}

#[test]
fn text_input_is_normalized() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    // 2 (z^3 + z^2 + z + 1)
    fs::write(&path, "# comment\n2 0\n2 0\n\n2 0\n2 0\n").unwrap();
    let o = rootzone(&[
        "bounds",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = ComparisonReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.polynomial.coeffs, vec![[1.0, 0.0]; 4]);
    assert!((upper_value(&r, "BP3") - 1.982890).abs() < 1e-6);
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"coeffs": [[1, 0], "x"]}"#).unwrap();
    let missing = dir.path().join("missing.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["bounds", "--input", bad.to_str().unwrap()],
        vec!["bounds", "--input", missing.to_str().unwrap()],
        vec!["bounds", "--poly", "1,abc,1"],
        vec!["bounds", "--poly", "1,0"],
        vec!["bounds", "--poly", "0,1"],
        vec!["bounds", "--poly", "1,1"],
        vec!["bounds", "--poly", "1,0,0,1", "--bounds", "BP9"],
        vec!["bounds"],
        vec!["bounds", "--poly", "1,0,0,1", "--no-such-flag"],
        vec!["fuzz", "--count", "0"],
        vec!["fuzz", "--degree-range", "2:5"],
        vec!["fuzz", "--family", "quartic"],
    ];
    for args in cases {
        let o = rootzone(&args);
        assert_eq!(code(&o), 1, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn classical_only_selection_allows_low_degree() {
    let o = rootzone(&[
        "bounds",
        "--poly",
        "1,1",
        "--bounds",
        "CAUCHY,CARMICHAEL_MASON",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = ComparisonReport::from_json(&stdout(&o)).unwrap();
    assert!((r.best_annulus.r_upper - 2.0f64.sqrt()).abs() < 1e-12);
    assert!(r.rectangle.is_none());
}

#[test]
fn zero_constant_term_is_deflated() {
    let o = rootzone(&["verify", "--poly", "0,1,0,0,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).contains("multiplicity 1"));
}

#[test]
fn verify_passes_on_worked_examples() {
    for poly in ["2,0,1,1", "1,0,0,1", "1,1,1,1", "-24,26,-9,1"] {
        let o = rootzone(&["verify", "--poly", poly]);
        assert_eq!(code(&o), 0, "{poly}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 failed"));
    }
    let o = rootzone(&["verify", "--poly", "2,0,1,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_without_oracle_is_an_input_error() {
    assert_eq!(
        code(&rootzone(&["verify", "--poly", "1,0,0,1", "--no-oracle"])),
        1
    );
}

#[test]
fn remarks_default_passes() {
    let o = rootzone(&["remarks"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.matches(": pass").count(), 2, "{out}");
    assert!(out.contains("0.241207"));

    let o = rootzone(&["remarks", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["remark_1"]["status"], "pass");
    assert_eq!(v["remark_2"]["status"], "pass");
    assert_eq!(v["remark_1"]["comparisons"].as_array().unwrap().len(), 6);
}

#[test]
fn remarks_override_is_informational() {
    let o = rootzone(&["remarks", "--poly", "-24,26,-9,1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["remark_1"]["status"], "informational");
    assert_eq!(v["remark_2"]["status"], "informational");

    let o = rootzone(&["remarks", "--poly", "1,0,0,1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["remark_2"]["status"], "inapplicable");
}

#[test]
fn fuzz_is_deterministic() {
    let a = rootzone(&["fuzz", "--count", "1", "--seed", "7", "--format", "json"]);
    let b = rootzone(&["fuzz", "--count", "1", "--seed", "7", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = rootzone(&["fuzz", "--count", "1", "--seed", "8", "--format", "json"]);
    let (va, vc): (Value, Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&c.stdout).unwrap(),
    );
    assert_ne!(va["tightness"], vc["tightness"]);
}

#[test]
fn fuzz_families_are_clean() {
    for family in ["real", "complex", "sparse", "palindromic", "mixed"] {
        let o = rootzone(&[
            "fuzz", "--count", "200", "--family", family, "--format", "json",
        ]);
        assert_eq!(code(&o), 0, "{family}: {}", stdout(&o));
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
        assert_eq!(v["iff_mismatches"], 0);
        if family == "sparse" {
            assert!(v["kim_inapplicable"].as_u64().unwrap() > 100);
        }
    }
}

#[test]
fn plot_writes_svg_with_root_markers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let o = rootzone(&[
        "plot",
        "--poly",
        "1,1,1,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="root""#).count(), 3);
    assert!(svg.contains("annulus-inner") && svg.contains("annulus-outer"));

    let o = rootzone(&["plot", "--poly", "1,1,1,1", "--no-oracle"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches(r#"class="root""#).count(), 0);
    assert!(svg.contains(r#"id="rectangle""#));
}

#[test]
fn plot_to_unwritable_path_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no/such/dir/fig.svg");
    let o = rootzone(&[
        "plot",
        "--poly",
        "1,1,1,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["bounds", "--poly", "1+2i,-i,0.5,3,1", "--format", "json"][..],
        &["bounds", "--poly", "2,0,1,1", "--format", "table"][..],
        &["plot", "--poly", "1+2i,-i,0.5,3,1"][..],
    ] {
        let (a, b) = (rootzone(args), rootzone(args));
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
