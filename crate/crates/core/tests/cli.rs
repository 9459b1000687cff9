use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;

use twisted_n2::analysis::report::AxiomReport;
use twisted_n2::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn tn2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tn2"))
        .args(args)
        .output()
        .expect("run tn2");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_in_process(args: &[String]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tn2".to_string()).chain(args.iter().cloned());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn assert_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["checks_run", "failures", "options", "pass", "suite"]);
    assert!(v["suite"].is_string());
    assert!(v["options"].is_object());
    assert!(v["checks_run"].is_u64());
    assert_eq!(
        v["pass"].as_bool().unwrap(),
        v["failures"].as_array().unwrap().is_empty()
    );
    for f in v["failures"].as_array().unwrap() {
        assert!(f["identity"].is_string());
        assert!(f["inputs"].as_array().unwrap().iter().all(Value::is_string));
        assert!(f["defect"].is_string());
    }
}

#[test]
fn act_prints_vector() {
    let (code, out, _) = tn2(&[
        "act",
        "--family",
        "M",
        "--t",
        "1",
        "--element",
        "G(1/2)",
        "--vector",
        "1",
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "s*d\n");
    let (code, out, _) = tn2(&[
        "act",
        "--family",
        "A",
        "--t",
        "-1",
        "--element",
        "I(1/2)",
        "--vector",
        "x_{0}",
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "(2*sigma + 2)*x_{1/2}\n");
}

#[test]
fn verify_algebra_reports_counts() {
    let (code, out, _) = tn2(&["verify-algebra", "--window", "3", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_schema(&v);
    // 14 basis elements have |2·index| <= 3, seven of them odd. Each triple gets a
    // Jacobi check and each pair two checks; odd pairs add the G-G symmetry.
    // omega_b adds one parity check per element and one identity per pair.
    let n = 14u64;
    assert_eq!(
        v["checks_run"].as_u64().unwrap(),
        n * n * n + 2 * n * n + 7 * 7 + n + n * n
    );
}

#[test]
fn weighting_text_and_exit_status() {
    let (code, out, _) = tn2(&["weighting", "--t", "1", "--window", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("matches A_t(alpha-1)"), "{out}");
}

#[test]
fn mismatched_sigma_golden() {
    let (code, out, _) = tn2(&[
        "weighting",
        "--window",
        "1",
        "--sigma",
        "a",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_FAIL);
    let got: AxiomReport = serde_json::from_str(&out).unwrap();
    let want: AxiomReport =
        serde_json::from_str(include_str!("golden/weighting_sigma_a_w1.json")).unwrap();
    assert_eq!(got, want);
    assert_schema(&serde_json::from_str(&out).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["verify-algebra", "--unknown-flag"],
        vec!["verify-module", "--family", "Q"],
        vec!["act", "--element", "I(1)", "--vector", "1"],
        vec!["act", "--element", "L(1/3)", "--vector", "1"],
        vec!["act", "--element", "L(1) +", "--vector", "1"],
        vec![
            "act",
            "--family",
            "Omega",
            "--element",
            "G(1/2)",
            "--vector",
            "1",
        ],
        vec![
            "act",
            "--family",
            "N",
            "--element",
            "L(1)",
            "--vector",
            "x_{0}",
        ],
        vec!["verify-module", "--set", "q=1"],
    ] {
        let (code, _, err) = tn2(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn output_file_and_report_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let reports = dir.path().join("reports");
    let (code, stdout, _) = tn2(&[
        "report-all",
        "--window",
        "1",
        "--deg-cap",
        "2",
        "--weight-window",
        "2",
        "--algebra-window",
        "2",
        "--weighting-window",
        "2",
        "--format",
        "json",
        "--output",
        out_path.to_str().unwrap(),
        "--report-dir",
        reports.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PASS);
    assert!(stdout.is_empty());
    let total: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_schema(&total);
    assert_eq!(total["suite"], "report-all");
    let mut names: Vec<_> = std::fs::read_dir(&reports)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.contains(&"summary.json".to_string()));
    let mut sum = 0;
    for n in names.iter().filter(|n| *n != "summary.json") {
        let v: Value =
            serde_json::from_str(&std::fs::read_to_string(reports.join(n)).unwrap()).unwrap();
        assert_schema(&v);
        sum += v["checks_run"].as_u64().unwrap();
    }
    assert_eq!(Some(sum), total["checks_run"].as_u64());
}

#[test]
fn report_all_is_deterministic() {
    let args: Vec<String> = [
        "report-all",
        "--window",
        "1",
        "--deg-cap",
        "3",
        "--algebra-window",
        "2",
        "--format",
        "json",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let (c1, a) = run_in_process(&args);
    let (c2, b) = run_in_process(&args);
    assert_eq!((c1, c2), (EXIT_PASS, EXIT_PASS));
    assert_eq!(a, b);
}

#[test]
fn simplicity_and_closure_commands() {
    let (code, out, _) = tn2(&["simplicity", "--family", "A", "--set", "sigma=-1/2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(
        out,
        "A_1(sigma=-1/2): proper-invariant-found (dimension 1 of 18)\n  y_{0}\n"
    );
    let (code, out, _) = tn2(&["simplicity", "--family", "N", "--t", "-1", "--deg-cap", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.ends_with(": no-proper-invariant-found\n"), "{out}");
    let (code, out, _) = tn2(&[
        "closure",
        "--family",
        "M",
        "--seed",
        "d^2",
        "--deg-cap",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 6);
}

#[test]
fn intertwine_command() {
    assert_eq!(
        tn2(&["intertwine", "--map", "psi", "--t", "-1", "--deg-cap", "3"]).0,
        EXIT_PASS
    );
    assert_eq!(
        tn2(&["intertwine", "--map", "chi", "--deg-cap", "3"]).0,
        EXIT_PASS
    );
    assert_eq!(
        tn2(&[
            "intertwine",
            "--map",
            "parity-swap",
            "--t-prime",
            "-1",
            "--deg-cap",
            "2"
        ])
        .0,
        EXIT_FAIL
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // any shift of sigma away from a-1 is a verification failure, never a
    // usage error or a pass
    #[test]
    fn exit_status_contract(num in -5i64..=5, den in 1i64..=3, t in prop::bool::ANY) {
        prop_assume!(num != 0);
        let sigma = format!("a - 1 + {num}/{den}");
        let t = if t { "1" } else { "-1" };
        let args: Vec<String> = ["weighting", "--t", t, "--window", "1", "--sigma", &sigma]
            .iter()
            .map(|s| s.to_string())
            .collect();
        prop_assert_eq!(run_in_process(&args).0, EXIT_FAIL);
        let args: Vec<String> = ["weighting", "--t", t, "--window", "1", "--sigma", "(2*a - 2)/2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        prop_assert_eq!(run_in_process(&args).0, EXIT_PASS);
    }
}
