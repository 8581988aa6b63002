//! Black-box tests of the `ptfun` binary: argument validation, exit codes,
//! output formats, and byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptfun"))
        .args(args)
        .output()
        .expect("spawn ptfun")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no exit code (killed by signal?)")
}

#[test]
fn eval_prints_value_and_error_estimate() {
    let out = run(&["eval", "sin_p", "--p", "2", "--x", "0.5235987755982988"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let fields: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(fields.len(), 2, "expected 'value err_est', got {text:?}");
    let value: f64 = fields[0].parse().unwrap();
    let err_est: f64 = fields[1].parse().unwrap();
    assert!((value - 0.5).abs() < 1e-12, "sin_2(pi/6) = {value}");
    assert!(err_est.abs() < 1e-10, "err_est = {err_est}");
}

#[test]
fn eval_period_constant_needs_no_x() {
    let out = run(&["eval", "pi_p", "--p", "2"]);
    assert_eq!(exit_code(&out), 0);
    let value: f64 = stdout(&out).split_whitespace().next().unwrap().parse().unwrap();
    assert!((value - std::f64::consts::PI).abs() < 1e-12, "pi_2 = {value}");

    let out = run(&["eval", "pi_p", "--p", "4"]);
    let value: f64 = stdout(&out).split_whitespace().next().unwrap().parse().unwrap();
    assert!((value - 2.221441469079183).abs() < 1e-12, "pi_4 = {value}");
}

#[test]
fn eval_at_tangent_pole_exits_with_domain_error() {
    let out = run(&["eval", "tan_p", "--p", "2", "--x", "1.5707963267948966"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).starts_with("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn eval_requires_x_for_pointwise_functions() {
    let out = run(&["eval", "sin_p", "--p", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn eval_rejects_x_for_the_period_constant() {
    let out = run(&["eval", "pi_p", "--p", "3", "--x", "1.0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn eval_rejects_exponent_at_or_below_one() {
    let out = run(&["eval", "sin_p", "--p", "1", "--x", "0.5"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["eval", "sin_p", "--p", "0.7", "--x", "0.5"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unparsable_arguments_exit_two() {
    let out = run(&["eval", "sin_p", "--p", "abc", "--x", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["no_such_subcommand"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["eval", "frobnicate_p", "--p", "2", "--x", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_rejects_empty_grid() {
    let out = run(&["table", "sin_p", "--p", "2", "--x-lo", "0", "--x-hi", "1", "--grid-n", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_rejects_inverted_bounds_and_constants() {
    let out = run(&["table", "sin_p", "--p", "2", "--x-lo", "1", "--x-hi", "0", "--grid-n", "5"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["table", "pi_p", "--p", "2", "--x-lo", "0", "--x-hi", "1", "--grid-n", "5"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_output_is_headed_csv_and_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = ["table", "cosh_p", "--p", "2.5", "--x-lo", "0.1", "--x-hi", "1.4", "--grid-n", "7"];
    let out = run(&[&args[..], &["--out", a.to_str().unwrap()]].concat());
    assert_eq!(exit_code(&out), 0);
    let out = run(&[&args[..], &["--out", b.to_str().unwrap()]].concat());
    assert_eq!(exit_code(&out), 0);

    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b, "two identical invocations differ");

    let text = String::from_utf8(bytes_a).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value,err_est");
    assert_eq!(lines.len(), 8, "header + 7 rows");
    assert!(!text.contains('\r'), "line endings must be \\n only");
    // Values round-trip: the first row is x = 0.1 exactly.
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[0], "0.1");
}

#[test]
fn verify_rejects_unknown_case_id() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&["verify", "--cases", "no_such_case", "--out", report.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("no_such_case"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_single_case_prints_summary_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&[
        "verify",
        "--cases",
        "wilker_hyp",
        "--grid-n",
        "60",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("wilker_hyp"), "stdout: {text}");
    assert!(text.contains("min_margin="), "stdout: {text}");

    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["format"], "report_v1");
    assert_eq!(doc["tool"]["name"], "ptfun");
    assert_eq!(doc["cases"][0]["case_id"], "wilker_hyp");
    assert_eq!(doc["cases"][0]["x_count"], 60);
    assert_eq!(doc["summary"]["n_cases"], 1);
}

#[test]
fn verify_report_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = ["verify", "--cases", "huygens_trig,cusa_trig", "--grid-n", "50"];
    assert_eq!(exit_code(&run(&[&args[..], &["--out", a.to_str().unwrap()]].concat())), 0);
    assert_eq!(exit_code(&run(&[&args[..], &["--out", b.to_str().unwrap()]].concat())), 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_accepts_p_value_overrides_inside_the_domain() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&[
        "verify",
        "--cases",
        "huygens_hyp",
        "--p-values",
        "2.5,4",
        "--grid-n",
        "50",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["cases"][0]["p_values"], serde_json::json!([2.5, 4.0]));
}

#[test]
fn strict_conjecture_flag_still_passes_on_clean_evidence() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&[
        "verify",
        "--cases",
        "conj_log_ratio",
        "--strict-conjectures",
        "--grid-n",
        "60",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn conjecture_rejects_unknown_or_theorem_ids() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("e.json");
    let out = run(&["conjecture", "nonsense", "--out", report.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    // A proved case is not explorable as a conjecture.
    let out = run(&["conjecture", "wilker_hyp", "--out", report.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn plotdata_function_matches_direct_evaluation() {
    let out = run(&[
        "plotdata", "function", "--function", "sin_p", "--p", "2.5", "--x-lo", "0.2", "--x-hi",
        "1.2", "--grid-n", "5",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 6);

    let cfg = ptfun::EvalConfig::default();
    let p = ptfun::PParam::new(2.5).unwrap();
    for line in &lines[1..] {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let direct = ptfun::sin_p(cols[0], p, &cfg).unwrap().value;
        // Shortest round-trip formatting parses back to the identical bits.
        assert_eq!(cols[1].to_bits(), direct.to_bits(), "row {line}");
    }
}

#[test]
fn plotdata_margin_headers_name_the_comparison_curves() {
    let out = run(&[
        "plotdata", "margin", "--case", "cusa_hyp_small_p", "--p", "1.5", "--grid-n", "4",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "x,sinh_p/x,(cosh_p+p)/(1+p)");
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn plotdata_tparam_requires_a_positive_x() {
    let out = run(&["plotdata", "tparam", "--case", "t_param_cos", "--p", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["plotdata", "tparam", "--case", "t_param_cos", "--p", "2", "--x", "-1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn plotdata_tparam_emits_a_t_grid() {
    let out = run(&[
        "plotdata", "tparam", "--case", "t_param_cosh", "--p", "2", "--x", "1.0", "--grid-n", "50",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,g");
    assert_eq!(lines.len(), 51);
}

#[test]
fn plotdata_rejects_p_outside_the_case_domain() {
    // cusa_hyp_small_p is claimed only for p in (1, 2].
    let out = run(&[
        "plotdata", "margin", "--case", "cusa_hyp_small_p", "--p", "5", "--grid-n", "4",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("outside"), "stderr: {}", stderr(&out));
}

#[test]
fn plotdata_rejects_unknown_case() {
    let out = run(&["plotdata", "margin", "--case", "bogus", "--p", "2"]);
    assert_eq!(exit_code(&out), 2);
}
