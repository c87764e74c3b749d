//! End-to-end tests that spawn the built binary and pin its whole
//! surface: stdout bytes, stderr diagnostics, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dompoly() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dompoly"));
    // Keep ambient configuration out of the tests.
    cmd.env_remove("DOMPOLY_CACHE");
    cmd.env_remove("DOMPOLY_ORACLE_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    dompoly()
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout should be UTF-8")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("stderr should be UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process should exit normally")
}

// ------------------------------------------------------------------ table --

#[test]
fn table_of_one_row_prints_a_single_one() {
    let out = run(&["table", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn plain_table_is_rectangular() {
    let out = run(&["table", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "1 0 0 0\n2 1 0 0\n3 3 1 0\n0 6 4 1\n");
}

#[test]
fn csv_table_reproduces_the_frozen_sixteenth_row() {
    let out = run(&["table", "16", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines.len(), 16);
    assert_eq!(
        lines[15],
        "0,0,0,0,0,56,608,2214,4096,4560,3312,1628,544,120,16,1"
    );
    assert_eq!(lines[9], "0,0,0,25,102,150,110,45,10,1,0,0,0,0,0,0");
}

#[test]
fn json_table_has_ragged_string_rows() {
    let out = run(&["table", "5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["n_max"], 5);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    // Row n has entries for i = 0..=n.
    for (idx, row) in rows.iter().enumerate() {
        assert_eq!(row.as_array().unwrap().len(), idx + 2);
    }
    assert_eq!(rows[4], serde_json::json!(["0", "0", "5", "10", "5", "1"]));
}

#[test]
fn latex_table_blanks_the_upper_triangle() {
    let out = run(&["table", "3", "--format", "latex"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("\\begin{tabular}{r|rrr}\n"));
    assert!(text.contains("\n1 & 1 &  &  \\\\\n"));
    assert!(text.contains("\n3 & 3 & 3 & 1 \\\\\n"));
    assert!(text.ends_with("\\end{tabular}\n"));
}

#[test]
fn table_of_zero_rows_is_a_usage_error() {
    let out = run(&["table", "0"]);
    assert_eq!(exit_code(&out), 2);
}

// ------------------------------------------------------------------- poly --

#[test]
fn polynomial_formats() {
    let plain = run(&["poly", "3"]);
    assert_eq!(exit_code(&plain), 0);
    assert_eq!(stdout_of(&plain), "x^3 + 3x^2 + 3x\n");

    let latex = run(&["poly", "8", "--format", "latex"]);
    assert_eq!(
        stdout_of(&latex),
        "x^{8} + 8x^{7} + 28x^{6} + 48x^{5} + 38x^{4} + 8x^{3}\n"
    );

    let csv = run(&["poly", "8", "--format", "csv"]);
    assert_eq!(stdout_of(&csv), "0,0,0,8,38,48,28,8,1\n");

    let json = run(&["poly", "8", "--format", "json"]);
    let doc: Value = serde_json::from_str(stdout_of(&json)).unwrap();
    assert_eq!(doc["n"], 8);
    assert_eq!(
        doc["coefficients"],
        serde_json::json!(["0", "0", "0", "8", "38", "48", "28", "8", "1"])
    );
}

// ----------------------------------------------------------------- family --

#[test]
fn family_defaults_to_compact_set_listing() {
    let out = run(&["family", "6", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "[[1,4],[2,5],[3,6]]\n");
}

#[test]
fn family_of_five_choose_two() {
    let out = run(&["family", "5", "2"]);
    assert_eq!(stdout_of(&out), "[[1,3],[1,4],[2,4],[2,5],[3,5]]\n");
}

#[test]
fn family_of_the_full_vertex_set() {
    let out = run(&["family", "4", "4"]);
    assert_eq!(stdout_of(&out), "[[1,2,3,4]]\n");
}

#[test]
fn family_below_the_window_is_empty() {
    let out = run(&["family", "9", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "[]\n");
}

#[test]
fn family_csv_lists_one_member_per_line() {
    let out = run(&["family", "6", "2", "--format", "csv"]);
    assert_eq!(stdout_of(&out), "1,4\n2,5\n3,6\n");
}

#[test]
fn family_json_document() {
    let out = run(&["family", "7", "3", "--format", "json"]);
    let doc: Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["n"], 7);
    assert_eq!(doc["i"], 3);
    let sets = doc["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 14);
    assert_eq!(sets[0], serde_json::json!([1, 2, 5]));
}

#[test]
fn oversized_family_is_refused_without_force() {
    let out = run(&["family", "40", "20"]);
    assert_eq!(exit_code(&out), 3);
    assert_eq!(stdout_of(&out), "");
    let diag = stderr_of(&out);
    assert!(diag.contains("754758738 members"), "stderr: {diag}");
    assert!(diag.contains("--force"), "stderr: {diag}");
}

#[test]
fn force_overrides_the_guard() {
    // Small enough to build, but proves the flag is wired through.
    let out = run(&["family", "16", "9", "--force", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out).lines().count(), 4096);
}

#[test]
fn family_rejects_latex() {
    let out = run(&["family", "6", "2", "--format", "latex"]);
    assert_eq!(exit_code(&out), 2);
}

// ----------------------------------------------------------------- verify --

#[test]
fn verify_passes_fully_below_the_identity_threshold() {
    let out = run(&["verify", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("oracle-counts: PASS"), "stdout: {text}");
    assert!(text.contains("oracle-families: PASS"), "stdout: {text}");
    assert!(text.contains("genfunc-agreement: PASS"), "stdout: {text}");
    assert!(text.contains("identities: SKIPPED"), "stdout: {text}");
}

#[test]
fn strict_verify_counts_skipped_work_as_failure() {
    let out = run(&["verify", "8", "--strict"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn verify_reports_the_failing_identity_chain() {
    let out = run(&["verify", "10"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("oracle-counts: PASS"), "stdout: {text}");
    assert!(text.contains("oracle-families: PASS"), "stdout: {text}");
    assert!(text.contains("genfunc-agreement: PASS"), "stdout: {text}");
    assert!(
        text.contains("identities: FAIL")
            && text.contains("n=7 i=3: expected < 14, got 14"),
        "stdout: {text}"
    );
}

#[test]
fn verify_beyond_the_oracle_order_limit_skips_and_strict_fails() {
    // A small budget keeps the run fast; the strict failure comes from
    // the skipped work either way.
    let out = dompoly()
        .env("DOMPOLY_ORACLE_BUDGET", "2000")
        .args(["verify", "30", "--strict"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("SKIPPED"), "stdout: {text}");
}

#[test]
fn oracle_budget_narrows_the_verified_range() {
    let out = dompoly()
        .env("DOMPOLY_ORACLE_BUDGET", "50")
        .args(["verify", "8"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("SKIPPED from n=8 i=3 on"), "stdout: {text}");
    assert!(
        text.contains("examine 56 subsets, budget is 50"),
        "stdout: {text}"
    );
}

#[test]
fn malformed_oracle_budget_is_an_argument_error() {
    let out = dompoly()
        .env("DOMPOLY_ORACLE_BUDGET", "a lot")
        .args(["verify", "8"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

// --------------------------------------------------------------------- gf --

#[test]
fn gf_first_row_and_agreement_verdict() {
    let out = run(&["gf", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "0,6,4,1\n");
    assert!(
        stderr_of(&out).contains("agrees with the recurrence"),
        "stderr: {}",
        stderr_of(&out)
    );
}

#[test]
fn gf_grid_matches_the_table_rows() {
    let gf = run(&["gf", "16"]);
    assert_eq!(exit_code(&gf), 0);
    let table = run(&["table", "16", "--format", "csv"]);

    let gf_rows: Vec<&str> = stdout_of(&gf).lines().collect();
    let table_rows: Vec<&str> = stdout_of(&table).lines().collect();
    assert_eq!(gf_rows.len(), 13);
    for (offset, gf_row) in gf_rows.iter().enumerate() {
        let n = offset + 4;
        let gf_cells: Vec<&str> = gf_row.split(',').collect();
        let table_cells: Vec<&str> = table_rows[n - 1].split(',').collect();
        assert_eq!(gf_cells.len(), n);
        assert_eq!(&table_cells[..n], &gf_cells[..], "row n = {n}");
    }
}

#[test]
fn gf_json_document() {
    let out = run(&["gf", "5", "--format", "json"]);
    let doc: Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["n_max"], 5);
    assert_eq!(doc["u_min"], 4);
    assert_eq!(doc["rows"][1], serde_json::json!(["0", "5", "10", "5", "1"]));
}

#[test]
fn gf_rejects_latex_and_tiny_orders() {
    assert_eq!(exit_code(&run(&["gf", "5", "--format", "latex"])), 2);
    assert_eq!(exit_code(&run(&["gf", "3"])), 2);
}

// ------------------------------------------------------------- identities --

#[test]
fn identities_report_the_one_false_claim() {
    let out = run(&["identities", "12"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    for id in ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "xi"] {
        assert!(
            text.contains(&format!("identity {id:<4} PASS")),
            "missing PASS for {id}: {text}"
        );
    }
    assert!(text.contains("identity x    FAIL"), "stdout: {text}");
    assert!(
        text.contains("first counterexample: n=7 i=3: expected < 14, got 14"),
        "stdout: {text}"
    );
}

#[test]
fn identities_json_schema() {
    let out = run(&["identities", "9", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let doc: Value = serde_json::from_str(stdout_of(&out)).unwrap();
    let items = doc.as_array().unwrap();
    assert_eq!(items.len(), 11);
    for item in items {
        assert!(item["id"].is_string());
        assert!(item["range"].is_string());
        assert!(item["pass"].is_boolean());
        let expected_pass = item["id"] != "x";
        assert_eq!(item["pass"], expected_pass, "item: {item}");
        assert_eq!(item["counterexample"].is_null(), expected_pass);
    }
    let chain = items.iter().find(|item| item["id"] == "x").unwrap();
    assert_eq!(chain["counterexample"]["n"], 7);
    assert_eq!(chain["counterexample"]["i"], 3);
    assert_eq!(chain["counterexample"]["expected"], "< 14");
    assert_eq!(chain["counterexample"]["actual"], "14");
}

#[test]
fn identities_below_nine_is_a_usage_error() {
    let out = run(&["identities", "8"]);
    assert_eq!(exit_code(&out), 2);
}

// ------------------------------------------------------------------ cache --

fn run_table_with_cache(n_max: &str, cache: &Path) -> Output {
    run(&["table", n_max, "--cache", cache.to_str().unwrap()])
}

#[test]
fn cache_runs_are_byte_identical_and_extension_preserves_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.cache");

    let first = run_table_with_cache("50", &path);
    assert_eq!(exit_code(&first), 0);
    let file_after_first = std::fs::read(&path).unwrap();
    assert!(
        std::str::from_utf8(&file_after_first)
            .unwrap()
            .starts_with("DOMPOLY-TABLE v1 n_max=50\n")
    );

    let second = run_table_with_cache("50", &path);
    assert_eq!(exit_code(&second), 0);
    assert_eq!(first.stdout, second.stdout, "stdout must be reproducible");
    let file_after_second = std::fs::read(&path).unwrap();
    assert_eq!(
        file_after_first, file_after_second,
        "a covered request must not rewrite the cache"
    );

    let extended = run_table_with_cache("100", &path);
    assert_eq!(exit_code(&extended), 0);
    let file_after_extension = std::fs::read(&path).unwrap();
    let old_rows: Vec<&[u8]> = file_after_first
        .split(|&b| b == b'\n')
        .skip(1)
        .filter(|line| !line.is_empty())
        .collect();
    let new_rows: Vec<&[u8]> = file_after_extension
        .split(|&b| b == b'\n')
        .skip(1)
        .filter(|line| !line.is_empty())
        .collect();
    assert_eq!(old_rows.len(), 50);
    assert_eq!(new_rows.len(), 100);
    assert_eq!(
        &new_rows[..50],
        &old_rows[..],
        "extension must preserve the first fifty rows byte-for-byte"
    );

    // The first fifty stdout rows are reproduced from the extended cache.
    let reread = run_table_with_cache("50", &path);
    assert_eq!(reread.stdout, first.stdout);
    assert_eq!(
        std::fs::read(&path).unwrap(),
        file_after_extension,
        "printing a covered prefix must not rewrite the cache"
    );
}

#[test]
fn cache_path_can_come_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.cache");
    let out = dompoly()
        .env("DOMPOLY_CACHE", &path)
        .args(["table", "6"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    assert!(path.exists(), "the env-configured cache file must be written");
}

#[test]
fn corrupt_cache_is_reported_not_overwritten() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cache");
    std::fs::write(&path, "DOMPOLY-TABLE v1 n_max=two\n").unwrap();
    let out = run_table_with_cache("5", &path);
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_of(&out).contains("unusable cache file"),
        "stderr: {}",
        stderr_of(&out)
    );
    assert_eq!(
        std::fs::read(&path).unwrap(),
        b"DOMPOLY-TABLE v1 n_max=two\n",
        "a corrupt cache must be left for inspection"
    );
}

#[test]
fn unwritable_cache_path_is_an_argument_error() {
    let out = run(&["table", "5", "--cache", "/nonexistent-dir/t.cache"]);
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_of(&out).contains("cannot write cache file"),
        "stderr: {}",
        stderr_of(&out)
    );
}
