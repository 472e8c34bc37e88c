//! End-to-end tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dpcolor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dpcolor-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn dpexact_reports_the_even_cycle_minimum() {
    let out = run(&[
        "dpexact",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--k",
        "2",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], serde_json::json!("80"));
    assert_eq!(report["covers_examined"], serde_json::json!(2));
    assert_eq!(report["free_slots"], serde_json::json!(1));
    assert!(report["witness"].is_object());
}

#[test]
fn gen_then_classify_round_trip() {
    let dir = scratch_dir("gen");
    let path = dir.join("cycle.json");
    let out = run(&["gen", "--family", "loose_cycle", "--r", "3", "--p", "3"]);
    assert!(out.status.success());
    std::fs::write(&path, stdout(&out)).unwrap();

    let out = run(&["classify", "--input", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["classification"], serde_json::json!("unicyclic"));
    assert_eq!(report["cycle_length"], serde_json::json!(3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_terse_format_parses_back() {
    let dir = scratch_dir("terse");
    let path = dir.join("path.txt");
    let out = run(&[
        "gen",
        "--family",
        "loose_path",
        "--r",
        "3",
        "--m",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n=5\n"), "got {text:?}");
    std::fs::write(&path, text).unwrap();
    let out = run(&["count", "--input", path.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["count"], serde_json::json!("18"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn budget_refusal_exits_3_with_estimate() {
    let out = run(&[
        "count",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--k",
        "3",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_str(&stderr(&out)).unwrap();
    assert_eq!(err["error"]["code"], serde_json::json!("ResourceLimit"));
    let message = err["error"]["message"].as_str().unwrap();
    assert!(
        message.contains("26244"),
        "estimate missing from {message:?}"
    );
}

#[test]
fn invalid_inputs_exit_4() {
    // no instance source
    let out = run(&["count", "--k", "2"]);
    assert_eq!(out.status.code(), Some(4));

    // both sources
    let out = run(&[
        "count",
        "--k",
        "2",
        "--input",
        "x.json",
        "--family",
        "loose_path",
    ]);
    assert_eq!(out.status.code(), Some(4));

    // malformed file
    let dir = scratch_dir("bad");
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"n\": 4, \"edges\": [[0,1],[0,1,2]]}").unwrap();
    let out = run(&["count", "--k", "2", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let err: serde_json::Value = serde_json::from_str(&stderr(&out)).unwrap();
    assert_eq!(err["error"]["code"], serde_json::json!("EdgeContainment"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_hits_do_not_change_reports() {
    let dir = scratch_dir("cache");
    let cache = dir.join("cache");
    let args = [
        "dpexact",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--k",
        "2",
    ];
    let plain = run(&args);
    assert!(plain.status.success());

    let mut with_cache: Vec<&str> = args.to_vec();
    let cache_str = cache.to_str().unwrap().to_string();
    with_cache.extend(["--cache-dir", &cache_str]);
    let first = run(&with_cache);
    assert!(first.status.success());
    let entries = std::fs::read_dir(&cache).unwrap().count();
    assert_eq!(entries, 1, "one cache entry expected");
    let second = run(&with_cache);
    assert!(second.status.success());

    assert_eq!(stdout(&plain), stdout(&first));
    assert_eq!(stdout(&first), stdout(&second));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_env_var_is_honored() {
    let dir = scratch_dir("cache-env");
    let out = bin()
        .args([
            "count",
            "--family",
            "loose_path",
            "--r",
            "3",
            "--m",
            "2",
            "--k",
            "3",
        ])
        .env("DPCOLOR_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stale_cache_schema_is_ignored() {
    let dir = scratch_dir("stale");
    let args = [
        "count",
        "--family",
        "loose_path",
        "--r",
        "3",
        "--m",
        "2",
        "--k",
        "2",
    ];
    let dir_str = dir.to_str().unwrap().to_string();
    let mut with_cache: Vec<&str> = args.to_vec();
    with_cache.extend(["--cache-dir", &dir_str]);

    let first = run(&with_cache);
    assert!(first.status.success());
    // corrupt the entry with a wrong schema version
    let entry = std::fs::read_dir(&dir)
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    std::fs::write(&entry, r#"{"schema": 999, "report": {"count": "street"}}"#).unwrap();
    let second = run(&with_cache);
    assert!(second.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn monte_carlo_is_byte_deterministic() {
    let args = [
        "mc",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "3",
        "--k",
        "2",
        "--trials",
        "200",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], serde_json::json!(11));
}

#[test]
fn worker_count_does_not_change_results() {
    let base = [
        "count",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--k",
        "3",
    ];
    let one = bin().args(base).args(["--workers", "1"]).output().unwrap();
    let four = bin().args(base).args(["--workers", "4"]).output().unwrap();
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn strictless_reports_exact_sides() {
    let out = run(&[
        "strictless",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--edge",
        "0",
        "--k",
        "2",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["holds"], serde_json::json!(true));
    assert_eq!(report["lhs"], serde_json::json!("108"));
    assert_eq!(report["rhs"], serde_json::json!("328/3"));
}

#[test]
fn chidp_and_dpclosed() {
    let out = run(&[
        "chidp",
        "--family",
        "graph_cycle",
        "--p",
        "4",
        "--kmax",
        "4",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["chi_dp"], serde_json::json!(3));

    let out = run(&[
        "dpclosed",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "4",
        "--k",
        "3",
    ]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], serde_json::json!("4095"));
    assert_eq!(report["form"], serde_json::json!("unicyclic-even-cycle"));

    let out = run(&[
        "dpclosed",
        "--family",
        "graph_cycle",
        "--p",
        "4",
        "--k",
        "2",
    ]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], serde_json::Value::Null);
}

#[test]
fn profile_csv_lists_tuples() {
    let out = run(&[
        "profile",
        "--family",
        "loose_cycle",
        "--r",
        "3",
        "--p",
        "3",
        "--edge",
        "2",
        "--k",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("tuple,count\n"));
    assert!(text.contains("\"1,1,1\",5"), "got {text}");
    assert!(text.contains("\"1,2,1\",4"), "got {text}");
}

#[test]
fn verify_passes_and_reports_each_claim() {
    let out = run(&["verify", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("claim,status,detail\n"));
    let passes = text.lines().filter(|l| l.contains(",PASS,")).count();
    assert_eq!(passes, 11, "got {text}");
}
