use std::path::Path;
use std::process::{Command, Output};

fn wilson4(args: &[&str]) -> Output {
    wilson4_in(args, None)
}

fn wilson4_in(args: &[&str], cache_env: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wilson4"));
    cmd.args(args).env_remove("WILSON4_CACHE_DIR");
    if let Some(dir) = cache_env {
        cmd.env("WILSON4_CACHE_DIR", dir);
    }
    cmd.output().expect("spawn wilson4")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tables_in(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .map(|rd| rd.flatten().map(|e| e.file_name().to_string_lossy().into_owned()).collect())
        .unwrap_or_default();
    names.sort();
    names
}

#[test]
fn verify_single_check() {
    let o = wilson4(&["verify", "--primes", "19", "--checks", "MT3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("93175"), "{out}");
    assert!(out.contains("1 passed, 0 failed, 0 skipped"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wilson4(&["verify", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(wilson4(&["verify", "--primes", "19", "--checks", "NOPE"]).status.code(), Some(2));
    assert_eq!(wilson4(&["compute", "--prime", "15", "--quantity", "factorial-mod"]).status.code(), Some(2));
    assert_eq!(wilson4(&["compute", "--prime", "11", "--quantity", "mhs"]).status.code(), Some(2));
    assert_eq!(wilson4(&["bench", "--prime", "11"]).status.code(), Some(2));
}

#[test]
fn skipped_checks_do_not_fail() {
    let o = wilson4(&["verify", "--primes", "7", "--checks", "MT3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 passed, 0 failed, 1 skipped"));
}

#[test]
fn jsonl_records() {
    let o = wilson4(&["verify", "--primes", "13,19", "--checks", "MT3,R5", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect();
    assert_eq!(lines.len(), 4);
    for key in ["id", "p", "e", "lhs", "rhs", "pass", "status", "cases", "ms", "version", "timestamp"] {
        assert!(lines[0].get(key).is_some(), "missing {key}");
    }
    let mt3 = lines.iter().find(|v| v["id"] == "MT3" && v["p"] == 19).unwrap();
    assert_eq!(mt3["lhs"], "93175");
    assert_eq!(mt3["pass"], true);
}

#[test]
fn csv_output() {
    let o = wilson4(&["verify", "--primes", "19", "--checks", "MT3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("id,p,e,lhs,rhs,pass,status"));
    assert!(lines.next().unwrap().starts_with("MT3,19,4,93175,93175,true,pass"));
}

#[test]
fn compute_quantities() {
    let run = |args: &[&str]| {
        let o = wilson4(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        stdout(&o).trim().to_string()
    };
    assert_eq!(run(&["compute", "--prime", "19", "--quantity", "factorial-mod", "--power", "4"]), "93175");
    assert_eq!(run(&["compute", "--prime", "11", "--quantity", "mhs", "--k", "6"]), "2068");
    assert_eq!(run(&["compute", "--prime", "11", "--quantity", "mhs", "--k", "8"]), "5456");
    assert_eq!(run(&["compute", "--prime", "13", "--quantity", "wilson-quotient"]).split(' ').next(), Some("0"));
    // A_{p-1} is (p-1)! = 720, which is 34 mod 49.
    assert_eq!(run(&["compute", "--prime", "7", "--quantity", "stirling", "--k", "6", "--power", "2"]), "34");
}

#[test]
fn bernoulli_table_cache_dir() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let args = ["compute", "--prime", "11", "--quantity", "bernoulli-table", "--power", "3"];
    let o = wilson4_in(&args, Some(env_dir.path()));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(tables_in(env_dir.path()), vec!["bernoulli_p11_e3_n40.txt"]);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--cache-dir", flag_dir.path().to_str().unwrap(), "--k", "10"]);
    let o = wilson4_in(&with_flag, Some(env_dir.path()));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(tables_in(flag_dir.path()), vec!["bernoulli_p11_e3_n40.txt"]);
    // B_10 = 5/66, so the entry is 5/6 mod 11^3.
    let entry: u64 = stdout(&o).trim().parse().unwrap();
    assert_eq!(entry * 6 % 1331, 5);

    let list = wilson4_in(&["cache", "list"], Some(env_dir.path()));
    assert!(stdout(&list).contains("bernoulli_p11_e3_n40.txt"));
    let clear = wilson4_in(&["cache", "clear"], Some(env_dir.path()));
    assert_eq!(clear.status.code(), Some(0));
    assert!(tables_in(env_dir.path()).is_empty());
}

#[test]
fn cached_run_matches_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--primes", "13..31", "--checks", "MT3,T2.i,R3,W2", "--format", "csv"];
    let strip = |o: &Output| -> Vec<String> {
        // Drop the timing and timestamp columns.
        stdout(o).lines().map(|l| l.split(',').take(10).collect::<Vec<_>>().join(",")).collect()
    };
    let fresh = wilson4(&args);
    let first = wilson4_in(&args, Some(dir.path()));
    assert!(!tables_in(dir.path()).is_empty());
    let second = wilson4_in(&args, Some(dir.path()));
    assert_eq!(fresh.status.code(), Some(0));
    assert_eq!(strip(&fresh), strip(&first));
    assert_eq!(strip(&first), strip(&second));
}

#[test]
fn bench_reports_match() {
    let o = wilson4(&["bench", "--prime", "19", "--repeat", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("direct  93175") && out.contains("formula 93175") && out.contains("match"), "{out}");
}

#[test]
fn checks_listing() {
    let o = wilson4(&["checks"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("MT3")));
    assert!(out.lines().count() > 50);
}
