use std::fs;

use qtsym::cli::{main_with, run_suite, ArithMode, Suite, SuiteConfig, CACHE_FILE, REPORT_COLUMNS};

fn qtsym(args: &[&str]) -> i32 {
    main_with(std::iter::once("qtsym").chain(args.iter().copied()))
}

#[test]
fn single_catalan_record() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let code = qtsym(&["--suite", "catalan-324", "--k", "1", "--m", "2", "--n", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["summary"]["total"], 1);
    let r = &v["records"][0];
    assert_eq!(r["lhs"], "1 + q^2");
    assert_eq!(r["rhs"], "1 + q^2");
    assert_eq!(r["equal"], true);
    assert!(r["elapsed_ms"].is_null());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qtsym(&["--suite", "no-such-suite"]), 2);
    assert_eq!(qtsym(&[]), 2);
    assert_eq!(qtsym(&["--suite", "catalan-324", "--caps", "memory=1"]), 2);
    assert_eq!(qtsym(&["--suite", "shuffle-322", "--k", "1", "--m", "2", "--n", "4"]), 2);
    assert_eq!(qtsym(&["--help"]), 0);
}

#[test]
fn caps_exit_3() {
    assert_eq!(qtsym(&["--suite", "catalan-324", "--k", "2", "--m", "3", "--n", "5", "--caps", "paths=10"]), 3);
    assert_eq!(qtsym(&["--suite", "commutator", "--caps", "degree=2"]), 3);
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        assert_eq!(qtsym(&["--suite", "touch-37", "--out", out.to_str().unwrap()]), 0);
        fs::read(out).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn csv_report_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    assert_eq!(qtsym(&["--suite", "shuffle-323", "--format", "csv", "--out", out.to_str().unwrap()]), 0);
    let mut rdr = csv::Reader::from_path(&out).unwrap();
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), REPORT_COLUMNS);
    assert_eq!(rdr.records().count(), 5);
}

#[test]
fn probe_mode_agrees_with_exact() {
    let exact = run_suite(&SuiteConfig::new(Suite::Commutator)).unwrap();
    let mut cfg = SuiteConfig::new(Suite::Commutator);
    cfg.mode = ArithMode::Probe;
    cfg.seed = Some(99);
    let probe = run_suite(&cfg).unwrap();
    assert!(exact.all_equal() && probe.all_equal());
    assert_eq!(exact.records.len(), probe.records.len());
    assert!(probe.records.iter().all(|r| r.mode == "probe"));
    let v = serde_json::to_value(&probe).unwrap();
    assert_eq!(v["config"]["seed"], 99);
}

#[test]
fn tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pf.csv");
    assert_eq!(qtsym(&["--table", "pf-stats", "--format", "csv", "--out", out.to_str().unwrap()]), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("path,cars,area,tdinv,dinv,ret,pides,touch"));
    let out = dir.path().join("s.json");
    assert_eq!(qtsym(&["--table", "schur-expansion", "--out", out.to_str().unwrap()]), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["lambda"], "[2,1]");
    assert_eq!(v["rows"][0]["coefficient"], "q");
    assert_eq!(v["rows"][1]["coefficient"], "1 + q^2");
}

#[test]
fn character_cache_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("r.json");
    let args = ["--suite", "identity-425", "--cache-dir", cache.to_str().unwrap(), "--out", out.to_str().unwrap()];
    assert_eq!(qtsym(&args), 0);
    assert!(cache.join(CACHE_FILE).exists());
    assert_eq!(qtsym(&args), 0);
}
