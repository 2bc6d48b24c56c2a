use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_ga-bsc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn read_json(p: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(Path::new(p)).unwrap()).unwrap()
}

fn gen_table(dir: &TempDir, n: &str, k: &str, seed: &str) -> String {
    let table = path(dir, "table.json");
    let out = run(["gen", "--n", n, "--k", k, "--seed", seed, "--out", &table]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    table
}

#[test]
fn gen_writes_named_symbols() {
    let dir = TempDir::new().unwrap();
    let table = path(&dir, "t.json");
    let out = run([
        "gen",
        "--n",
        "4",
        "--k",
        "2",
        "--seed",
        "7",
        "--roles",
        "name,sex,age",
        "--fillers",
        "Pat,male,66",
        "--out",
        &table,
    ]);
    assert!(out.status.success());
    let t = read_json(&table);
    assert_eq!(t["n"], 4);
    assert_eq!(t["roles"].as_object().unwrap().len(), 3);
    let fillers = t["fillers"].as_object().unwrap();
    assert_eq!(fillers.len(), 3);
    for lit in fillers.values() {
        assert!(lit.as_str().unwrap().ends_with("00"));
    }
}

#[test]
fn gen_handles_long_strings() {
    let dir = TempDir::new().unwrap();
    let table = gen_table(&dir, "10000", "2500", "1");
    let t = read_json(&table);
    let lit = t["roles"]["r1"].as_str().unwrap();
    // hex literals above 64 bits
    assert_eq!(lit.len(), 2500);
}

#[test]
fn gen_rejects_zero_k() {
    let out = run(["gen", "--n", "4", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_rejects_k_above_n() {
    let out = run(["gen", "--n", "4", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let a = run(["gen", "--n", "64", "--k", "16", "--seed", "9"]);
    let b = run(["gen", "--n", "64", "--k", "16", "--seed", "9"]);
    let c = run(["gen", "--n", "64", "--k", "16", "--seed", "10"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn ga_record_round_trips_every_role() {
    let dir = TempDir::new().unwrap();
    let table = gen_table(&dir, "64", "16", "3");
    let record = path(&dir, "rec.json");
    let out = run([
        "encode",
        "--table",
        &table,
        "--pairs",
        "r1=f2,r2=f3,r3=f1",
        "--weights",
        "1,-2,0.5",
        "--out",
        &record,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(read_json(&record)["codec"], "ga");

    let out = run(["decode", "--table", &table, "--in", &record, "--json"]);
    assert!(out.status.success());
    let report = json(&out);
    let results = report["results"].as_array().unwrap();
    let got: Vec<_> = results
        .iter()
        .map(|r| {
            (
                r["role"].as_str().unwrap(),
                r["filler"].as_str().unwrap(),
                r["score"].as_f64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        got,
        [("r1", "f2", 1.0), ("r2", "f3", -2.0), ("r3", "f1", 0.5)]
    );
    for r in results {
        assert_eq!(r["ambiguous"], false);
        assert_eq!(r["below_threshold"], false);
        assert_eq!(r["raw_terms"], 3);
    }
}

#[test]
fn unbound_role_is_flagged() {
    let dir = TempDir::new().unwrap();
    let table = gen_table(&dir, "64", "16", "4");
    let record = path(&dir, "rec.json");
    assert!(run([
        "encode",
        "--table",
        &table,
        "--pairs",
        "r1=f1,r2=f2",
        "--out",
        &record
    ])
    .status
    .success());
    let out = run([
        "decode", "--table", &table, "--in", &record, "--role", "r3", "--json",
    ]);
    assert!(out.status.success());
    let r = &json(&out)["results"][0];
    assert_eq!(r["score"], 0.0);
    assert_eq!(r["below_threshold"], true);
}

#[test]
fn classic_single_pair_has_zero_distance() {
    let dir = TempDir::new().unwrap();
    let table = gen_table(&dir, "256", "256", "5");
    let record = path(&dir, "rec.json");
    assert!(run([
        "encode", "--codec", "classic", "--table", &table, "--pairs", "r2=f3", "--out", &record
    ])
    .status
    .success());
    assert_eq!(read_json(&record)["codec"], "classic");
    let out = run([
        "decode", "--table", &table, "--in", &record, "--role", "r2", "--json",
    ]);
    let r = &json(&out)["results"][0];
    assert_eq!(r["filler"], "f3");
    assert_eq!(r["distance"], 0);
    assert_eq!(r["score"], 1.0);
}

#[test]
fn decode_uses_a_memory_file() {
    let dir = TempDir::new().unwrap();
    let table = path(&dir, "t.json");
    let memory = path(&dir, "m.json");
    assert!(run([
        "gen", "--n", "64", "--k", "16", "--seed", "2", "--out", &table, "--memory", &memory
    ])
    .status
    .success());
    assert_eq!(read_json(&memory)["metric"], "similarity");
    let record = path(&dir, "rec.json");
    assert!(
        run(["encode", "--table", &table, "--pairs", "r1=f3", "--out", &record])
            .status
            .success()
    );
    let out = run([
        "decode", "--table", &table, "--in", &record, "--role", "r1", "--memory", &memory, "--json",
    ]);
    assert_eq!(json(&out)["results"][0]["filler"], "f3");
}

#[test]
fn decode_errors_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let table = gen_table(&dir, "64", "16", "6");
    let record = path(&dir, "rec.json");
    assert!(
        run(["encode", "--table", &table, "--pairs", "r1=f1", "--out", &record])
            .status
            .success()
    );

    let unknown = run([
        "decode", "--table", &table, "--in", &record, "--role", "nope",
    ]);
    assert_eq!(unknown.status.code(), Some(2));

    let mismatch = run([
        "decode", "--table", &table, "--in", &record, "--codec", "classic",
    ]);
    assert_eq!(mismatch.status.code(), Some(2));

    let broken = path(&dir, "broken.json");
    std::fs::write(&broken, "{\"codec\": \"ga\", \"terms\": 3}").unwrap();
    let malformed = run(["decode", "--table", &table, "--in", &broken]);
    assert_eq!(malformed.status.code(), Some(2));

    let missing = run(["encode", "--table", &table, "--pairs", "r1=zz"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad_weights = run([
        "encode",
        "--table",
        &table,
        "--pairs",
        "r1=f1",
        "--weights",
        "1,2",
    ]);
    assert_eq!(bad_weights.status.code(), Some(2));
}

#[test]
fn verify_passes_on_the_fixture() {
    let out = run(["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("16 alpha = 32"), "{text}");
    assert!(!text.contains("FAIL"));

    let report = json(&run(["verify", "--json"]));
    assert_eq!(report["passed"], true);
    assert_eq!(report["trace_value"], 32.0);
}

#[test]
fn verify_rejects_other_factor_counts() {
    assert_eq!(run(["verify", "--m", "3"]).status.code(), Some(2));
    assert_eq!(run(["verify", "--m", "5"]).status.code(), Some(2));
}

#[test]
fn verify_reports_a_tampered_table() {
    let dir = TempDir::new().unwrap();
    let table = path(&dir, "t.json");
    // Pat and male exchange strings.
    std::fs::write(
        &table,
        r#"{"n": 4, "k": 2,
            "roles": {"name": "1010", "sex": "0111", "age": "1011"},
            "fillers": {"Pat": "1000", "male": "1100", "66": "0100"}}"#,
    )
    .unwrap();
    let out = run(["verify", "--table", &table, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert_eq!(report["first_failure"], "encoded record");
}

#[test]
fn bench_small_dimension_is_quick_and_deterministic() {
    let start = std::time::Instant::now();
    let a = run(["bench", "--n", "64", "--seed", "3", "--json"]);
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert!(a.status.success());
    let b = run(["bench", "--n", "64", "--seed", "3", "--json"]);
    let (a, b) = (json(&a), json(&b));
    for key in ["n", "products", "reference_calls", "pairs", "sign_checksum"] {
        assert_eq!(a[0][key], b[0][key], "{key}");
    }
}

#[test]
fn bench_reports_speedup_at_ten_thousand_bits() {
    let out = run(["bench", "--n", "10000", "--json"]);
    let report = json(&out);
    let speedup = report[0]["speedup"].as_f64().unwrap();
    assert!(speedup >= 50.0, "speedup {speedup}");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn matrix_dump_matches_the_e1e4_diagonal() {
    let out = run(["matrix", "--blade", "1001", "--m", "4"]);
    assert!(out.status.success());
    let dump = json(&out);
    assert_eq!(dump["order"], 16);
    let entries = dump["entries"].as_array().unwrap();
    let diag: Vec<f64> = (0..16)
        .map(|i| entries[i * 17][1].as_f64().unwrap())
        .collect();
    let pattern = [1.0, -1.0, -1.0, 1.0];
    for (i, v) in diag.iter().enumerate() {
        assert_eq!(*v, pattern[i % 4]);
    }
}
