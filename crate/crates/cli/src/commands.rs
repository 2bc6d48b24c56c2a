use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ga_bsc::bench::{self, BenchConfig, BenchReport};
use ga_bsc::cartan::{blade_matrix, default_factor_count};
use ga_bsc::codec::{classic_decode, CleanupMemory, EncodedRecord, Metric, SymbolTable};
use ga_bsc::format::{
    memory_from_json, memory_to_json, record_from_json, record_to_json, table_from_json,
    table_to_json,
};
use ga_bsc::verify::{self, FIXTURE_FACTORS};
use ga_bsc::{classic_encode, ga_decode_with, ga_encode, BladeIndex};
use serde_json::{json, Value};

use crate::{BenchArgs, Codec, DecodeArgs, EncodeArgs, GenArgs, MatrixArgs, Outcome, VerifyArgs};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_table(path: &Path) -> Result<SymbolTable> {
    table_from_json(&read(path)?).with_context(|| format!("parsing table {}", path.display()))
}

/// Writes `text` to `out`, or prints it when there is no output file. The
/// summary goes to stdout only when the file has somewhere else to go.
fn emit(out: Option<&Path>, text: &str, summary: impl FnOnce() -> String) -> Result<()> {
    match out {
        Some(path) => {
            write(path, text)?;
            println!("{}", summary());
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

pub fn gen(args: &GenArgs, as_json: bool) -> Result<Outcome> {
    let table = SymbolTable::generate(
        args.seed,
        args.n as usize,
        args.k as usize,
        &args.roles,
        &args.fillers,
    )?;
    if let Some(path) = &args.memory {
        let memory = CleanupMemory::from_fillers(&table, Metric::Similarity);
        write(path, &memory_to_json(&memory)?)?;
    }
    let summary = || {
        if as_json {
            serde_json::to_string_pretty(&json!({
                "n": table.n(),
                "k": table.k(),
                "seed": args.seed,
                "roles": table.roles().len(),
                "fillers": table.fillers().len(),
            }))
            .expect("summary serializes")
        } else {
            format!(
                "generated {} roles and {} fillers, n = {}, k = {}, seed {}",
                table.roles().len(),
                table.fillers().len(),
                table.n(),
                table.k(),
                args.seed
            )
        }
    };
    emit(args.out.as_deref(), &table_to_json(&table), summary)?;
    Ok(Outcome::Success)
}

fn parse_pairs(raw: &[String]) -> Result<Vec<(&str, &str)>> {
    raw.iter()
        .map(|p| match p.split_once('=') {
            Some((r, f)) if !r.is_empty() && !f.is_empty() => Ok((r, f)),
            _ => bail!("pair {p:?} is not of the form role=filler"),
        })
        .collect()
}

pub fn encode(args: &EncodeArgs, as_json: bool) -> Result<Outcome> {
    let table = load_table(&args.table)?;
    let pairs = parse_pairs(&args.pairs)?;
    let record = match args.codec {
        Codec::Ga => ga_encode(&table, &pairs, args.weights.as_deref())?,
        Codec::Classic => {
            if args.weights.is_some() {
                bail!("--weights applies to the ga codec only");
            }
            classic_encode(&table, &pairs, args.seed)?
        }
    };
    let terms = match &record {
        EncodedRecord::Ga(mv) => Some(mv.len()),
        EncodedRecord::Classic(_) => None,
    };
    let summary = || {
        if as_json {
            serde_json::to_string_pretty(&json!({
                "codec": record.codec(),
                "n": table.n(),
                "pairs": pairs.len(),
                "terms": terms,
            }))
            .expect("summary serializes")
        } else {
            let terms = terms.map_or(String::new(), |t| format!(", {t} terms"));
            let noun = if pairs.len() == 1 { "pair" } else { "pairs" };
            format!(
                "encoded {} {noun} with the {} codec{terms}",
                pairs.len(),
                record.codec()
            )
        }
    };
    emit(args.out.as_deref(), &record_to_json(&record), summary)?;
    Ok(Outcome::Success)
}

struct Decoded {
    role: String,
    filler: String,
    score: f64,
    ambiguous: bool,
    raw_terms: Option<usize>,
    distance: Option<usize>,
    below_threshold: bool,
}

impl Decoded {
    fn to_json(&self) -> Value {
        json!({
            "role": self.role,
            "filler": self.filler,
            "score": self.score,
            "ambiguous": self.ambiguous,
            "raw_terms": self.raw_terms,
            "distance": self.distance,
            "below_threshold": self.below_threshold,
        })
    }

    fn line(&self) -> String {
        let mut s = format!("{} -> {}  score {}", self.role, self.filler, self.score);
        if let Some(d) = self.distance {
            s += &format!("  distance {d}");
        }
        if let Some(t) = self.raw_terms {
            s += &format!("  raw terms {t}");
        }
        if self.ambiguous {
            s += "  [ambiguous]";
        }
        if self.below_threshold {
            s += "  [below threshold]";
        }
        s
    }
}

pub fn decode(args: &DecodeArgs, as_json: bool) -> Result<Outcome> {
    let table = load_table(&args.table)?;
    let record = record_from_json(&read(&args.input)?)
        .with_context(|| format!("parsing record {}", args.input.display()))?;
    if let Some(codec) = args.codec {
        let expected = match codec {
            Codec::Ga => "ga",
            Codec::Classic => "classic",
        };
        if record.codec() != expected {
            bail!(
                "expected a {expected} record, got a {} record",
                record.codec()
            );
        }
    }
    let memory = match &args.memory {
        Some(path) => memory_from_json(&read(path)?)
            .with_context(|| format!("parsing memory {}", path.display()))?,
        None => {
            let metric = match record {
                EncodedRecord::Ga(_) => Metric::Similarity,
                EncodedRecord::Classic(_) => Metric::Hamming,
            };
            CleanupMemory::from_fillers(&table, metric)
        }
    };
    let roles: Vec<String> = if args.role.is_empty() {
        table.roles().keys().cloned().collect()
    } else {
        args.role.clone()
    };

    let mut results = Vec::with_capacity(roles.len());
    for role in roles {
        let mut out = match &record {
            EncodedRecord::Ga(_) => {
                let d = ga_decode_with(&record, &table, &role, &memory)?;
                Decoded {
                    role,
                    filler: d.filler,
                    score: d.score,
                    ambiguous: d.ambiguous,
                    raw_terms: Some(d.raw.len()),
                    distance: None,
                    below_threshold: false,
                }
            }
            EncodedRecord::Classic(bits) => {
                let d = classic_decode(bits, table.role(&role)?, &memory)?;
                Decoded {
                    role,
                    filler: d.filler,
                    score: 1.0 - 2.0 * d.distance as f64 / table.n() as f64,
                    ambiguous: d.ambiguous,
                    raw_terms: None,
                    distance: Some(d.distance),
                    below_threshold: false,
                }
            }
        };
        out.below_threshold = out.score.abs() < args.threshold;
        results.push(out);
    }

    let text = if as_json {
        serde_json::to_string_pretty(&json!({
            "codec": record.codec(),
            "threshold": args.threshold,
            "results": results.iter().map(Decoded::to_json).collect::<Vec<_>>(),
        }))
        .expect("report serializes")
    } else {
        results
            .iter()
            .map(Decoded::line)
            .collect::<Vec<_>>()
            .join("\n")
    };
    match &args.out {
        Some(path) => write(path, &text)?,
        None => println!("{text}"),
    }
    Ok(Outcome::Success)
}

pub fn verify(args: &VerifyArgs, as_json: bool) -> Result<Outcome> {
    if args.m != FIXTURE_FACTORS {
        bail!(
            "the worked example is pinned to --m {FIXTURE_FACTORS}, got --m {}",
            args.m
        );
    }
    let report = match &args.table {
        Some(path) => verify::verify_table(&load_table(path)?, args.m)?,
        None => verify::verify(args.m)?,
    };
    if as_json {
        print_json(&json!({
            "passed": report.passed(),
            "trace_value": report.trace_value,
            "first_failure": report.first_failure().map(|c| c.name),
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        }));
    } else {
        for c in &report.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            println!("[{tag}] {}: {}", c.name, c.detail);
        }
        match report.first_failure() {
            None => println!(
                "PASS: trace product with e_Pat = 16 alpha = {}",
                report.trace_value
            ),
            Some(c) => println!("FAIL: first violated check is {:?}", c.name),
        }
    }
    Ok(if report.passed() {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}

fn bench_json(r: &BenchReport) -> Value {
    json!({
        "n": r.n,
        "products": r.products,
        "reference_calls": r.reference_calls,
        "pairs": r.pairs,
        "sign_checksum": r.sign_checksum,
        "products_per_sec": r.products_per_sec,
        "kernel_ns_per_sign": r.kernel_ns_per_sign,
        "reference_ns_per_sign": r.reference_ns_per_sign,
        "speedup": r.speedup,
        "encode_us": r.encode_us,
        "decode_us": r.decode_us,
        "meets_targets": r.meets_targets(),
    })
}

pub fn bench(args: &BenchArgs, as_json: bool) -> Result<Outcome> {
    let reports = args
        .n
        .iter()
        .map(|&n| bench::run(&BenchConfig::for_dimension(n, args.seed)))
        .collect::<ga_bsc::Result<Vec<_>>>()?;
    if as_json {
        print_json(&Value::Array(reports.iter().map(bench_json).collect()));
    } else {
        for r in &reports {
            println!(
                "n = {}: {:.3e} products/s, kernel {:.1} ns/sign, reference {:.1} ns/sign, speedup {:.1}x",
                r.n, r.products_per_sec, r.kernel_ns_per_sign, r.reference_ns_per_sign, r.speedup
            );
            println!(
                "  {}-pair record: encode {:.2} us, decode {:.2} us per role; checksum {}",
                r.pairs, r.encode_us, r.decode_us, r.sign_checksum
            );
            if !r.meets_targets() {
                println!(
                    "  FAIL: needs >= {}x speedup and >= {:e} products/s",
                    bench::MIN_SPEEDUP,
                    bench::MIN_PRODUCTS_PER_SEC
                );
            }
        }
    }
    Ok(if reports.iter().all(BenchReport::meets_targets) {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}

pub fn matrix(args: &MatrixArgs) -> Result<Outcome> {
    let blade = match args.n {
        Some(n) => BladeIndex::from_literal(&args.blade, n)?,
        None => BladeIndex::from_bit_string(&args.blade)?,
    };
    let m = args.m.unwrap_or_else(|| default_factor_count(blade.dim()));
    println!("{}", blade_matrix(&blade, m)?.to_json());
    Ok(Outcome::Success)
}
