//! JSON files for symbol tables, records and clean-up memories.
//!
//! Blade literals follow [`BladeIndex::to_literal`]: bit strings up to 64
//! bits, hex above. Terms are written in lexicographic blade order.
//!
//! ```json
//! {"n": 4, "k": 2, "roles": {"name": "1010"}, "fillers": {"Pat": "1100"}}
//! {"codec": "ga", "n": 4, "terms": [[2.0, "0110"], [2.0, "1111"]]}
//! {"codec": "classic", "n": 4, "bits": "0110"}
//! {"n": 4, "metric": "similarity", "entries": {"Pat": "1100"}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::blade::BladeIndex;
use crate::codec::{CleanupMemory, EncodedRecord, Metric, SymbolTable};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

#[derive(Serialize, Deserialize)]
struct TableFile {
    n: usize,
    k: usize,
    roles: BTreeMap<String, String>,
    fillers: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "codec", rename_all = "lowercase")]
enum RecordFile {
    Ga {
        n: Option<usize>,
        terms: Vec<(f64, String)>,
    },
    Classic {
        n: Option<usize>,
        bits: String,
    },
}

#[derive(Serialize, Deserialize)]
struct MemoryFile {
    n: usize,
    metric: String,
    entries: BTreeMap<String, String>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

/// Literal with an optional explicit dimension; bit strings carry their own.
fn parse_literal(lit: &str, n: Option<usize>) -> Result<BladeIndex> {
    match n {
        Some(n) => BladeIndex::from_literal(lit, n),
        None => BladeIndex::from_bit_string(lit),
    }
}

pub fn table_to_json(table: &SymbolTable) -> String {
    let lits = |m: &BTreeMap<String, BladeIndex>| {
        m.iter().map(|(k, v)| (k.clone(), v.to_literal())).collect()
    };
    let file = TableFile {
        n: table.n(),
        k: table.k(),
        roles: lits(table.roles()),
        fillers: lits(table.fillers()),
    };
    serde_json::to_string_pretty(&file).expect("table serializes")
}

pub fn table_from_json(text: &str) -> Result<SymbolTable> {
    let file: TableFile = serde_json::from_str(text).map_err(parse_err)?;
    let mut table = SymbolTable::new(file.n, file.k)?;
    for (name, lit) in &file.roles {
        table.add_role(name, BladeIndex::from_literal(lit, file.n)?)?;
    }
    for (name, lit) in &file.fillers {
        table.add_filler(name, BladeIndex::from_literal(lit, file.n)?)?;
    }
    Ok(table)
}

pub fn record_to_json(record: &EncodedRecord) -> String {
    let file = match record {
        EncodedRecord::Ga(mv) => RecordFile::Ga {
            n: Some(mv.dim()),
            terms: mv.terms().map(|(b, c)| (c, b.to_literal())).collect(),
        },
        EncodedRecord::Classic(bits) => RecordFile::Classic {
            n: Some(bits.dim()),
            bits: bits.to_literal(),
        },
    };
    serde_json::to_string_pretty(&file).expect("record serializes")
}

pub fn record_from_json(text: &str) -> Result<EncodedRecord> {
    let file: RecordFile = serde_json::from_str(text).map_err(parse_err)?;
    match file {
        RecordFile::Ga { n, terms } => {
            let blades = terms
                .iter()
                .map(|(c, lit)| Ok((*c, parse_literal(lit, n)?)))
                .collect::<Result<Vec<_>>>()?;
            let dim = match (n, blades.first()) {
                (Some(n), _) => n,
                (None, Some((_, b))) => b.dim(),
                (None, None) => {
                    return Err(Error::Format("empty ga record needs an explicit n".into()))
                }
            };
            Ok(EncodedRecord::Ga(Multivector::from_terms(dim, blades)?))
        }
        RecordFile::Classic { n, bits } => Ok(EncodedRecord::Classic(parse_literal(&bits, n)?)),
    }
}

pub fn memory_to_json(memory: &CleanupMemory) -> Result<String> {
    let n = memory
        .entries()
        .first()
        .map(|(_, b)| b.dim())
        .ok_or(Error::EmptyMemory)?;
    let file = MemoryFile {
        n,
        metric: memory.metric().name().to_string(),
        entries: memory
            .entries()
            .iter()
            .map(|(name, b)| (name.clone(), b.to_literal()))
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file).expect("memory serializes"))
}

pub fn memory_from_json(text: &str) -> Result<CleanupMemory> {
    let file: MemoryFile = serde_json::from_str(text).map_err(parse_err)?;
    let metric = match file.metric.as_str() {
        "similarity" => Metric::Similarity,
        "hamming" => Metric::Hamming,
        other => return Err(Error::Format(format!("unknown metric {other:?}"))),
    };
    let entries = file
        .entries
        .iter()
        .map(|(name, lit)| Ok((name.clone(), BladeIndex::from_literal(lit, file.n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CleanupMemory::new(entries, metric))
}
