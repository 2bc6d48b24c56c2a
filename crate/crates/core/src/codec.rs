//! Record encoding and decoding.
//!
//! Two codecs share one symbol table:
//!
//! * the geometric codec binds a role and a filler with the signed blade
//!   product, chunks bound pairs by adding them as a [`Multivector`], and
//!   unbinds by multiplying with the role's inverse. Fillers only use the
//!   first `k` positions, so unbinding noise almost always lands outside
//!   the filler subspace and is removed by projection before clean-up.
//! * the classic codec binds with XOR, chunks with a per-position majority
//!   vote and cleans up by Hamming distance.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::{blade_inverse, BladeIndex, SignedBlade};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Draws per symbol before generation gives up.
pub const MAX_DRAWS: usize = 1024;

/// Scores closer than this count as tied during clean-up.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Named role and filler blades of one algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolTable {
    n: usize,
    k: usize,
    roles: BTreeMap<String, BladeIndex>,
    fillers: BTreeMap<String, BladeIndex>,
}

impl SymbolTable {
    /// Empty table for `n`-bit symbols with `k`-bit fillers.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if k == 0 || k > n {
            return Err(Error::InvalidFillerBits { n, k });
        }
        Ok(Self {
            n,
            k,
            roles: BTreeMap::new(),
            fillers: BTreeMap::new(),
        })
    }

    /// Seeded random table. Roles are uniform over nonzero `n`-bit strings,
    /// fillers uniform over nonzero `k`-bit prefixes followed by zeros. A
    /// draw that repeats an existing symbol is redrawn. Fillers are drawn
    /// first, since their space is the smaller one.
    pub fn generate<S: AsRef<str>>(
        seed: u64,
        n: usize,
        k: usize,
        role_names: &[S],
        filler_names: &[S],
    ) -> Result<Self> {
        let mut table = Self::new(n, k)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for name in filler_names {
            let blade = table.draw(name.as_ref(), k, &mut rng)?;
            table.add_filler(name.as_ref(), blade)?;
        }
        for name in role_names {
            let blade = table.draw(name.as_ref(), n, &mut rng)?;
            table.add_role(name.as_ref(), blade)?;
        }
        Ok(table)
    }

    fn draw(&self, name: &str, bits: usize, rng: &mut ChaCha8Rng) -> Result<BladeIndex> {
        self.check_name(name)?;
        for _ in 0..MAX_DRAWS {
            let blade = BladeIndex::random_prefix(self.n, bits, rng)?;
            if !blade.is_scalar() && self.owner_of(&blade).is_none() {
                return Ok(blade);
            }
        }
        Err(Error::SymbolSpaceExhausted {
            name: name.to_string(),
            attempts: MAX_DRAWS,
        })
    }

    fn check_name(&self, name: &str) -> Result<()> {
        if self.roles.contains_key(name) || self.fillers.contains_key(name) {
            Err(Error::DuplicateName(name.to_string()))
        } else {
            Ok(())
        }
    }

    fn owner_of(&self, blade: &BladeIndex) -> Option<&str> {
        self.roles
            .iter()
            .chain(&self.fillers)
            .find(|(_, b)| *b == blade)
            .map(|(name, _)| name.as_str())
    }

    fn check_symbol(&self, name: &str, blade: &BladeIndex) -> Result<()> {
        self.check_name(name)?;
        if blade.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: blade.dim(),
            });
        }
        if let Some(other) = self.owner_of(blade) {
            return Err(Error::DuplicateBlade {
                name: name.to_string(),
                other: other.to_string(),
            });
        }
        Ok(())
    }

    pub fn add_role(&mut self, name: &str, blade: BladeIndex) -> Result<()> {
        self.check_symbol(name, &blade)?;
        if blade.is_scalar() {
            return Err(Error::ScalarRole(name.to_string()));
        }
        self.roles.insert(name.to_string(), blade);
        Ok(())
    }

    pub fn add_filler(&mut self, name: &str, blade: BladeIndex) -> Result<()> {
        self.check_symbol(name, &blade)?;
        if !blade.within_support(self.k) {
            return Err(Error::FillerOutsideSupport {
                name: name.to_string(),
                k: self.k,
            });
        }
        self.fillers.insert(name.to_string(), blade);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn roles(&self) -> &BTreeMap<String, BladeIndex> {
        &self.roles
    }

    pub fn fillers(&self) -> &BTreeMap<String, BladeIndex> {
        &self.fillers
    }

    pub fn role(&self, name: &str) -> Result<&BladeIndex> {
        self.roles
            .get(name)
            .ok_or_else(|| Error::UnknownRole(name.to_string()))
    }

    pub fn filler(&self, name: &str) -> Result<&BladeIndex> {
        self.fillers
            .get(name)
            .ok_or_else(|| Error::UnknownFiller(name.to_string()))
    }
}

/// An encoded record in one of the two codecs.
#[derive(Clone, Debug, PartialEq)]
pub enum EncodedRecord {
    Ga(Multivector),
    Classic(BladeIndex),
}

impl EncodedRecord {
    pub fn codec(&self) -> &'static str {
        match self {
            EncodedRecord::Ga(_) => "ga",
            EncodedRecord::Classic(_) => "classic",
        }
    }

    pub fn as_ga(&self) -> Result<&Multivector> {
        match self {
            EncodedRecord::Ga(mv) => Ok(mv),
            other => Err(Error::CodecMismatch {
                expected: "ga",
                found: other.codec(),
            }),
        }
    }

    pub fn as_classic(&self) -> Result<&BladeIndex> {
        match self {
            EncodedRecord::Classic(bits) => Ok(bits),
            other => Err(Error::CodecMismatch {
                expected: "classic",
                found: other.codec(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Similarity,
    Hamming,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Similarity => "similarity",
            Metric::Hamming => "hamming",
        }
    }
}

/// Stored clean symbols that noisy decodes are matched against.
#[derive(Clone, Debug, PartialEq)]
pub struct CleanupMemory {
    entries: Vec<(String, BladeIndex)>,
    metric: Metric,
}

impl CleanupMemory {
    pub fn new(entries: Vec<(String, BladeIndex)>, metric: Metric) -> Self {
        Self { entries, metric }
    }

    /// Every filler of the table.
    pub fn from_fillers(table: &SymbolTable, metric: Metric) -> Self {
        Self::new(
            table
                .fillers()
                .iter()
                .map(|(n, b)| (n.clone(), b.clone()))
                .collect(),
            metric,
        )
    }

    pub fn entries(&self) -> &[(String, BladeIndex)] {
        &self.entries
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    fn expect_metric(&self, metric: Metric) -> Result<()> {
        if self.metric == metric {
            Ok(())
        } else {
            Err(Error::MetricMismatch {
                expected: metric.name(),
                found: self.metric.name(),
            })
        }
    }
}

/// Outcome of a geometric-codec query.
#[derive(Clone, Debug, PartialEq)]
pub struct GaDecoded {
    pub filler: String,
    /// Signed similarity of the winner with the projected decode.
    pub score: f64,
    /// Another entry scored the same magnitude.
    pub ambiguous: bool,
    /// Inverse role times the record, before projection.
    pub raw: Multivector,
    /// `raw` restricted to the filler subspace.
    pub projected: Multivector,
}

/// Outcome of a classic-codec query.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicDecoded {
    pub filler: String,
    pub distance: usize,
    pub ambiguous: bool,
}

/// `sum_i w_i e_role_i e_filler_i`. Weights default to 1.
pub fn ga_encode<R: AsRef<str>, F: AsRef<str>>(
    table: &SymbolTable,
    pairs: &[(R, F)],
    weights: Option<&[f64]>,
) -> Result<EncodedRecord> {
    if let Some(w) = weights {
        if w.len() != pairs.len() {
            return Err(Error::WeightCountMismatch {
                pairs: pairs.len(),
                weights: w.len(),
            });
        }
    }
    let mut record = Multivector::zero(table.n())?;
    for (i, (role, filler)) in pairs.iter().enumerate() {
        let r = table.role(role.as_ref())?;
        let f = table.filler(filler.as_ref())?;
        let w = weights.map_or(1.0, |w| w[i]);
        let bound = crate::blade::geometric_product(&r.clone().into(), &f.clone().into())?;
        record = record.add(&Multivector::from_blade(&bound, w))?;
    }
    Ok(EncodedRecord::Ga(record))
}

/// Unbinds `role` and cleans up against the table's fillers.
pub fn ga_decode(record: &EncodedRecord, table: &SymbolTable, role: &str) -> Result<GaDecoded> {
    ga_decode_with(
        record,
        table,
        role,
        &CleanupMemory::from_fillers(table, Metric::Similarity),
    )
}

/// Unbinds `role` and picks the memory entry with the largest
/// `|similarity|` against the filler-subspace projection of the decode.
/// Ties go to the lexicographically first blade and are flagged.
pub fn ga_decode_with(
    record: &EncodedRecord,
    table: &SymbolTable,
    role: &str,
    memory: &CleanupMemory,
) -> Result<GaDecoded> {
    let payload = record.as_ga()?;
    memory.expect_metric(Metric::Similarity)?;
    let role_blade = table.role(role)?;
    if memory.entries.is_empty() {
        return Err(Error::EmptyMemory);
    }
    for (name, b) in &memory.entries {
        if b.dim() != table.n() {
            return Err(Error::DimensionMismatch {
                left: table.n(),
                right: b.dim(),
            });
        }
        if !b.within_support(table.k()) {
            return Err(Error::FillerOutsideSupport {
                name: name.clone(),
                k: table.k(),
            });
        }
    }
    let inverse = Multivector::from_blade(&blade_inverse(role_blade), 1.0);
    let raw = inverse.gp(payload)?;
    let projected = raw.project_to_support(table.k())?;

    // Entries are unit basis blades, so similarity is the projected
    // coefficient of the entry's blade.
    let scored: Vec<(&str, &BladeIndex, f64)> = memory
        .entries
        .iter()
        .map(|(name, b)| (name.as_str(), b, projected.coeff(b)))
        .collect();
    let best = scored
        .iter()
        .map(|&(_, _, s)| s.abs())
        .fold(f64::NEG_INFINITY, f64::max);
    let mut tied: Vec<_> = scored
        .iter()
        .filter(|&&(_, _, s)| best - s.abs() <= TIE_TOLERANCE)
        .collect();
    tied.sort_by(|a, b| a.1.cmp(b.1));
    let &&(filler, _, score) = tied.first().expect("memory is nonempty");
    Ok(GaDecoded {
        filler: filler.to_string(),
        score,
        ambiguous: tied.len() > 1,
        raw,
        projected,
    })
}

/// XOR binding.
pub fn classic_bind(x: &BladeIndex, y: &BladeIndex) -> Result<BladeIndex> {
    x.xor(y)
}

/// Popcount of the XOR.
pub fn hamming(a: &BladeIndex, b: &BladeIndex) -> Result<usize> {
    a.hamming(b)
}

/// Per-position majority vote. Exact ties (even item counts) are settled by
/// one seeded coin flip per tied position, in position order.
pub fn majority_chunk(items: &[BladeIndex], seed: u64) -> Result<BladeIndex> {
    let first = items.first().ok_or(Error::EmptyChunk)?;
    let n = first.dim();
    let mut counts = vec![0usize; n];
    for item in items {
        if item.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: item.dim(),
            });
        }
        for p in item.ones() {
            counts[p - 1] += 1;
        }
    }
    let total = items.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions = counts.iter().enumerate().filter_map(|(i, &c)| {
        let set = match (2 * c).cmp(&total) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => rng.gen::<bool>(),
        };
        set.then_some(i + 1)
    });
    BladeIndex::from_positions(n, positions.collect::<Vec<_>>())
}

/// Binds each pair with XOR and chunks them by majority vote.
pub fn classic_encode<R: AsRef<str>, F: AsRef<str>>(
    table: &SymbolTable,
    pairs: &[(R, F)],
    seed: u64,
) -> Result<EncodedRecord> {
    let bound = pairs
        .iter()
        .map(|(r, f)| classic_bind(table.role(r.as_ref())?, table.filler(f.as_ref())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(EncodedRecord::Classic(majority_chunk(&bound, seed)?))
}

/// XORs the record with the role and returns the nearest memory entry.
/// Ties go to the lexicographically first blade and are flagged.
pub fn classic_decode(
    record: &BladeIndex,
    role: &BladeIndex,
    memory: &CleanupMemory,
) -> Result<ClassicDecoded> {
    memory.expect_metric(Metric::Hamming)?;
    let noisy = classic_bind(record, role)?;
    let mut best: Option<(usize, &String, &BladeIndex)> = None;
    let mut ambiguous = false;
    for (name, b) in &memory.entries {
        let d = hamming(&noisy, b)?;
        match best {
            None => best = Some((d, name, b)),
            Some((bd, _, bb)) => {
                if d < bd {
                    best = Some((d, name, b));
                    ambiguous = false;
                } else if d == bd {
                    ambiguous = true;
                    if b < bb {
                        best = Some((d, name, b));
                    }
                }
            }
        }
    }
    let (distance, name, _) = best.ok_or(Error::EmptyMemory)?;
    Ok(ClassicDecoded {
        filler: name.clone(),
        distance,
        ambiguous,
    })
}

/// Decodes a classic record for a named role against the table's fillers.
pub fn classic_decode_role(
    record: &EncodedRecord,
    table: &SymbolTable,
    role: &str,
) -> Result<ClassicDecoded> {
    classic_decode(
        record.as_classic()?,
        table.role(role)?,
        &CleanupMemory::from_fillers(table, Metric::Hamming),
    )
}

/// `(name, blade)` for a table built by hand and validated entry by entry.
pub fn table_from_parts(
    n: usize,
    k: usize,
    roles: &[(&str, &str)],
    fillers: &[(&str, &str)],
) -> Result<SymbolTable> {
    let mut table = SymbolTable::new(n, k)?;
    for (name, lit) in roles {
        table.add_role(name, BladeIndex::from_literal(lit, n)?)?;
    }
    for (name, lit) in fillers {
        table.add_filler(name, BladeIndex::from_literal(lit, n)?)?;
    }
    Ok(table)
}

/// Single-term record used as a clean-up probe.
pub fn symbol_multivector(blade: &BladeIndex) -> Multivector {
    Multivector::from_blade(&SignedBlade::positive(blade.clone()), 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BladeIndex {
        s.parse().unwrap()
    }

    fn record_table() -> SymbolTable {
        table_from_parts(
            4,
            2,
            &[("name", "1010"), ("sex", "0111"), ("age", "1011")],
            &[("Pat", "1100"), ("male", "1000"), ("66", "0100")],
        )
        .unwrap()
    }

    const PAIRS: [(&str, &str); 3] = [("name", "Pat"), ("sex", "male"), ("age", "66")];

    #[test]
    fn generation_is_deterministic() {
        let roles = ["a", "b", "c"];
        let fillers = ["x", "y", "z"];
        let t1 = SymbolTable::generate(7, 64, 16, &roles, &fillers).unwrap();
        let t2 = SymbolTable::generate(7, 64, 16, &roles, &fillers).unwrap();
        assert_eq!(t1, t2);
        let t3 = SymbolTable::generate(8, 64, 16, &roles, &fillers).unwrap();
        assert_ne!(t1, t3);
        for f in t1.fillers().values() {
            assert!(f.within_support(16));
            assert!(!f.is_scalar());
        }
        for r in t1.roles().values() {
            assert!(!r.is_scalar());
        }
    }

    #[test]
    fn generation_with_full_support() {
        let t = SymbolTable::generate(1, 32, 32, &["r"], &["f1", "f2", "f3"]).unwrap();
        assert_eq!(t.k(), 32);
        assert_eq!(t.fillers().len(), 3);
    }

    #[test]
    fn generation_fills_tiny_space_or_fails() {
        // only three nonzero 2-bit prefixes exist
        let t = SymbolTable::generate(3, 4, 2, &["r"], &["a", "b", "c"]).unwrap();
        assert_eq!(t.fillers().len(), 3);
        let err = SymbolTable::generate(3, 4, 2, &["r"], &["a", "b", "c", "d"]).unwrap_err();
        assert!(matches!(err, Error::SymbolSpaceExhausted { .. }));
    }

    #[test]
    fn generation_rejects_bad_parameters() {
        assert_eq!(
            SymbolTable::generate(0, 4, 0, &["r"], &["f"]).unwrap_err(),
            Error::InvalidFillerBits { n: 4, k: 0 }
        );
        assert!(SymbolTable::generate(0, 4, 5, &["r"], &["f"]).is_err());
        assert_eq!(
            SymbolTable::generate(0, 8, 4, &["a"], &["a"]).unwrap_err(),
            Error::DuplicateName("a".into())
        );
    }

    #[test]
    fn table_validation() {
        let mut t = SymbolTable::new(4, 2).unwrap();
        assert!(matches!(
            t.add_filler("f", b("1010")),
            Err(Error::FillerOutsideSupport { .. })
        ));
        assert!(matches!(
            t.add_role("r", b("0000")),
            Err(Error::ScalarRole(_))
        ));
        t.add_role("r", b("1100")).unwrap();
        assert!(matches!(
            t.add_filler("f", b("1100")),
            Err(Error::DuplicateBlade { .. })
        ));
        assert!(t.add_role("s", b("110")).is_err());
    }

    #[test]
    fn encodes_the_record() {
        let (a, be, g) = (2.0, 3.0, 5.0);
        let rec = ga_encode(&record_table(), &PAIRS, Some(&[a, be, g])).unwrap();
        let expected = Multivector::from_terms(4, [(a, b("0110")), (g - be, b("1111"))]).unwrap();
        assert_eq!(rec, EncodedRecord::Ga(expected));
    }

    #[test]
    fn encode_edge_cases() {
        let t = record_table();
        let none: [(&str, &str); 0] = [];
        assert!(ga_encode(&t, &none, None)
            .unwrap()
            .as_ga()
            .unwrap()
            .is_empty());
        let one = ga_encode(&t, &[("sex", "male")], None).unwrap();
        let mv = one.as_ga().unwrap();
        assert_eq!(mv.len(), 1);
        assert_eq!(mv.coeff(&b("1111")), -1.0);
        assert_eq!(
            ga_encode(&t, &[("nope", "Pat")], None).unwrap_err(),
            Error::UnknownRole("nope".into())
        );
        assert_eq!(
            ga_encode(&t, &[("name", "Bob")], None).unwrap_err(),
            Error::UnknownFiller("Bob".into())
        );
        assert!(matches!(
            ga_encode(&t, &PAIRS, Some(&[1.0])),
            Err(Error::WeightCountMismatch {
                pairs: 3,
                weights: 1
            })
        ));
    }

    #[test]
    fn decodes_name_from_the_record() {
        let t = record_table();
        let (a, be, g) = (2.0, 3.0, 5.0);
        let rec = ga_encode(&t, &PAIRS, Some(&[a, be, g])).unwrap();
        let out = ga_decode(&rec, &t, "name").unwrap();
        assert_eq!(out.filler, "Pat");
        assert_eq!(out.score, a);
        assert!(!out.ambiguous);
        // inverse of e_1010 is -e_1010
        let raw = Multivector::from_terms(4, [(a, b("1100")), (be - g, b("0101"))]).unwrap();
        assert_eq!(out.raw, raw);
    }

    #[test]
    fn cancelled_pairs_give_no_signal() {
        let t = record_table();
        let rec = ga_encode(&t, &PAIRS, Some(&[2.0, 3.0, 3.0])).unwrap();
        assert_eq!(rec.as_ga().unwrap().len(), 1);
        let out = ga_decode(&rec, &t, "sex").unwrap();
        assert_eq!(out.score, 0.0);
        assert!(out.ambiguous);
    }

    #[test]
    fn single_pair_round_trip() {
        let t = SymbolTable::generate(11, 64, 16, &["r"], &["f", "g", "h"]).unwrap();
        for w in [1.0, -0.5, 7.0] {
            let rec = ga_encode(&t, &[("r", "g")], Some(&[w])).unwrap();
            let out = ga_decode(&rec, &t, "r").unwrap();
            assert_eq!(out.filler, "g");
            assert_eq!(out.score, w);
            assert_eq!(out.raw.len(), 1);
        }
    }

    #[test]
    fn decode_errors() {
        let t = record_table();
        let rec = ga_encode(&t, &PAIRS, None).unwrap();
        assert_eq!(
            ga_decode(&rec, &t, "height").unwrap_err(),
            Error::UnknownRole("height".into())
        );
        let empty = CleanupMemory::new(vec![], Metric::Similarity);
        assert_eq!(
            ga_decode_with(&rec, &t, "name", &empty).unwrap_err(),
            Error::EmptyMemory
        );
        let classic = EncodedRecord::Classic(b("1010"));
        assert!(matches!(
            ga_decode(&classic, &t, "name"),
            Err(Error::CodecMismatch { .. })
        ));
        let bad = CleanupMemory::new(vec![("x".into(), b("0011"))], Metric::Similarity);
        assert!(matches!(
            ga_decode_with(&rec, &t, "name", &bad),
            Err(Error::FillerOutsideSupport { .. })
        ));
    }

    #[test]
    fn classic_bind_examples() {
        let x = b("1100");
        let y = b("1010");
        let bound = classic_bind(&x, &y).unwrap();
        assert_eq!(bound, b("0110"));
        assert_eq!(classic_bind(&x, &bound).unwrap(), y);
        assert_eq!(classic_bind(&x, &b("0000")).unwrap(), x);
    }

    #[test]
    fn majority_examples() {
        let m = majority_chunk(&[b("1100"), b("1010"), b("1001")], 0).unwrap();
        assert_eq!(m, b("1000"));
        assert_eq!(majority_chunk(&[b("0110")], 0).unwrap(), b("0110"));
        assert_eq!(majority_chunk(&[], 0), Err(Error::EmptyChunk));
        assert!(majority_chunk(&[b("01"), b("011")], 0).is_err());
    }

    #[test]
    fn majority_ties_follow_the_seed() {
        let long_a = BladeIndex::pseudoscalar(64).unwrap();
        let long_b = BladeIndex::zero(64).unwrap();
        let items = [long_a, long_b];
        let first = majority_chunk(&items, 1).unwrap();
        assert_eq!(first, majority_chunk(&items, 1).unwrap());
        assert_ne!(first, majority_chunk(&items, 2).unwrap());
        let short = [b("1100"), b("0011")];
        assert_eq!(
            majority_chunk(&short, 9).unwrap(),
            majority_chunk(&short, 9).unwrap()
        );
    }

    #[test]
    fn hamming_examples() {
        let a = b("1011");
        assert_eq!(hamming(&a, &a).unwrap(), 0);
        assert_eq!(hamming(&b("1100"), &b("0110")).unwrap(), 2);
        let n = 100;
        let zero = BladeIndex::zero(n).unwrap();
        let ones = BladeIndex::pseudoscalar(n).unwrap();
        assert_eq!(hamming(&zero, &ones).unwrap(), n);
    }

    #[test]
    fn classic_decode_contracts() {
        let t = SymbolTable::generate(5, 256, 256, &["r"], &["f", "g", "h"]).unwrap();
        let rec = classic_encode(&t, &[("r", "h")], 0).unwrap();
        let out = classic_decode_role(&rec, &t, "r").unwrap();
        assert_eq!((out.filler.as_str(), out.distance), ("h", 0));

        // without the true filler the nearest wrong one comes back
        let role = t.role("r").unwrap();
        let wrong = CleanupMemory::new(
            vec![
                ("f".into(), t.filler("f").unwrap().clone()),
                ("g".into(), t.filler("g").unwrap().clone()),
            ],
            Metric::Hamming,
        );
        let out = classic_decode(rec.as_classic().unwrap(), role, &wrong).unwrap();
        let noisy = classic_bind(rec.as_classic().unwrap(), role).unwrap();
        let expected = ["f", "g"]
            .into_iter()
            .map(|n| (hamming(&noisy, t.filler(n).unwrap()).unwrap(), n))
            .min()
            .unwrap();
        assert_eq!((out.distance, out.filler.as_str()), expected);
        assert!(out.distance > 0);

        let empty = CleanupMemory::new(vec![], Metric::Hamming);
        assert_eq!(
            classic_decode(rec.as_classic().unwrap(), role, &empty).unwrap_err(),
            Error::EmptyMemory
        );
        let wrong_metric = CleanupMemory::from_fillers(&t, Metric::Similarity);
        assert!(classic_decode(rec.as_classic().unwrap(), role, &wrong_metric).is_err());
    }

    #[test]
    fn classic_ties_are_flagged() {
        let mem = CleanupMemory::new(
            vec![("b".into(), b("0011")), ("a".into(), b("1100"))],
            Metric::Hamming,
        );
        let out = classic_decode(&b("0000"), &b("0000"), &mem).unwrap();
        assert_eq!(out.filler, "b");
        assert_eq!(out.distance, 2);
        assert!(out.ambiguous);
    }
}
