//! Throughput measurements for the sign kernel and the geometric codec.

use std::hint::black_box;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::{
    geometric_product, product_sign, product_sign_reference, BladeIndex, SignedBlade,
};
use crate::codec::{ga_decode, ga_encode, SymbolTable};
use crate::error::Result;

/// Required speed ratio of the word kernel over the bit-by-bit reference at
/// `n = 10_000`.
pub const MIN_SPEEDUP: f64 = 50.0;

/// Required blade products per second at `n = 10_000`.
pub const MIN_PRODUCTS_PER_SEC: f64 = 1e5;

const OPERAND_POOL: usize = 256;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n: usize,
    pub products: usize,
    pub reference_calls: usize,
    pub pairs: usize,
    pub seed: u64,
}

impl BenchConfig {
    /// Operation counts scaled so a run takes well under a second at
    /// `n <= 10_000`.
    pub fn for_dimension(n: usize, seed: u64) -> Self {
        let reference_calls = (200_000_000 / (n * n).max(1)).clamp(2, 1000);
        Self {
            n,
            products: 200_000,
            reference_calls,
            pairs: 3,
            seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub n: usize,
    pub products: usize,
    pub reference_calls: usize,
    pub pairs: usize,
    /// Product of every measured sign; identical for identical seeds.
    pub sign_checksum: i64,
    pub products_per_sec: f64,
    pub kernel_ns_per_sign: f64,
    pub reference_ns_per_sign: f64,
    pub speedup: f64,
    pub encode_us: f64,
    pub decode_us: f64,
}

impl BenchReport {
    /// Whether the kernel clears [`MIN_SPEEDUP`] and
    /// [`MIN_PRODUCTS_PER_SEC`]. Only enforced from `n = 10_000` up.
    pub fn meets_targets(&self) -> bool {
        self.n < 10_000
            || (self.speedup >= MIN_SPEEDUP && self.products_per_sec >= MIN_PRODUCTS_PER_SEC)
    }
}

fn operands(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(BladeIndex, BladeIndex)>> {
    (0..OPERAND_POOL)
        .map(|_| Ok((BladeIndex::random(n, rng)?, BladeIndex::random(n, rng)?)))
        .collect()
}

pub fn run(config: &BenchConfig) -> Result<BenchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pool = operands(config.n, &mut rng)?;
    let signed: Vec<(SignedBlade, SignedBlade)> = pool
        .iter()
        .map(|(a, b)| (a.clone().into(), b.clone().into()))
        .collect();

    let mut checksum = 1i64;
    let start = Instant::now();
    for i in 0..config.products {
        let (a, b) = &signed[i % OPERAND_POOL];
        let p = geometric_product(a, b)?;
        checksum *= i64::from(black_box(p).sign());
    }
    let product_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    for i in 0..config.products {
        let (a, b) = &pool[i % OPERAND_POOL];
        checksum *= i64::from(black_box(product_sign(a, b)?));
    }
    let kernel_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    for i in 0..config.reference_calls {
        let (a, b) = &pool[i % OPERAND_POOL];
        checksum *= i64::from(black_box(product_sign_reference(a, b)?));
    }
    let reference_secs = start.elapsed().as_secs_f64();

    let kernel_ns = kernel_secs * 1e9 / config.products.max(1) as f64;
    let reference_ns = reference_secs * 1e9 / config.reference_calls.max(1) as f64;

    let names: Vec<String> = (0..config.pairs).map(|i| format!("r{i}")).collect();
    let fillers: Vec<String> = (0..config.pairs).map(|i| format!("f{i}")).collect();
    let k = (config.n / 4).max(1);
    let table = SymbolTable::generate(config.seed, config.n, k, &names, &fillers)?;
    let pairs: Vec<(&str, &str)> = names
        .iter()
        .zip(&fillers)
        .map(|(r, f)| (r.as_str(), f.as_str()))
        .collect();
    let rounds = 20;
    let start = Instant::now();
    let mut record = None;
    for _ in 0..rounds {
        record = Some(black_box(ga_encode(&table, &pairs, None)?));
    }
    let encode_us = start.elapsed().as_secs_f64() * 1e6 / rounds as f64;
    let record = record.expect("at least one round");
    let start = Instant::now();
    for _ in 0..rounds {
        for r in &names {
            black_box(ga_decode(&record, &table, r)?);
        }
    }
    let decode_us = start.elapsed().as_secs_f64() * 1e6 / (rounds * config.pairs.max(1)) as f64;

    Ok(BenchReport {
        n: config.n,
        products: config.products,
        reference_calls: config.reference_calls,
        pairs: config.pairs,
        sign_checksum: checksum,
        products_per_sec: config.products as f64 / product_secs.max(f64::MIN_POSITIVE),
        kernel_ns_per_sign: kernel_ns,
        reference_ns_per_sign: reference_ns,
        speedup: reference_ns / kernel_ns.max(f64::MIN_POSITIVE),
        encode_us,
        decode_us,
    })
}
