//! Basis blades as packed bit strings and the signed geometric product.
//!
//! A blade `e_{A_1...A_n}` of an `n`-dimensional Euclidean algebra is stored
//! as the bit string `A_1...A_n`, where `A_i = 1` means the generator `e_i`
//! is present. Textual forms always put position 1 first, so `"1100"` is
//! `e_1 e_2` in a 4-dimensional algebra.
//!
//! Internally position `i` (1-based) lives in bit `(i - 1) % 64` of word
//! `(i - 1) / 64`. Bits of the last word beyond the dimension are kept zero.
//!
//! The product of two basis blades is another basis blade up to a sign:
//!
//! ```text
//! e_A e_B = (-1)^D e_{A xor B},   D = sum over k < l of B_k A_l
//! ```
//!
//! `D` counts how many generators of the right factor have to move past a
//! generator of the left factor to reach sorted order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(dim: usize) -> usize {
    dim.div_ceil(WORD_BITS)
}

fn tail_mask(dim: usize) -> u64 {
    match dim % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// An `n`-bit string naming the basis blade `e_{A_1...A_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BladeIndex {
    dim: usize,
    words: Box<[u64]>,
}

impl BladeIndex {
    /// The scalar blade `1 = e_{0...0}`.
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self {
            dim,
            words: vec![0; words_for(dim)].into_boxed_slice(),
        })
    }

    /// The pseudoscalar `e_{1...1}`.
    pub fn pseudoscalar(dim: usize) -> Result<Self> {
        let mut out = Self::zero(dim)?;
        out.words.iter_mut().for_each(|w| *w = u64::MAX);
        out.clear_tail();
        Ok(out)
    }

    /// The grade-1 blade `e_position` (1-based).
    pub fn generator(dim: usize, position: usize) -> Result<Self> {
        Self::from_positions(dim, [position])
    }

    /// Builds a blade from the 1-based positions of its generators.
    pub fn from_positions(dim: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut out = Self::zero(dim)?;
        for p in positions {
            if p == 0 || p > dim {
                return Err(Error::GeneratorOutOfRange { index: p, max: dim });
            }
            out.words[(p - 1) / WORD_BITS] |= 1 << ((p - 1) % WORD_BITS);
        }
        Ok(out)
    }

    /// Builds a blade from raw words in the internal layout. Bits beyond the
    /// dimension are discarded.
    pub fn from_words(dim: usize, words: Vec<u64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if words.len() != words_for(dim) {
            return Err(Error::Format(format!(
                "{} words cannot hold exactly {dim} bits",
                words.len()
            )));
        }
        let mut out = Self {
            dim,
            words: words.into_boxed_slice(),
        };
        out.clear_tail();
        Ok(out)
    }

    /// Uniformly random `dim`-bit string.
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Self> {
        Self::random_prefix(dim, dim, rng)
    }

    /// Random bits in positions `1..=bits`, zeros elsewhere.
    pub fn random_prefix<R: Rng + ?Sized>(dim: usize, bits: usize, rng: &mut R) -> Result<Self> {
        if bits > dim {
            return Err(Error::InvalidSupport { n: dim, k: bits });
        }
        let mut out = Self::zero(dim)?;
        let full = bits / WORD_BITS;
        for w in &mut out.words[..full] {
            *w = rng.gen();
        }
        if !bits.is_multiple_of(WORD_BITS) {
            out.words[full] = rng.gen::<u64>() & tail_mask(bits);
        }
        Ok(out)
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.dim);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Packed words, position 1 in the lowest bit of word 0.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of generators in the blade.
    pub fn grade(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_scalar(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Whether generator `e_position` (1-based) is present.
    pub fn bit(&self, position: usize) -> bool {
        assert!(
            position >= 1 && position <= self.dim,
            "position {position} outside 1..={}",
            self.dim
        );
        let p = position - 1;
        self.words[p / WORD_BITS] >> (p % WORD_BITS) & 1 == 1
    }

    /// 1-based positions of the present generators, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + t + 1)
            })
        })
    }

    /// True when every bit beyond position `k` is zero.
    pub fn within_support(&self, k: usize) -> bool {
        if k >= self.dim {
            return true;
        }
        let word = k / WORD_BITS;
        let keep = match k % WORD_BITS {
            0 => 0,
            r => (1u64 << r) - 1,
        };
        self.words[word] & !keep == 0 && self.words[word + 1..].iter().all(|&w| w == 0)
    }

    /// Componentwise XOR.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        Ok(self.xor_unchecked(other))
    }

    pub(crate) fn xor_unchecked(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a ^ b)
            .collect();
        Self {
            dim: self.dim,
            words,
        }
    }

    /// Hamming distance, i.e. the grade of the XOR without allocating it.
    pub fn hamming(&self, other: &Self) -> Result<usize> {
        check_dims(self.dim, other.dim)?;
        Ok(self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// `'0'`/`'1'` string, position 1 first.
    pub fn to_bit_string(&self) -> String {
        (1..=self.dim)
            .map(|p| if self.bit(p) { '1' } else { '0' })
            .collect()
    }

    /// Parses a `'0'`/`'1'` string; the dimension is the string length.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(invalid("empty"));
        }
        let mut out = Self::zero(s.len())?;
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => out.words[i / WORD_BITS] |= 1 << (i % WORD_BITS),
                _ => return Err(invalid("expected only '0' and '1'")),
            }
        }
        Ok(out)
    }

    /// Hex form: the bit string read as a big-endian number, left-padded with
    /// zero bits to a whole number of nibbles. Lowercase, no prefix.
    pub fn to_hex(&self) -> String {
        let nibbles = self.dim.div_ceil(4);
        let pad = nibbles * 4 - self.dim;
        (0..nibbles)
            .map(|c| {
                let mut v = 0u32;
                for j in 0..4 {
                    let padded = 4 * c + j;
                    let set = padded >= pad && self.bit(padded - pad + 1);
                    v = (v << 1) | set as u32;
                }
                char::from_digit(v, 16).unwrap()
            })
            .collect()
    }

    /// Parses the hex form for a `dim`-bit blade. An optional `0x` prefix is
    /// accepted; padding bits must be zero.
    pub fn from_hex(s: &str, dim: usize) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidLiteral {
            literal: s.to_string(),
            reason,
        };
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .unwrap_or(s);
        let nibbles = dim.div_ceil(4);
        if digits.len() != nibbles {
            return Err(invalid(format!(
                "expected {nibbles} hex digits for {dim} bits, got {}",
                digits.len()
            )));
        }
        let pad = nibbles * 4 - dim;
        let mut out = Self::zero(dim)?;
        for (c, ch) in digits.chars().enumerate() {
            let v = ch
                .to_digit(16)
                .ok_or_else(|| invalid(format!("{ch:?} is not a hex digit")))?;
            for j in 0..4 {
                if v >> (3 - j) & 1 == 0 {
                    continue;
                }
                let padded = 4 * c + j;
                if padded < pad {
                    return Err(invalid("nonzero padding bits".to_string()));
                }
                let p = padded - pad;
                out.words[p / WORD_BITS] |= 1 << (p % WORD_BITS);
            }
        }
        Ok(out)
    }

    /// File/CLI literal: bit string for `dim <= 64`, hex above.
    pub fn to_literal(&self) -> String {
        if self.dim <= 64 {
            self.to_bit_string()
        } else {
            self.to_hex()
        }
    }

    /// Inverse of [`BladeIndex::to_literal`]; a `0x` prefix forces hex.
    pub fn from_literal(s: &str, dim: usize) -> Result<Self> {
        if s.starts_with("0x") || s.starts_with("0X") || dim > 64 {
            return Self::from_hex(s, dim);
        }
        let out = Self::from_bit_string(s)?;
        if out.dim != dim {
            return Err(Error::InvalidLiteral {
                literal: s.to_string(),
                reason: format!("expected {dim} bits, got {}", out.dim),
            });
        }
        Ok(out)
    }
}

impl Ord for BladeIndex {
    /// Dimension first, then lexicographic order of the bit string.
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim.cmp(&other.dim).then_with(|| {
            for (a, b) in self.words.iter().zip(other.words.iter()) {
                let diff = a ^ b;
                if diff != 0 {
                    let lowest = diff & diff.wrapping_neg();
                    return if a & lowest != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BladeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{}]", self.to_literal())
    }
}

impl FromStr for BladeIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_bit_string(s)
    }
}

/// A basis blade with a sign of exactly +1 or -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    sign: i8,
    index: BladeIndex,
}

impl SignedBlade {
    pub fn new(sign: i64, index: BladeIndex) -> Result<Self> {
        match sign {
            1 | -1 => Ok(Self {
                sign: sign as i8,
                index,
            }),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn positive(index: BladeIndex) -> Self {
        Self { sign: 1, index }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn index(&self) -> &BladeIndex {
        &self.index
    }

    pub fn into_parts(self) -> (i8, BladeIndex) {
        (self.sign, self.index)
    }

    pub fn negated(&self) -> Self {
        Self {
            sign: -self.sign,
            index: self.index.clone(),
        }
    }
}

impl fmt::Debug for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}{:?}", self.index)
    }
}

impl From<BladeIndex> for SignedBlade {
    fn from(index: BladeIndex) -> Self {
        Self::positive(index)
    }
}

/// Parity of bits `j..64` at every position `j`.
#[inline]
fn suffix_parity(mut x: u64) -> u64 {
    x ^= x >> 1;
    x ^= x >> 2;
    x ^= x >> 4;
    x ^= x >> 8;
    x ^= x >> 16;
    x ^= x >> 32;
    x
}

/// Parity of `sum over k < l of b_k a_l` over packed words.
///
/// Walks the words from the last to the first, carrying the parity of the
/// ones of `left` already passed. Within a word, bit `j` of
/// `suffix_parity(a) >> 1` is the parity of the ones of `a` strictly above
/// `j`, so masking it with `b` and taking a popcount gives the in-word pairs.
#[inline]
pub(crate) fn sign_parity(left: &[u64], right: &[u64]) -> u32 {
    let mut carry = 0u32;
    let mut acc = 0u32;
    for (&a, &b) in left.iter().zip(right.iter()).rev() {
        let above = suffix_parity(a) >> 1;
        acc ^= (b & above).count_ones() ^ (b.count_ones() & carry);
        carry ^= a.count_ones();
    }
    acc & 1
}

#[inline]
fn parity_to_sign(parity: u32) -> i8 {
    if parity & 1 == 0 {
        1
    } else {
        -1
    }
}

pub fn grade(a: &BladeIndex) -> usize {
    a.grade()
}

pub fn xor_of(a: &BladeIndex, b: &BladeIndex) -> Result<BladeIndex> {
    a.xor(b)
}

/// Sign of `e_a e_b` relative to `e_{a xor b}`. Runs in O(n / 64) word
/// operations.
pub fn product_sign(a: &BladeIndex, b: &BladeIndex) -> Result<i8> {
    check_dims(a.dim, b.dim)?;
    Ok(parity_to_sign(sign_parity(&a.words, &b.words)))
}

/// Bit-by-bit O(n^2) evaluation of the same sign, kept for differential
/// testing and benchmarking.
pub fn product_sign_reference(a: &BladeIndex, b: &BladeIndex) -> Result<i8> {
    check_dims(a.dim, b.dim)?;
    let n = a.dim;
    let mut d = 0u64;
    for k in 1..=n {
        for l in (k + 1)..=n {
            if b.bit(k) && a.bit(l) {
                d += 1;
            }
        }
    }
    Ok(parity_to_sign((d & 1) as u32))
}

/// Signed product of two basis blades.
pub fn geometric_product(a: &SignedBlade, b: &SignedBlade) -> Result<SignedBlade> {
    check_dims(a.index.dim, b.index.dim)?;
    let sign = a.sign * b.sign * parity_to_sign(sign_parity(&a.index.words, &b.index.words));
    Ok(SignedBlade {
        sign,
        index: a.index.xor_unchecked(&b.index),
    })
}

/// `(-1)^(k(k-1)/2)` for a grade-`k` blade: the sign of its reverse, and
/// also the sign of its square.
pub fn reversion_sign(grade: usize) -> i8 {
    if (grade / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1)^(sum over k < l of A_k A_l) e_a`, the two-sided inverse of `e_a`.
pub fn blade_inverse(a: &BladeIndex) -> SignedBlade {
    SignedBlade {
        sign: reversion_sign(a.grade()),
        index: a.clone(),
    }
}
