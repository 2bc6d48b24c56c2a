//! Test-only oracles that share no code with the library's sign kernel.
#![allow(dead_code)]

use ga_bsc::BladeIndex;
use proptest::prelude::*;

/// Multiplies `e_a e_b` by writing out both generator lists, stably sorting
/// the concatenation (each adjacent swap of distinct generators flips the
/// sign) and cancelling equal neighbours (`e_i e_i = 1`).
///
/// Returns the sign and the 1-based positions of the surviving generators.
pub fn transposition_product(a: &[usize], b: &[usize]) -> (i8, Vec<usize>) {
    let mut list: Vec<usize> = a.iter().chain(b).copied().collect();
    let swaps = count_adjacent_swaps(&mut list);
    (
        if swaps.is_multiple_of(2) { 1 } else { -1 },
        cancel_pairs(&list),
    )
}

/// Same product, sorting with a literal bubble sort. Quadratic; used to
/// check the merge-sort count.
pub fn bubble_product(a: &[usize], b: &[usize]) -> (i8, Vec<usize>) {
    let mut list: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut swaps = 0usize;
    for end in (1..list.len()).rev() {
        for j in 0..end {
            if list[j] > list[j + 1] {
                list.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    (
        if swaps.is_multiple_of(2) { 1 } else { -1 },
        cancel_pairs(&list),
    )
}

/// Stable merge sort returning the number of adjacent swaps a bubble sort
/// would make (the inversion count).
fn count_adjacent_swaps(list: &mut [usize]) -> usize {
    let mut scratch = vec![0; list.len()];
    merge_count(list, &mut scratch)
}

fn merge_count(list: &mut [usize], scratch: &mut [usize]) -> usize {
    if list.len() < 2 {
        return 0;
    }
    let mid = list.len() / 2;
    let mut swaps = merge_count(&mut list[..mid], &mut scratch[..mid])
        + merge_count(&mut list[mid..], &mut scratch[mid..]);
    let (mut i, mut j) = (0, mid);
    for slot in scratch.iter_mut() {
        if j >= list.len() || (i < mid && list[i] <= list[j]) {
            *slot = list[i];
            i += 1;
        } else {
            *slot = list[j];
            swaps += mid - i;
            j += 1;
        }
    }
    list.copy_from_slice(scratch);
    swaps
}

fn cancel_pairs(sorted: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        if i + 1 < sorted.len() && sorted[i] == sorted[i + 1] {
            i += 2;
        } else {
            out.push(sorted[i]);
            i += 1;
        }
    }
    out
}

pub fn positions(x: &BladeIndex) -> Vec<usize> {
    (1..=x.dim()).filter(|&p| x.bit(p)).collect()
}

/// Sign and index of `e_a e_b` from the transposition oracle.
pub fn oracle_product(a: &BladeIndex, b: &BladeIndex) -> (i8, BladeIndex) {
    let (sign, pos) = transposition_product(&positions(a), &positions(b));
    (sign, BladeIndex::from_positions(a.dim(), pos).unwrap())
}

/// Every blade of an `n`-dimensional algebra, enumerated by integer value.
pub fn all_blades(n: usize) -> Vec<BladeIndex> {
    (0u64..1 << n)
        .map(|v| {
            BladeIndex::from_positions(n, (0..n).filter(|i| v >> i & 1 == 1).map(|i| i + 1))
                .unwrap()
        })
        .collect()
}

pub fn blade_strategy(n: usize) -> impl Strategy<Value = BladeIndex> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
        let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        BladeIndex::from_bit_string(&s).unwrap()
    })
}

/// `1..=max_terms` random terms with small integer coefficients, so sums and
/// products stay exact in floating point.
pub fn multivector_strategy(
    n: usize,
    max_terms: usize,
) -> impl Strategy<Value = ga_bsc::Multivector> {
    prop::collection::vec((-8i32..=8, blade_strategy(n)), 1..=max_terms).prop_map(move |terms| {
        ga_bsc::Multivector::from_terms(n, terms.into_iter().map(|(c, b)| (f64::from(c), b)))
            .unwrap()
    })
}
