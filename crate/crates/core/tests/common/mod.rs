#![allow(dead_code)]

use arithcorr::gf2m::{FieldContext, FieldElement};
use arithcorr::sequences::BinarySequence;
use rand::Rng;

/// Period of the sequence produced by the linear recurrence of the modulus,
/// seeded with `T(π^0) … T(π^(m-1))` computed by repeated squaring.
pub fn lfsr_sequence(ctx: &FieldContext) -> Vec<bool> {
    let m = ctx.m() as usize;
    let n = ctx.n() as usize;
    let poly = ctx.modulus();
    let mut bits: Vec<bool> = (0..m)
        .map(|i| ctx.trace_by_squaring(ctx.pow(ctx.pi(), i as u64)))
        .collect();
    while bits.len() < n {
        let start = bits.len() - m;
        let next = (0..m)
            .filter(|&i| poly.coefficient(i as u32))
            .fold(false, |acc, i| acc ^ bits[start + i]);
        bits.push(next);
    }
    bits
}

/// The correlation value of two rows from `u128` arithmetic (period ≤ 127).
pub fn direct_u128(a: &[bool], b: &[bool]) -> Option<i64> {
    assert!(a.len() <= 127 && a.len() == b.len());
    let sigma = |s: &[bool]| {
        s.iter()
            .enumerate()
            .fold(0u128, |acc, (i, &x)| acc | (x as u128) << i)
    };
    let (sa, sb) = (sigma(a), sigma(b));
    let n = a.len() as i64;
    let w = sa.abs_diff(sb).count_ones() as i64;
    match sa.cmp(&sb) {
        std::cmp::Ordering::Greater => Some(n - 2 * w),
        std::cmp::Ordering::Less => Some(2 * w - n),
        std::cmp::Ordering::Equal => None,
    }
}

pub fn rotated(bits: &[bool], t: usize) -> Vec<bool> {
    let n = bits.len();
    (0..n).map(|i| bits[(i + t) % n]).collect()
}

/// `N(α,β;l)` by scanning every start and every window length.
pub fn naive_block_counts(a: &[bool], b: &[bool]) -> Vec<(bool, bool, usize, u64)> {
    let n = a.len();
    let unequal = |i: usize| a[i % n] != b[i % n];
    let mut out = Vec::new();
    for alpha in [false, true] {
        for beta in [false, true] {
            for l in 0..n {
                let count = (0..n)
                    .filter(|&start| {
                        let end = start + l + 1;
                        unequal(start)
                            && unequal(end)
                            && a[start] == alpha
                            && a[end % n] == beta
                            && (start + 1..end).all(|i| !unequal(i))
                    })
                    .count() as u64;
                if count != 0 {
                    out.push((alpha, beta, l, count));
                }
            }
        }
    }
    out
}

pub fn random_bits<R: Rng>(rng: &mut R, n: usize) -> Vec<bool> {
    (0..n).map(|_| rng.gen()).collect()
}

pub fn seq(bits: &[bool]) -> BinarySequence {
    BinarySequence::from_bits(bits.iter().copied()).unwrap()
}

pub fn element(bits: u32) -> FieldElement {
    FieldElement::from_bits(bits)
}
