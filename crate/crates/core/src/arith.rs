//! The direct route: arithmetic autocorrelation from the integer difference
//! `σ(a) - σ(a^(τ))`.
//!
//! Sign convention: when `σ(a) > σ(b)` the value is `n - 2·w₂(σ(a) - σ(b))`,
//! otherwise `2·w₂(σ(b) - σ(a)) - n`. Every route in this crate uses it.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::distribution::DistributionTable;
use crate::error::{Error, Result};
use crate::sequences::BinarySequence;

/// Unsigned multi-word integer, least significant word first.
#[derive(Clone, Debug, Default)]
pub struct WideInt {
    words: Vec<u64>,
}

impl WideInt {
    pub fn from_words(words: Vec<u64>) -> Self {
        WideInt { words }
    }

    pub fn from_u128(v: u128) -> Self {
        WideInt {
            words: vec![v as u64, (v >> 64) as u64],
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Value as `u128` when it fits.
    pub fn to_u128(&self) -> Option<u128> {
        if self.words.iter().skip(2).any(|&w| w != 0) {
            return None;
        }
        let lo = self.words.first().copied().unwrap_or(0) as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        Some(lo | hi << 64)
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    /// `self - rhs` by schoolbook borrow subtraction; `None` if `rhs > self`.
    pub fn checked_sub(&self, rhs: &WideInt) -> Option<WideInt> {
        let len = self.words.len().max(rhs.words.len());
        let mut out = Vec::with_capacity(len);
        let mut borrow = false;
        for i in 0..len {
            let (d, b1) = self.word(i).overflowing_sub(rhs.word(i));
            let (d, b2) = d.overflowing_sub(borrow as u64);
            out.push(d);
            borrow = b1 || b2;
        }
        (!borrow).then_some(WideInt { words: out })
    }

    /// `|self - rhs|` together with the ordering of `self` against `rhs`.
    pub fn abs_diff(&self, rhs: &WideInt) -> (Ordering, WideInt) {
        match self.cmp(rhs) {
            Ordering::Less => (Ordering::Less, rhs.checked_sub(self).expect("rhs > self")),
            ord => (ord, self.checked_sub(rhs).expect("self ≥ rhs")),
        }
    }

    /// 2-adic weight: number of one bits.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// `self · 2^k`.
    pub fn shl(&self, k: usize) -> WideInt {
        let (ws, bs) = (k / 64, k % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] |= w << bs;
            if bs != 0 {
                out[i + ws + 1] |= w >> (64 - bs);
            }
        }
        WideInt { words: out }
    }
}

impl PartialEq for WideInt {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for WideInt {}

impl PartialOrd for WideInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WideInt {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        (0..len)
            .rev()
            .map(|i| self.word(i).cmp(&other.word(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

/// `σ(a) = Σ a_λ 2^λ`.
pub fn sigma(seq: &BinarySequence) -> WideInt {
    WideInt::from_words(seq.words().to_vec())
}

pub fn weight(x: &WideInt) -> u64 {
    x.weight()
}

/// The signed correlation value of the two-row matrix with rows `a` and `b`;
/// `None` when `σ(a) = σ(b)`.
pub fn two_row_value(a: &BinarySequence, b: &BinarySequence) -> Result<Option<i64>> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch {
            left: a.period(),
            right: b.period(),
        });
    }
    let n = a.period() as i64;
    let (ord, diff) = sigma(a).abs_diff(&sigma(b));
    let w = diff.weight() as i64;
    Ok(match ord {
        Ordering::Greater => Some(n - 2 * w),
        Ordering::Less => Some(2 * w - n),
        Ordering::Equal => None,
    })
}

/// Arithmetic autocorrelation `A_a(τ)` for `1 ≤ τ ≤ n - 1`.
pub fn arithmetic_autocorr(seq: &BinarySequence, tau: usize) -> Result<i64> {
    let n = seq.period();
    if tau == 0 || tau >= n {
        return Err(Error::TauOutOfRange {
            tau,
            min: 1,
            max: n - 1,
        });
    }
    let shifted = seq.rotate(tau);
    two_row_value(seq, &shifted)?.ok_or(Error::ShiftEqualsSequence { tau })
}

/// `A_a(τ)` for every `τ` in `1..n`, by position (`values[τ - 1]`). Shifts
/// are evaluated in parallel; on failure the smallest offending `τ` wins.
pub fn autocorrelation_values(seq: &BinarySequence) -> Result<Vec<i64>> {
    (1..seq.period())
        .into_par_iter()
        .map(|tau| arithmetic_autocorr(seq, tau))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// The multiset `{A_a(τ) : 1 ≤ τ ≤ n - 1}`.
pub fn distribution(seq: &BinarySequence) -> Result<DistributionTable> {
    Ok(autocorrelation_values(seq)?.into_iter().collect())
}
