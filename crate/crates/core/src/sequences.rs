//! Periodic binary sequences and m-sequence generation.
//!
//! One period of a sequence is stored as packed `u64` words, index 0 in the
//! least significant bit of the first word. That is exactly the layout of
//! the integer `σ(a) = Σ a_λ 2^λ`, so the [`arith`](crate::arith) module
//! reads the words directly.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2m::{FieldContext, FieldElement};

/// One full period of a binary sequence. Indexing is cyclic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    words: Vec<u64>,
    len: usize,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinarySequence {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if bit {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        if len < 2 {
            return Err(Error::PeriodTooShort(len));
        }
        Ok(BinarySequence { words, len })
    }

    /// Builds a sequence from packed words; bits past `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::PeriodTooShort(len));
        }
        words.resize(word_count(len), 0);
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= low_mask(len % 64);
        }
        Ok(BinarySequence { words, len })
    }

    pub fn period(&self) -> usize {
        self.len
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at cyclic index `i`.
    pub fn get(&self, i: usize) -> bool {
        let i = i % self.len;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Up to 64 bits starting at `pos` with bit `j` of the result equal to
    /// the sequence bit at `pos + j`, wrapping cyclically.
    pub fn window(&self, pos: usize, len: usize) -> u64 {
        debug_assert!(len <= 64);
        if len == 0 {
            return 0;
        }
        let pos = pos % self.len;
        if pos + len <= self.len {
            return self.read_linear(pos, len);
        }
        let first = self.len - pos;
        self.read_linear(pos, first) | self.window(0, len - first) << first
    }

    fn read_linear(&self, pos: usize, len: usize) -> u64 {
        let (w, off) = (pos / 64, pos % 64);
        let mut v = self.words[w] >> off;
        if off != 0 && off + len > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & low_mask(len)
    }

    /// `s^(τ)` with `s^(τ)_λ = s_(λ+τ)`.
    pub fn shift(&self, tau: usize) -> Result<Self> {
        if tau >= self.len {
            return Err(Error::TauOutOfRange {
                tau,
                min: 0,
                max: self.len - 1,
            });
        }
        Ok(self.rotate(tau))
    }

    /// Cyclic rotation by any amount (reduced mod the period).
    pub fn rotate(&self, tau: usize) -> Self {
        let tau = tau % self.len;
        if tau == 0 {
            return self.clone();
        }
        let words = (0..self.words.len())
            .map(|w| {
                let start = w * 64;
                self.window(start + tau, (self.len - start).min(64))
            })
            .collect();
        BinarySequence {
            words,
            len: self.len,
        }
    }

    fn check_period(&self, other: &BinarySequence) -> Result<()> {
        if self.len != other.len {
            return Err(Error::PeriodMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    pub fn xor(&self, other: &BinarySequence) -> Result<Self> {
        self.check_period(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BinarySequence {
            words,
            len: self.len,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn hamming_distance(&self, other: &BinarySequence) -> Result<usize> {
        Ok(self.xor(other)?.ones())
    }

    /// Number of cyclic positions where the window of `pattern.len()`
    /// bits equals `pattern`.
    pub fn pattern_count(&self, pattern: &[bool]) -> Result<usize> {
        let l = pattern.len();
        if l == 0 || l > self.len {
            return Err(Error::PatternTooLong {
                len: l,
                period: self.len,
            });
        }
        let count = (0..self.len)
            .filter(|&i| {
                pattern
                    .iter()
                    .enumerate()
                    .all(|(j, &bit)| self.get(i + j) == bit)
            })
            .count();
        Ok(count)
    }

    /// Counts of every length-`l` window (`l ≤ 24`), indexed by the window
    /// value with its first bit least significant.
    pub fn pattern_histogram(&self, l: usize) -> Result<Vec<usize>> {
        if l == 0 || l > self.len || l > 24 {
            return Err(Error::PatternTooLong {
                len: l,
                period: self.len,
            });
        }
        let mut hist = vec![0usize; 1 << l];
        for i in 0..self.len {
            hist[self.window(i, l) as usize] += 1;
        }
        Ok(hist)
    }

    /// `Σ_λ (-1)^(s_λ + s_(λ+τ))`, with `τ` taken mod the period.
    pub fn classical_autocorr(&self, tau: usize) -> i64 {
        let distance = self
            .hamming_distance(&self.rotate(tau))
            .expect("same period");
        self.len as i64 - 2 * distance as i64
    }

    /// `lambda,bit` lines, one per index.
    pub fn to_csv(&self) -> String {
        self.iter()
            .enumerate()
            .map(|(i, b)| format!("{i},{}\n", b as u8))
            .collect()
    }
}

/// Generates `(T(π^0), T(π^1), …, T(π^(n-1)))`.
pub fn m_sequence(ctx: &FieldContext) -> BinarySequence {
    let n = ctx.n() as usize;
    let mut x = FieldElement::ONE;
    let bits = (0..n).map(|_| {
        let bit = ctx.trace(x);
        x = ctx.mul_by_pi(x);
        bit
    });
    BinarySequence::from_bits(bits).expect("m ≥ 2 gives period ≥ 3")
}

/// `'0'`/`'1'` characters, index 0 leftmost.
impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::ParseSequence(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        BinarySequence::from_bits(bits)
    }
}
