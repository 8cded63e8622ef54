//! The structural route: block-type decomposition of the two-row matrix
//! `M = (a; b)`.
//!
//! A window of `l + 2` consecutive columns has type `[α, β; l]` when its
//! first column is `(α, 1-α)`, its last is `(β, 1-β)` and all `l` columns in
//! between have equal entries. Writing `N(α, β; l)` for the number of cyclic
//! start positions with that type,
//!
//! ```text
//! g(M) = Σ_l l·(N(0,0;l) + N(0,1;l)) + Σ_l (N(1,0;l) + N(1,1;l))
//! A(M) = n - 2·g(M)
//! ```
//!
//! whenever some column equals `(1, 0)`. The formula counts the one digits of
//! `σ(a) - σ(b)` after rotating a `(1, 0)` column to the top position: each
//! run between unequal columns either contributes a single borrow-free one,
//! or `l` ones when a borrow propagates through it.
//!
//! Windows of a given type start and end on unequal columns with only equal
//! columns in between, so they are exactly the pairs of cyclically adjacent
//! unequal columns. Counting therefore takes one pass over the XOR of the
//! rows.

use crate::error::{Error, Result};
use crate::sequences::BinarySequence;

/// `N(α, β; l)` for `α, β ∈ {0, 1}` and `0 ≤ l ≤ n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTypeTable {
    n: usize,
    // indexed by 2·α + β, then l
    counts: [Vec<u64>; 4],
}

impl BlockTypeTable {
    pub fn new(n: usize) -> Self {
        BlockTypeTable {
            n,
            counts: std::array::from_fn(|_| vec![0; n]),
        }
    }

    pub fn period(&self) -> usize {
        self.n
    }

    /// `N(α, β; l)`; zero for `l ≥ n`.
    pub fn count(&self, alpha: bool, beta: bool, l: usize) -> u64 {
        self.counts[slot(alpha, beta)].get(l).copied().unwrap_or(0)
    }

    pub fn increment(&mut self, alpha: bool, beta: bool, l: usize) {
        self.counts[slot(alpha, beta)][l] += 1;
    }

    /// Sum of all counts, which equals the number of unequal columns.
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// `N(α,0;l) + N(α,1;l)`.
    pub fn starting_with(&self, alpha: bool, l: usize) -> u64 {
        self.count(alpha, false, l) + self.count(alpha, true, l)
    }

    /// Largest `l` with a nonzero count.
    pub fn max_run(&self) -> Option<usize> {
        self.nonzero().map(|(_, _, l, _)| l).max()
    }

    /// Nonzero entries as `(α, β, l, count)`, ordered by `α`, `β`, then `l`.
    pub fn nonzero(&self) -> impl Iterator<Item = (bool, bool, usize, u64)> + '_ {
        [(false, false), (false, true), (true, false), (true, true)]
            .into_iter()
            .flat_map(move |(alpha, beta)| {
                self.counts[slot(alpha, beta)]
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(move |(l, &c)| (alpha, beta, l, c))
            })
    }

    /// Debug dump: `alpha,beta,l,count` lines for nonzero entries.
    pub fn to_csv(&self) -> String {
        self.nonzero()
            .map(|(a, b, l, c)| format!("{},{},{l},{c}\n", a as u8, b as u8))
            .collect()
    }
}

fn slot(alpha: bool, beta: bool) -> usize {
    2 * alpha as usize + beta as usize
}

fn unequal_positions(a: &BinarySequence, b: &BinarySequence) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, (x, y)) in a.words().iter().zip(b.words()).enumerate() {
        let mut diff = x ^ y;
        while diff != 0 {
            out.push(w * 64 + diff.trailing_zeros() as usize);
            diff &= diff - 1;
        }
    }
    out
}

fn check_rows(a: &BinarySequence, b: &BinarySequence) -> Result<()> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch {
            left: a.period(),
            right: b.period(),
        });
    }
    if a == b {
        return Err(Error::EqualSequences);
    }
    Ok(())
}

pub fn block_type_counts(a: &BinarySequence, b: &BinarySequence) -> Result<BlockTypeTable> {
    check_rows(a, b)?;
    let n = a.period();
    let positions = unequal_positions(a, b);
    let mut table = BlockTypeTable::new(n);
    for (i, &start) in positions.iter().enumerate() {
        let end = positions[(i + 1) % positions.len()];
        // a lone unequal column pairs with itself across the full period
        let gap = (end + n - start - 1) % n;
        table.increment(a.get(start), a.get(end), gap);
    }
    Ok(table)
}

/// `g(M)`.
pub fn g_of(table: &BlockTypeTable) -> u64 {
    (0..table.period())
        .map(|l| l as u64 * table.starting_with(false, l) + table.starting_with(true, l))
        .sum()
}

/// `A(M) = n - 2·g(M)`; when no `(1, 0)` column exists the rows are swapped
/// and the result negated.
pub fn autocorr_via_blocks(a: &BinarySequence, b: &BinarySequence) -> Result<i64> {
    check_rows(a, b)?;
    let has_one_zero = a.words().iter().zip(b.words()).any(|(x, y)| x & !y != 0);
    if !has_one_zero {
        return Ok(-autocorr_via_blocks(b, a)?);
    }
    let g = g_of(&block_type_counts(a, b)?) as i64;
    Ok(a.period() as i64 - 2 * g)
}
