//! The number-theoretic route: `A_s(τ)` for an m-sequence read off the
//! expansion
//!
//! ```text
//! (1 + π^τ)^(-1) = b_0 + b_1 π + … + b_(e-1) π^(e-1) + π^e,   1 ≤ e ≤ m-1
//! ```
//!
//! as `A_s(τ) = 2^(m-e) - 1` when `b_0 = 1` and `-(2^(m-e) - 1)` when
//! `b_0 = 0`. Since `τ ↦ (1 + π^τ)^(-1)` is a bijection onto
//! `GF(2^m) \ {0, 1}`, each `e` occurs for `2^(e-1)` shifts of each sign,
//! which fixes the whole distribution.
//!
//! The intermediate run counts `N^(τ)(l) = N(0,0;l) + N(0,1;l)` have a
//! closed form too ([`run_count`]), and both them and their companions
//! `N(1,0;l) + N(1,1;l)` can be counted by brute force over the field
//! ([`brute_count_zero_start`], [`brute_count_one_start`]).

use num_rational::Ratio;

use crate::distribution::DistributionTable;
use crate::error::{Error, Result};
use crate::gf2m::{FieldContext, FieldElement, InverseExpansion};

/// The closed-form prediction for one shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauProfile {
    pub tau: usize,
    pub m: u32,
    pub e: u32,
    pub b0: bool,
    pub predicted: i64,
}

impl TauProfile {
    /// `k = m - e`, so that `|A| = 2^k - 1`.
    pub fn k(&self) -> u32 {
        self.m - self.e
    }

    /// `tau,e,b0,A`
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.tau, self.e, self.b0 as u8, self.predicted
        )
    }
}

fn signed_magnitude(m: u32, e: u32, b0: bool) -> i64 {
    let magnitude = (1i64 << (m - e)) - 1;
    if b0 {
        magnitude
    } else {
        -magnitude
    }
}

fn check_tau(ctx: &FieldContext, tau: usize) -> Result<()> {
    let n = ctx.n() as usize;
    if tau == 0 || tau >= n {
        return Err(Error::TauOutOfRange {
            tau,
            min: 1,
            max: n - 1,
        });
    }
    Ok(())
}

pub fn predict_acorr(ctx: &FieldContext, tau: usize) -> Result<TauProfile> {
    let InverseExpansion { e, b } = ctx.expand_inverse_one_plus_pi_tau(tau)?;
    let b0 = b[0];
    Ok(TauProfile {
        tau,
        m: ctx.m(),
        e,
        b0,
        predicted: signed_magnitude(ctx.m(), e, b0),
    })
}

/// `±(2^k - 1) ↦ 2^(m-k-1)` for `1 ≤ k ≤ m - 1`.
pub fn predict_distribution(m: u32) -> DistributionTable {
    let mut table = DistributionTable::new();
    for k in 1..m {
        let value = (1i64 << k) - 1;
        let count = 1u64 << (m - k - 1);
        table.add(value, count);
        table.add(-value, count);
    }
    table
}

fn pow2(exp: i32) -> Ratio<i64> {
    if exp >= 0 {
        Ratio::from_integer(1i64 << exp)
    } else {
        Ratio::new(1, 1i64 << -exp)
    }
}

/// The case formula for `N^(τ)(l)` given `(m, e, b_0)`, as an exact rational.
pub fn run_count_formula(m: u32, e: u32, b0: bool, l: u32) -> Result<Ratio<i64>> {
    if l < 1 || l > m - 1 {
        return Err(Error::LOutOfRange {
            l,
            min: 1,
            max: m - 1,
        });
    }
    let sign = if b0 { -1 } else { 1 }; // (-1)^b0
    let plus = Ratio::from_integer(1 + sign);
    let minus = Ratio::from_integer(1 - sign);
    if l == m - 1 {
        return Ok(plus / 2);
    }
    let base = pow2(m as i32 - l as i32 - 3);
    Ok(if l + 2 <= e {
        base
    } else if l + 1 == e {
        base * minus
    } else {
        base * plus
    })
}

pub fn run_count_exact(ctx: &FieldContext, tau: usize, l: u32) -> Result<Ratio<i64>> {
    let profile = predict_acorr(ctx, tau)?;
    run_count_formula(ctx.m(), profile.e, profile.b0, l)
}

/// Closed-form `N^(τ)(0,0;l) + N^(τ)(0,1;l)` for `1 ≤ l ≤ m - 1`.
pub fn run_count(ctx: &FieldContext, tau: usize, l: u32) -> Result<u64> {
    let value = run_count_exact(ctx, tau, l)?;
    if !value.is_integer() || *value.numer() < 0 {
        return Err(Error::Internal(format!(
            "run count for tau={tau}, l={l} evaluated to {value}"
        )));
    }
    Ok(value.to_integer() as u64)
}

/// Exponents `j` (ascending) such that `x = π^j` satisfies
/// `T(x) = first`, `T(π^τ x) = !first`, `T(π^λ x) = T(π^(λ+τ) x)` for
/// `1 ≤ λ ≤ l` and `T(π^(l+1) x) ≠ T(π^(l+1+τ) x)`.
fn run_solutions(ctx: &FieldContext, tau: usize, l: u32, first: bool) -> Result<Vec<u32>> {
    check_tau(ctx, tau)?;
    let shift = ctx.pi_pow(tau as u64);
    let mut solutions = Vec::new();
    let mut x = FieldElement::ONE;
    for j in 0..ctx.n() {
        let mut y = x;
        let mut z = ctx.mul(shift, x);
        let mut ok = ctx.trace(y) == first && ctx.trace(z) != first;
        let mut lambda = 1;
        while ok && lambda <= l + 1 {
            y = ctx.mul_by_pi(y);
            z = ctx.mul_by_pi(z);
            let differs = ctx.trace(y) != ctx.trace(z);
            ok = differs == (lambda == l + 1);
            lambda += 1;
        }
        if ok {
            solutions.push(j);
        }
        x = ctx.mul_by_pi(x);
    }
    Ok(solutions)
}

/// Exponents of the field elements counted by [`brute_count_zero_start`].
pub fn zero_start_solutions(ctx: &FieldContext, tau: usize, l: u32) -> Result<Vec<u32>> {
    run_solutions(ctx, tau, l, false)
}

/// Exponents of the field elements counted by [`brute_count_one_start`].
pub fn one_start_solutions(ctx: &FieldContext, tau: usize, l: u32) -> Result<Vec<u32>> {
    run_solutions(ctx, tau, l, true)
}

/// `N^(τ)(0,0;l) + N^(τ)(0,1;l)` by enumerating the nonzero field elements.
pub fn brute_count_zero_start(ctx: &FieldContext, tau: usize, l: u32) -> Result<u64> {
    Ok(zero_start_solutions(ctx, tau, l)?.len() as u64)
}

/// `N^(τ)(1,0;l) + N^(τ)(1,1;l)` by enumerating the nonzero field elements.
pub fn brute_count_one_start(ctx: &FieldContext, tau: usize, l: u32) -> Result<u64> {
    Ok(one_start_solutions(ctx, tau, l)?.len() as u64)
}

/// `Σ_l l·N^(τ)(l)`: `2^(m-2) + 2^(m-e-1) - 1` if `b_0 = 0`, else
/// `2^(m-2) - 2^(m-e-1)`. Involves `2^(m-e-1)` with `e ≤ m-1`, so it is
/// always an integer.
pub fn weighted_sum(ctx: &FieldContext, tau: usize) -> Result<i64> {
    let profile = predict_acorr(ctx, tau)?;
    Ok(weighted_sum_formula(ctx.m(), profile.e, profile.b0))
}

pub fn weighted_sum_formula(m: u32, e: u32, b0: bool) -> i64 {
    let quarter = 1i64 << (m - 2);
    let tail = 1i64 << (m - e - 1);
    if b0 {
        quarter - tail
    } else {
        quarter + tail - 1
    }
}

/// `g(τ) = 2^(m-2) + Σ_l l·N^(τ)(l)`.
pub fn predicted_g(ctx: &FieldContext, tau: usize) -> Result<i64> {
    Ok((1i64 << (ctx.m() - 2)) + weighted_sum(ctx, tau)?)
}
