//! Arithmetic (2-adic) autocorrelation of binary m-sequences.
//!
//! For a binary sequence `a` of period `n` let `σ(a) = Σ a_λ 2^λ`. The
//! arithmetic autocorrelation at shift `τ` balances the one and zero digits
//! of `|σ(a) - σ(a^(τ))|`, signed by which of the two integers is larger.
//! For the m-sequence `s_λ = T(π^λ)` over GF(2^m) it takes only the values
//! `±(2^k - 1)`, `1 ≤ k ≤ m - 1`, each exactly `2^(m-k-1)` times.
//!
//! The crate computes it three independent ways so each can check the
//! others:
//!
//! * [`arith`]: direct big-integer subtraction and popcount,
//! * [`blocks`]: counting typed runs of equal columns in the two-row matrix,
//! * [`closedform`]: reading the answer off `(1 + π^τ)^(-1)` in the
//!   polynomial basis.
//!
//! ```
//! use arithcorr::{arith, blocks, closedform, gf2m::FieldContext, sequences};
//!
//! let ctx = FieldContext::builtin(3)?;
//! let s = sequences::m_sequence(&ctx);
//! assert_eq!(s.to_string(), "1001011");
//!
//! for tau in 1..7 {
//!     let direct = arith::arithmetic_autocorr(&s, tau)?;
//!     let via_blocks = blocks::autocorr_via_blocks(&s, &s.rotate(tau))?;
//!     let predicted = closedform::predict_acorr(&ctx, tau)?.predicted;
//!     assert_eq!(direct, via_blocks);
//!     assert_eq!(direct, predicted);
//! }
//! # Ok::<(), arithcorr::Error>(())
//! ```

pub mod arith;
pub mod blocks;
pub mod closedform;
pub mod distribution;
pub mod error;
pub mod gf2m;
pub mod sequences;

pub use distribution::DistributionTable;
pub use error::{Error, Result};

// The guide's chapters, compiled as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/correlation.md")]
    mod correlation {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/closed-form.md")]
    mod closed_form {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
