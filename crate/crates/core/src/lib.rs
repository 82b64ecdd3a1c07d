//! Exact poly-Bernoulli numbers `B(n, k) = B_n^(-k)` with negative upper index.
//!
//! Seven closed forms are provided in [`polybernoulli`] and checked against
//! brute-force enumeration of Callan permutations, valid words and lonesum
//! matrices in [`oracles`]. All arithmetic is exact ([`ExactInt`]).
//!
//! ```
//! use polybernoulli_core::{pb_basic, pb_thm8, Tables};
//!
//! let t = Tables::shared();
//! assert_eq!(pb_basic(t, 3, 3).to_string(), "230");
//! assert_eq!(pb_thm8(t, 3, 3).unwrap(), pb_basic(t, 3, 3));
//! ```

pub mod check;
pub mod error;
pub mod exact_core;
pub mod oracles;
pub mod polybernoulli;
pub mod render;

pub use error::{Error, Result};
pub use exact_core::{ExactInt, MemoTable, Tables};
pub use polybernoulli::{
    evaluate, pb_basic, pb_inclusion_exclusion, pb_thm4, pb_thm5, pb_thm6, pb_thm7, pb_thm8, pb_value, Evaluation,
    FormulaId, PolyBernoulliQuery,
};
