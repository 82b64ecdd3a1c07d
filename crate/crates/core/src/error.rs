use thiserror::Error;

use crate::polybernoulli::FormulaId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration would exceed its configured size limit. Distinct from a
    /// count of zero.
    #[error("{what} = {requested} exceeds the enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: u128,
        bound: u128,
    },

    #[error("formula {formula} is only stated for n > 0 and k > 0 (got n = {n}, k = {k})")]
    OutsideDomain { formula: FormulaId, n: usize, k: usize },

    #[error("word is not valid for the right permutation: descent value {missing} does not occur")]
    InvalidWord { missing: usize },

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("not a canonical decimal integer: {0:?}")]
    ParseInt(String),

    #[error("unknown formula {0:?} (expected one of basic, ie, thm4, thm5, thm6, thm7, thm8)")]
    UnknownFormula(String),
}
