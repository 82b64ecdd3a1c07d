//! Seven exact routes to `B(n, k) = B_n^(-k)`.
//!
//! [`pb_basic`] and [`pb_inclusion_exclusion`] hold for every `n, k >= 0`.
//! The five Eulerian-number routes are only claimed for `n, k > 0` and return
//! [`Error::OutsideDomain`] on the border; [`pb_value`] answers those cells
//! with the basic formula and marks the fallback.
//!
//! The inner sums of the Eulerian routes count valid words for a right
//! permutation with a fixed number of descents, so they are public here and
//! reused by the word-count oracles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_core::{ExactInt, Tables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaId {
    Basic,
    #[serde(rename = "ie")]
    InclusionExclusion,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
}

impl FormulaId {
    pub const ALL: [FormulaId; 7] = [
        FormulaId::Basic,
        FormulaId::InclusionExclusion,
        FormulaId::Thm4,
        FormulaId::Thm5,
        FormulaId::Thm6,
        FormulaId::Thm7,
        FormulaId::Thm8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Basic => "basic",
            FormulaId::InclusionExclusion => "ie",
            FormulaId::Thm4 => "thm4",
            FormulaId::Thm5 => "thm5",
            FormulaId::Thm6 => "thm6",
            FormulaId::Thm7 => "thm7",
            FormulaId::Thm8 => "thm8",
        }
    }

    /// Whether the route is only stated for `n > 0` and `k > 0`.
    pub fn needs_positive_indices(self) -> bool {
        !matches!(self, FormulaId::Basic | FormulaId::InclusionExclusion)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyBernoulliQuery {
    pub n: usize,
    pub k: usize,
}

impl PolyBernoulliQuery {
    pub fn new(n: usize, k: usize) -> Self {
        PolyBernoulliQuery { n, k }
    }
}

/// Result of [`pb_value`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: ExactInt,
    pub requested: FormulaId,
    pub answered_by: FormulaId,
}

impl Evaluation {
    pub fn fallback(&self) -> bool {
        self.requested != self.answered_by
    }
}

fn signed(term: ExactInt, negative: bool) -> ExactInt {
    if negative {
        -term
    } else {
        term
    }
}

fn power(base: i64, exp: usize) -> ExactInt {
    ExactInt::from(base).pow(exp as u32)
}

fn check_domain(formula: FormulaId, n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::OutsideDomain { formula, n, k });
    }
    Ok(())
}

/// `sum_{m=0}^{min(n,k)} (m!)^2 S(n+1, m+1) S(k+1, m+1)`.
pub fn pb_basic(t: &Tables, n: usize, k: usize) -> ExactInt {
    (0..=n.min(k))
        .map(|m| {
            let f = t.factorial(m);
            &f * &f * t.stirling2(n + 1, m + 1) * t.stirling2(k + 1, m + 1)
        })
        .sum()
}

/// `sum_{m=0}^{n} (-1)^(n+m) m! S(n, m) (m+1)^k`.
pub fn pb_inclusion_exclusion(t: &Tables, n: usize, k: usize) -> ExactInt {
    (0..=n)
        .map(|m| {
            let term = t.ordered_partition_count(n, m) * power(m as i64 + 1, k);
            signed(term, (n + m) % 2 == 1)
        })
        .sum()
}

/// `sum_{i=0}^{len} <len, i> C(len + 1 - i, m + 1 - i)`: the number of ways to
/// pick `m` ordinary block endings on one side, summed over that side's
/// restricted permutations.
fn block_endings(t: &Tables, len: usize, m: usize) -> ExactInt {
    (0..=len)
        .map(|i| {
            t.eulerian(len, i as i64)
                * t.binomial(len + 1 - i, m as i64 + 1 - i as i64)
        })
        .sum()
}

/// The triple sum over `(m, i, j)` of
/// `<n, i> <k, j> C(n+1-i, m+1-i) C(k+1-j, m+1-j)`.
///
/// The `i` and `j` sums are independent for fixed `m`, so they are evaluated
/// separately and multiplied.
pub fn pb_thm4(t: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    check_domain(FormulaId::Thm4, n, k)?;
    Ok((0..=n.min(k))
        .map(|m| block_endings(t, n, m) * block_endings(t, k, m))
        .sum())
}

/// Inner sum of the fifth-theorem route at run count `j`:
/// `sum_{m=0}^{k+2-j} C(k+2-j, m) (m+j-1)! S(n, m+j-1)`.
pub fn thm5_inner(t: &Tables, n: usize, k: usize, j: usize) -> ExactInt {
    let top = k as i64 + 2 - j as i64;
    (0..=top.max(-1))
        .map(|m| t.binomial_signed(top, m) * t.surjections(n, m + j as i64 - 1))
        .sum()
}

/// Inner sum of the sixth-theorem route at run count `j`:
/// `sum_{m=0}^{j-1} (-1)^m C(j-1, m) (k+1-m)^n`.
pub fn thm6_inner(t: &Tables, n: usize, k: usize, j: usize) -> ExactInt {
    (0..j as i64)
        .map(|m| {
            let term = t.binomial(j - 1, m) * power(k as i64 + 1 - m, n);
            signed(term, m % 2 == 1)
        })
        .sum()
}

/// Inner sum of the seventh-theorem route at run count `j`:
/// `sum_{m=0}^{j+1} C(j+1, m) (m+k-j)! S(n, m+k-j)`.
pub fn thm7_inner(t: &Tables, n: usize, k: usize, j: usize) -> ExactInt {
    (0..=j as i64 + 1)
        .map(|m| t.binomial(j + 1, m) * t.surjections(n, m + k as i64 - j as i64))
        .sum()
}

/// Inner sum of the eighth-theorem route at run count `j`:
/// `sum_{m=0}^{k-j} (-1)^m C(k-j, m) (k+1-m)^n`.
pub fn thm8_inner(t: &Tables, n: usize, k: usize, j: usize) -> ExactInt {
    let top = k as i64 - j as i64;
    (0..=top.max(-1))
        .map(|m| {
            let term = t.binomial_signed(top, m) * power(k as i64 + 1 - m, n);
            signed(term, m % 2 == 1)
        })
        .sum()
}

fn eulerian_weighted(
    t: &Tables,
    n: usize,
    k: usize,
    inner: fn(&Tables, usize, usize, usize) -> ExactInt,
) -> ExactInt {
    (0..=k)
        .map(|j| t.eulerian(k, j as i64) * inner(t, n, k, j))
        .sum()
}

pub fn pb_thm5(t: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    check_domain(FormulaId::Thm5, n, k)?;
    Ok(eulerian_weighted(t, n, k, thm5_inner))
}

pub fn pb_thm6(t: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    check_domain(FormulaId::Thm6, n, k)?;
    Ok(eulerian_weighted(t, n, k, thm6_inner))
}

pub fn pb_thm7(t: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    check_domain(FormulaId::Thm7, n, k)?;
    Ok(eulerian_weighted(t, n, k, thm7_inner))
}

pub fn pb_thm8(t: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    check_domain(FormulaId::Thm8, n, k)?;
    Ok(eulerian_weighted(t, n, k, thm8_inner))
}

/// Evaluates one route strictly, without the border fallback.
pub fn evaluate(t: &Tables, formula: FormulaId, n: usize, k: usize) -> Result<ExactInt> {
    match formula {
        FormulaId::Basic => Ok(pb_basic(t, n, k)),
        FormulaId::InclusionExclusion => Ok(pb_inclusion_exclusion(t, n, k)),
        FormulaId::Thm4 => pb_thm4(t, n, k),
        FormulaId::Thm5 => pb_thm5(t, n, k),
        FormulaId::Thm6 => pb_thm6(t, n, k),
        FormulaId::Thm7 => pb_thm7(t, n, k),
        FormulaId::Thm8 => pb_thm8(t, n, k),
    }
}

/// Dispatches to `formula`, answering border cells of the Eulerian routes
/// with [`pb_basic`].
pub fn pb_value(t: &Tables, q: PolyBernoulliQuery, formula: FormulaId) -> Evaluation {
    match evaluate(t, formula, q.n, q.k) {
        Ok(value) => Evaluation {
            value,
            requested: formula,
            answered_by: formula,
        },
        Err(_) => Evaluation {
            value: pb_basic(t, q.n, q.k),
            requested: formula,
            answered_by: FormulaId::Basic,
        },
    }
}
