use std::fmt;

use crate::error::{Error, Result};
use crate::exact_core::{ExactInt, Tables};
use crate::polybernoulli::{thm5_inner, thm6_inner};

use super::perm::{check_permutation, descent_set, BicoloredPermutation, Color, Colored};

pub const DEFAULT_WORD_BOUND: u128 = 10_000_000;

/// Position code of a Callan permutation: `symbols[i - 1]` is the number of
/// right values preceding left value `i`. Every symbol is at most `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<usize>,
    k: usize,
}

impl Word {
    pub fn new(symbols: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s > k) {
            return Err(Error::MalformedWord(format!("symbol {s} exceeds k = {k}")));
        }
        Ok(Word { symbols, k })
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.k < 10 { "" } else { "," };
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Word of `p`, ignoring sentinels.
pub fn word_of(p: &BicoloredPermutation) -> Word {
    let mut symbols = vec![0; p.n()];
    let mut rights_seen = 0;
    for e in p.entries() {
        match e.color {
            Color::Right => rights_seen += 1,
            Color::Left if e.value > 0 => symbols[e.value as usize - 1] = rights_seen,
            Color::Left => {}
        }
    }
    Word { symbols, k: p.k() }
}

fn first_missing_descent(w: &Word, pi_right: &[u32]) -> Option<usize> {
    descent_set(pi_right)
        .descents
        .into_iter()
        .find(|d| !w.symbols.contains(d))
}

/// Valid iff every descent position of `pi_right` occurs in `w`.
pub fn is_valid_word(w: &Word, pi_right: &[u32]) -> bool {
    first_missing_descent(w, pi_right).is_none()
}

/// Counts the words in `{0..k}^n` valid for `pi_right` by trying all of them.
pub fn count_valid_words_bruteforce(pi_right: &[u32], n: usize) -> Result<ExactInt> {
    count_valid_words_bruteforce_bounded(pi_right, n, DEFAULT_WORD_BOUND)
}

pub fn count_valid_words_bruteforce_bounded(pi_right: &[u32], n: usize, bound: u128) -> Result<ExactInt> {
    check_permutation(pi_right)?;
    let k = pi_right.len();
    let total = (k as u128 + 1)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if total > bound {
        return Err(Error::BoundExceeded { what: "(k+1)^n", requested: total, bound });
    }
    let descents: Vec<usize> = descent_set(pi_right).descents.into_iter().collect();
    let mut symbols = vec![0usize; n];
    let mut count: u64 = 0;
    loop {
        if descents.iter().all(|d| symbols.contains(d)) {
            count += 1;
        }
        // odometer over {0..k}^n
        let mut i = 0;
        loop {
            if i == n {
                return Ok(ExactInt::from(count));
            }
            if symbols[i] < k {
                symbols[i] += 1;
                break;
            }
            symbols[i] = 0;
            i += 1;
        }
    }
}

/// Valid-word count for a right permutation with `d` descents, by
/// inclusion-exclusion over the missing descent values:
/// `sum_{m=0}^{d} (-1)^m C(d, m) (k+1-m)^n`. Meaningful for `d <= k - 1`.
pub fn w_count_ie(t: &Tables, d: usize, n: usize, k: usize) -> ExactInt {
    thm6_inner(t, n, k, d + 1)
}

/// Same count via ordered partitions of the left values refined at the ascents
/// of the right permutation.
pub fn w_count_partition(t: &Tables, d: usize, n: usize, k: usize) -> ExactInt {
    thm5_inner(t, n, k, d + 1)
}

/// Inserts the left values into `pi_right` as the word prescribes: left values
/// with symbol `s` form an increasing block right after the `s`-th right value.
pub fn merge(pi_right: &[u32], w: &Word) -> Result<BicoloredPermutation> {
    check_permutation(pi_right)?;
    let k = pi_right.len();
    if w.k != k {
        return Err(Error::MalformedWord(format!(
            "word alphabet is 0..={} but the right permutation has k = {k}",
            w.k
        )));
    }
    if let Some(missing) = first_missing_descent(w, pi_right) {
        return Err(Error::InvalidWord { missing });
    }
    let n = w.len();
    let mut slots: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for (i, &s) in w.symbols.iter().enumerate() {
        slots[s].push(i as u32 + 1);
    }
    let mut entries = Vec::with_capacity(n + k);
    for (slot, lefts) in slots.into_iter().enumerate() {
        entries.extend(lefts.into_iter().map(Colored::left));
        if slot < k {
            entries.push(Colored::right(pi_right[slot]));
        }
    }
    Ok(BicoloredPermutation::from_parts_unchecked(entries, n, k))
}
