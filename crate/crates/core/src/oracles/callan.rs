use crate::error::{Error, Result};
use crate::exact_core::ExactInt;

use super::perm::{BicoloredPermutation, Colored};

pub const DEFAULT_CALLAN_BOUND: usize = 10;

/// Next permutation in lexicographic order; false once `v` is the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// In the encoding `0..n` = left values `1..=n`, `n..n+k` = right values
/// `1..=k`, two neighbours of the same color must increase.
fn encoded_is_callan(code: &[usize], n: usize) -> bool {
    code.windows(2)
        .all(|w| (w[0] < n) != (w[1] < n) || w[0] < w[1])
}

fn check_bound(n: usize, k: usize, bound: usize) -> Result<()> {
    if n + k > bound {
        return Err(Error::BoundExceeded {
            what: "n + k",
            requested: (n + k) as u128,
            bound: bound as u128,
        });
    }
    Ok(())
}

/// Visits every permutation of the `n + k` colored values in lexicographic
/// order of the encoding and calls `f` on the Callan ones.
fn for_each_callan(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut code: Vec<usize> = (0..n + k).collect();
    loop {
        if encoded_is_callan(&code, n) {
            f(&code);
        }
        if !next_permutation(&mut code) {
            break;
        }
    }
}

/// Number of Callan permutations with `n` left and `k` right values, by
/// checking all `(n + k)!` arrangements.
pub fn count_callan_bruteforce(n: usize, k: usize) -> Result<ExactInt> {
    count_callan_bruteforce_bounded(n, k, DEFAULT_CALLAN_BOUND)
}

pub fn count_callan_bruteforce_bounded(n: usize, k: usize, bound: usize) -> Result<ExactInt> {
    check_bound(n, k, bound)?;
    let mut count: u64 = 0;
    for_each_callan(n, k, |_| count += 1);
    Ok(ExactInt::from(count))
}

/// All Callan permutations, ordered lexicographically by the encoding
/// `L i -> i`, `R j -> n + j`.
pub fn list_callan(n: usize, k: usize) -> Result<Vec<BicoloredPermutation>> {
    list_callan_bounded(n, k, DEFAULT_CALLAN_BOUND)
}

pub fn list_callan_bounded(n: usize, k: usize, bound: usize) -> Result<Vec<BicoloredPermutation>> {
    check_bound(n, k, bound)?;
    let mut out = Vec::new();
    for_each_callan(n, k, |code| {
        let entries = code
            .iter()
            .map(|&c| {
                if c < n {
                    Colored::left(c as u32 + 1)
                } else {
                    Colored::right((c - n) as u32 + 1)
                }
            })
            .collect();
        out.push(BicoloredPermutation::from_parts_unchecked(entries, n, k));
    });
    Ok(out)
}
