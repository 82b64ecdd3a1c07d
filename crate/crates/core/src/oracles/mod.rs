//! Brute-force ground truth: Callan permutations, valid words and lonesum
//! matrices, plus the bijection between Callan permutations and
//! (right permutation, valid word) pairs.
//!
//! Everything here enumerates; none of it goes through a closed form except
//! [`w_count_ie`] and [`w_count_partition`], which are the closed counts the
//! brute-force word enumeration is checked against.

mod callan;
mod lonesum;
mod perm;
mod words;

pub use callan::{
    count_callan_bruteforce, count_callan_bruteforce_bounded, list_callan, list_callan_bounded,
    DEFAULT_CALLAN_BOUND,
};
pub use lonesum::{is_lonesum, lonesum_count_bruteforce, lonesum_count_bruteforce_bounded, DEFAULT_LONESUM_CELLS};
pub use perm::{check_permutation, descent_set, is_callan, restrict, BicoloredPermutation, Color, Colored, DescentData};
pub use words::{
    count_valid_words_bruteforce, count_valid_words_bruteforce_bounded, is_valid_word, merge, w_count_ie,
    w_count_partition, word_of, Word, DEFAULT_WORD_BOUND,
};

/// All permutations of `1..=k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (1..=k as u32).collect();
    let mut out = vec![p.clone()];
    while let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) {
        let j = p.iter().rposition(|&x| x > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p.clone());
    }
    out
}
