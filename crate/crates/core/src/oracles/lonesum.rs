use crate::error::{Error, Result};
use crate::exact_core::ExactInt;

pub const DEFAULT_LONESUM_CELLS: usize = 20;

/// Row bitmasks of an `rows x cols` binary matrix. Lonesum iff no two rows and
/// two columns select `[[1,0],[0,1]]` or `[[0,1],[1,0]]`.
pub fn is_lonesum(rows: &[u32], cols: usize) -> bool {
    let bit = |r: u32, c: usize| (r >> c) & 1 == 1;
    for (a, &r1) in rows.iter().enumerate() {
        for &r2 in &rows[a + 1..] {
            for c1 in 0..cols {
                for c2 in c1 + 1..cols {
                    let (p, q, s, t) = (bit(r1, c1), bit(r1, c2), bit(r2, c1), bit(r2, c2));
                    let identity = p && !q && !s && t;
                    let anti = !p && q && s && !t;
                    if identity || anti {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Number of lonesum `n x k` binary matrices, checking all `2^(nk)`.
pub fn lonesum_count_bruteforce(n: usize, k: usize) -> Result<ExactInt> {
    lonesum_count_bruteforce_bounded(n, k, DEFAULT_LONESUM_CELLS)
}

pub fn lonesum_count_bruteforce_bounded(n: usize, k: usize, max_cells: usize) -> Result<ExactInt> {
    let cells = n * k;
    if cells > max_cells || cells >= 64 {
        return Err(Error::BoundExceeded {
            what: "n * k",
            requested: cells as u128,
            bound: max_cells.min(63) as u128,
        });
    }
    let row_mask = (1u64 << k) - 1;
    let mut rows = vec![0u32; n];
    let mut count: u64 = 0;
    for m in 0..(1u64 << cells) {
        for (i, r) in rows.iter_mut().enumerate() {
            *r = ((m >> (i * k)) & row_mask) as u32;
        }
        if is_lonesum(&rows, k) {
            count += 1;
        }
    }
    Ok(ExactInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lonesum_examples() {
        assert_eq!(lonesum_count_bruteforce(2, 2).unwrap(), ExactInt::from(14u32));
        assert_eq!(lonesum_count_bruteforce(1, 3).unwrap(), ExactInt::from(8u32));
        assert_eq!(lonesum_count_bruteforce(0, 4).unwrap(), ExactInt::one());
        assert_eq!(lonesum_count_bruteforce(3, 0).unwrap(), ExactInt::one());
    }

    #[test]
    fn forbidden_patterns_are_exactly_the_two_by_two_permutations() {
        let bad: Vec<[u32; 2]> = (0..16u32)
            .map(|m| [m & 3, m >> 2])
            .filter(|rows| !is_lonesum(rows, 2))
            .collect();
        assert_eq!(bad, vec![[2, 1], [1, 2]]);
    }

    #[test]
    fn refuses_past_bound() {
        assert_eq!(
            lonesum_count_bruteforce(5, 5).unwrap_err(),
            Error::BoundExceeded { what: "n * k", requested: 25, bound: 20 }
        );
    }
}
