//! Exact integer primitives and the memoized triangles every formula reads:
//! factorials, binomial coefficients, Stirling numbers of the second kind and
//! Eulerian numbers.
//!
//! Eulerian numbers use the ascending-runs convention throughout:
//! `eulerian(k, j)` counts permutations of `[k]` with `j` ascending runs,
//! i.e. `j - 1` descents. So `eulerian(k, 0) = 0` for `k >= 1` and
//! `eulerian(0, 0) = 1`.

mod int;
mod memo;

use std::sync::OnceLock;

pub use int::ExactInt;
pub use memo::MemoTable;

/// The shared memo tables. Cheap to read from many threads at once.
#[derive(Debug)]
pub struct Tables {
    factorial: MemoTable,
    binomial: MemoTable,
    stirling2: MemoTable,
    eulerian: MemoTable,
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}

impl Tables {
    pub fn new() -> Self {
        Tables {
            factorial: MemoTable::new("factorial", |n, prev| {
                if n == 0 {
                    vec![ExactInt::one()]
                } else {
                    vec![prev(n - 1, 0) * ExactInt::from(n)]
                }
            }),
            binomial: MemoTable::new("binomial", |n, prev| {
                (0..=n)
                    .map(|r| {
                        if r == 0 || r == n {
                            ExactInt::one()
                        } else {
                            prev(n - 1, r - 1) + prev(n - 1, r)
                        }
                    })
                    .collect()
            }),
            stirling2: MemoTable::new("stirling2", |n, prev| {
                if n == 0 {
                    return vec![ExactInt::one()];
                }
                (0..=n)
                    .map(|m| match m {
                        0 => ExactInt::zero(),
                        _ => ExactInt::from(m) * prev(n - 1, m) + prev(n - 1, m - 1),
                    })
                    .collect()
            }),
            eulerian: MemoTable::new("eulerian", |k, _| {
                (0..=k as i64).map(|j| eulerian_direct(k, j)).collect()
            }),
        }
    }

    /// Process-wide tables shared by the free functions in this module.
    pub fn shared() -> &'static Tables {
        static SHARED: OnceLock<Tables> = OnceLock::new();
        SHARED.get_or_init(Tables::new)
    }

    /// Raw access to the Eulerian triangle, e.g. to seed a corrupted cell.
    pub fn eulerian_table(&self) -> &MemoTable {
        &self.eulerian
    }

    pub fn stirling2_table(&self) -> &MemoTable {
        &self.stirling2
    }

    pub fn factorial(&self, n: usize) -> ExactInt {
        self.factorial.get(n, 0)
    }

    /// `C(n, r)`, zero when `r < 0` or `r > n`.
    pub fn binomial(&self, n: usize, r: i64) -> ExactInt {
        if r < 0 || r as usize > n {
            return ExactInt::zero();
        }
        self.binomial.get(n, r as usize)
    }

    /// Binomial with a signed top index; zero whenever `n < 0`.
    pub(crate) fn binomial_signed(&self, n: i64, r: i64) -> ExactInt {
        if n < 0 {
            return ExactInt::zero();
        }
        self.binomial(n as usize, r)
    }

    pub fn stirling2(&self, n: usize, m: usize) -> ExactInt {
        if m > n {
            return ExactInt::zero();
        }
        self.stirling2.get(n, m)
    }

    pub fn eulerian(&self, k: usize, j: i64) -> ExactInt {
        if j < 0 || j as usize > k {
            return ExactInt::zero();
        }
        self.eulerian.get(k, j as usize)
    }

    /// Number of ordered partitions of a `k`-set into `r` blocks, `r! S(k, r)`.
    pub fn ordered_partition_count(&self, k: usize, r: usize) -> ExactInt {
        if r > k {
            return ExactInt::zero();
        }
        self.factorial(r) * self.stirling2(k, r)
    }

    /// `r! S(n, r)` with a signed block count; zero for `r < 0`.
    pub(crate) fn surjections(&self, n: usize, r: i64) -> ExactInt {
        if r < 0 {
            return ExactInt::zero();
        }
        self.ordered_partition_count(n, r as usize)
    }

    /// Right-hand side of the ordered-partition identity,
    /// `sum_j <k, j> C(k - j, r - j)`.
    pub fn ordered_partition_count_by_runs(&self, k: usize, r: usize) -> ExactInt {
        (0..=r.min(k))
            .map(|j| self.eulerian(k, j as i64) * self.binomial(k - j, (r - j) as i64))
            .sum()
    }

    /// Eulerian number recovered from ordered partitions:
    /// `sum_{r=1}^{j} (-1)^(j-r) r! S(k, r) C(k - r, j - r)`.
    pub fn eulerian_from_stirling(&self, k: usize, j: usize) -> ExactInt {
        let mut acc = ExactInt::zero();
        for r in 1..=j.min(k) {
            let term = self.ordered_partition_count(k, r) * self.binomial(k - r, (j - r) as i64);
            if (j - r).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

pub fn factorial(n: usize) -> ExactInt {
    Tables::shared().factorial(n)
}

pub fn binomial(n: usize, r: i64) -> ExactInt {
    Tables::shared().binomial(n, r)
}

pub fn stirling2(n: usize, m: usize) -> ExactInt {
    Tables::shared().stirling2(n, m)
}

pub fn eulerian(k: usize, j: i64) -> ExactInt {
    Tables::shared().eulerian(k, j)
}

pub fn ordered_partition_count(k: usize, r: usize) -> ExactInt {
    Tables::shared().ordered_partition_count(k, r)
}

pub fn eulerian_from_stirling(k: usize, j: usize) -> ExactInt {
    Tables::shared().eulerian_from_stirling(k, j)
}

/// From-scratch factorial, no table.
pub fn factorial_direct(n: usize) -> ExactInt {
    (1..=n).map(ExactInt::from).product()
}

/// From-scratch binomial by the multiplicative formula.
pub fn binomial_direct(n: usize, r: i64) -> ExactInt {
    if r < 0 || r as usize > n {
        return ExactInt::zero();
    }
    let r = (r as usize).min(n - r as usize);
    let mut num = ExactInt::one();
    let mut den = ExactInt::one();
    for i in 0..r {
        num *= ExactInt::from(n - i);
        den *= ExactInt::from(i + 1);
    }
    ExactInt::from(num.into_bigint() / den.into_bigint())
}

/// From-scratch Stirling number of the second kind by the same recurrence the
/// memo table uses, one row vector at a time.
pub fn stirling2_direct(n: usize, m: usize) -> ExactInt {
    if m > n {
        return ExactInt::zero();
    }
    let mut row = vec![ExactInt::one()];
    for i in 1..=n {
        let mut next = vec![ExactInt::zero(); i + 1];
        for j in 1..=i {
            let stay = if j < i { ExactInt::from(j) * &row[j] } else { ExactInt::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row[m].clone()
}

/// Explicit alternating sum `sum_{i=0}^{j} (-1)^i C(k+1, i) (j - i)^k`,
/// with `0^0 = 1`. Zero for `j < 0`.
pub fn eulerian_direct(k: usize, j: i64) -> ExactInt {
    if j < 0 {
        return ExactInt::zero();
    }
    let mut acc = ExactInt::zero();
    for i in 0..=j {
        let term = binomial_direct(k + 1, i) * ExactInt::from(j - i).pow(k as u32);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Coefficients of `(1 - x)^(k+1) * sum_{i=0}^{degree} i^k x^i`, truncated to
/// degrees `0..=degree`.
///
/// Up to degree `k` these are the Eulerian numbers `<k, j>` and degree `k + 1`
/// vanishes; beyond that the truncation of the power sum leaks in.
pub fn polylog_numerator_series(k: usize, degree: usize) -> Vec<ExactInt> {
    let powers: Vec<ExactInt> = (0..=degree).map(|i| ExactInt::from(i).pow(k as u32)).collect();
    let factor: Vec<ExactInt> = (0..=k + 1)
        .map(|i| {
            let c = binomial_direct(k + 1, i as i64);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    (0..=degree)
        .map(|d| {
            (0..=d.min(k + 1))
                .map(|i| &factor[i] * &powers[d - i])
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> ExactInt {
        ExactInt::from(v)
    }

    /// Every set partition of `{0..n}` as a restricted growth string.
    fn set_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            for b in 0..=max + 1 {
                cur.push(b);
                go(i + 1, n, cur, max.max(b), out);
                cur.pop();
            }
        }
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut cur = vec![0];
        go(1, n, &mut cur, 0, &mut out);
        out
    }

    fn blocks_of(rgs: &[usize]) -> usize {
        rgs.iter().max().map_or(0, |m| m + 1)
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), n(1));
        assert_eq!(factorial(1), n(1));
        let oracle: u64 = (1..=5).product();
        assert_eq!(factorial(5), n(oracle));
        assert_eq!(factorial(5), n(120));
        for i in 0..30 {
            assert_eq!(factorial(i), factorial_direct(i));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 0), n(1));
        assert_eq!(binomial(5, 2), n(10));
        assert_eq!(binomial(3, 5), n(0));
        assert_eq!(binomial(3, -1), n(0));
        for a in 0..25 {
            for b in -2..28 {
                assert_eq!(binomial(a, b), binomial_direct(a, b), "C({a},{b})");
            }
        }
    }

    #[test]
    fn stirling_examples_match_partition_enumeration() {
        assert_eq!(stirling2(0, 0), n(1));
        assert_eq!(stirling2(3, 2), n(3));
        assert_eq!(stirling2(4, 2), n(7));
        assert_eq!(stirling2(3, 0), n(0));
        assert_eq!(stirling2(0, 2), n(0));
        for size in 0..=7 {
            let parts = set_partitions(size);
            for m in 0..=size + 1 {
                let brute = parts.iter().filter(|p| blocks_of(p) == m).count() as u64;
                assert_eq!(stirling2(size, m), n(brute), "S({size},{m})");
            }
        }
    }

    #[test]
    fn eulerian_examples_match_descent_counts() {
        assert_eq!(eulerian(1, 1), n(1));
        assert_eq!(eulerian(3, 2), n(4));
        assert_eq!(eulerian(2, 0), n(0));
        assert_eq!(eulerian(0, 0), n(1));
        assert_eq!(eulerian(3, -1), n(0));
        assert_eq!(eulerian(3, 4), n(0));
        for k in 0..=7 {
            let perms = permutations(k);
            for j in 0..=k + 1 {
                let brute = perms
                    .iter()
                    .filter(|p| {
                        let runs = if p.is_empty() {
                            0
                        } else {
                            1 + p.windows(2).filter(|w| w[0] > w[1]).count()
                        };
                        runs == j
                    })
                    .count() as u64;
                // the empty permutation counts as having zero runs
                assert_eq!(eulerian(k, j as i64), n(brute), "<{k},{j}>");
            }
        }
    }

    #[test]
    fn ordered_partition_examples() {
        assert_eq!(ordered_partition_count(3, 2), n(6));
        assert_eq!(ordered_partition_count(3, 3), n(6));
        assert_eq!(ordered_partition_count(2, 0), n(0));
        let t = Tables::shared();
        for k in 0..=12 {
            for r in 0..=k {
                assert_eq!(
                    t.ordered_partition_count(k, r),
                    t.ordered_partition_count_by_runs(k, r),
                    "k={k} r={r}"
                );
            }
        }
    }

    #[test]
    fn ordered_partitions_agree_with_enumeration() {
        for size in 0..=6 {
            for r in 0..=size {
                let unordered = set_partitions(size)
                    .iter()
                    .filter(|p| blocks_of(p) == r)
                    .count() as u64;
                let orderings: u64 = (1..=r as u64).product();
                assert_eq!(ordered_partition_count(size, r), n(unordered * orderings));
            }
        }
    }

    #[test]
    fn eulerian_inversion_examples() {
        assert_eq!(eulerian_from_stirling(3, 2), n(4));
        assert_eq!(eulerian_from_stirling(1, 1), n(1));
        assert_eq!(eulerian_from_stirling(4, 1), n(1));
        assert_eq!(eulerian_from_stirling(4, 1), eulerian(4, 1));
    }

    #[test]
    fn eulerian_rows_sum_to_factorial_and_are_symmetric() {
        for k in 1..=9usize {
            let row: ExactInt = (1..=k as i64).map(|j| eulerian(k, j)).sum();
            assert_eq!(row, factorial(k));
            for j in 1..=k {
                assert_eq!(eulerian(k, j as i64), eulerian(k, (k + 1 - j) as i64));
            }
        }
    }

    #[test]
    fn polylog_series_has_eulerian_coefficients() {
        for k in 0..=8 {
            let series = polylog_numerator_series(k, k + 2);
            for j in 0..=k {
                assert_eq!(series[j], eulerian(k, j as i64), "k={k} degree {j}");
            }
            assert!(series[k + 1].is_zero(), "k={k}");
        }
    }

    #[test]
    fn memoized_and_direct_agree() {
        let t = Tables::new();
        for a in 0..=30 {
            for b in 0..=a + 1 {
                assert_eq!(t.stirling2(a, b), stirling2_direct(a, b));
                assert_eq!(t.eulerian(a, b as i64), eulerian_direct(a, b as i64), "<{a},{b}>");
            }
        }
    }
}
