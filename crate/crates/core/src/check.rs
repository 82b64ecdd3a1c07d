//! Verification suites behind `polybernoulli check`.
//!
//! `identities` exercises the closed forms against each other and the
//! Eulerian/Stirling infrastructure; `oracles` compares them with brute-force
//! enumeration. Both run against a caller-supplied [`Tables`], so a table with
//! a seeded wrong cell shows up as named failures.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exact_core::{binomial_direct, eulerian_direct, polylog_numerator_series, stirling2_direct, ExactInt, Tables};
use crate::oracles::{
    count_callan_bruteforce, count_valid_words_bruteforce, descent_set, is_callan, is_valid_word, list_callan,
    lonesum_count_bruteforce, merge, permutations, restrict, w_count_ie, w_count_partition, word_of, Color,
};
use crate::polybernoulli::{
    evaluate, pb_basic, thm5_inner, thm6_inner, thm7_inner, thm8_inner, FormulaId,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.case, self.expected, self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    fn new(suite: &str) -> Self {
        CheckReport { suite: suite.to_string(), cases_run: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn same(&mut self, case: impl FnOnce() -> String, expected: &ExactInt, actual: &ExactInt) {
        self.cases_run += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// A refused enumeration is a failure, never a silent skip.
    fn eq_result(&mut self, case: impl FnOnce() -> String, expected: &ExactInt, actual: Result<ExactInt>) {
        match actual {
            Ok(a) => self.same(case, expected, &a),
            Err(e) => {
                self.cases_run += 1;
                self.failures.push(Failure {
                    case: case(),
                    expected: expected.to_string(),
                    actual: format!("refused ({e})"),
                });
            }
        }
    }

    fn holds(&mut self, case: impl FnOnce() -> String, ok: bool, expected: &str, actual: impl FnOnce() -> String) {
        self.cases_run += 1;
        if !ok {
            self.failures.push(Failure { case: case(), expected: expected.to_string(), actual: actual() });
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} cases, {} failures",
            self.suite,
            self.cases_run,
            self.failures.len()
        )?;
        for failure in &self.failures {
            writeln!(f, "FAIL {failure}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Oracles,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "identities" => Ok(Suite::Identities),
            "oracles" => Ok(Suite::Oracles),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (expected identities, oracles or all)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckBounds {
    /// Largest `n` and `k` for the cross-formula grid.
    pub max: usize,
    /// Largest `n + k` for the Callan brute force.
    pub max_sum: usize,
}

impl Default for CheckBounds {
    fn default() -> Self {
        CheckBounds { max: 40, max_sum: 9 }
    }
}

pub fn run(t: &Tables, suite: Suite, bounds: CheckBounds) -> Vec<CheckReport> {
    match suite {
        Suite::Identities => vec![identities(t, bounds.max)],
        Suite::Oracles => vec![oracles(t, bounds.max_sum)],
        Suite::All => vec![identities(t, bounds.max), oracles(t, bounds.max_sum)],
    }
}

fn eulerian_infrastructure(t: &Tables, r: &mut CheckReport) {
    for k in 1..=9usize {
        let sum: ExactInt = (1..=k as i64).map(|j| t.eulerian(k, j)).sum();
        r.same(|| format!("eulerian_row_sum(k={k})"), &t.factorial(k), &sum);
        for j in 1..=k {
            r.same(
                || format!("eulerian_symmetry(k={k},j={j})"),
                &t.eulerian(k, (k + 1 - j) as i64),
                &t.eulerian(k, j as i64),
            );
        }
    }
    for k in 0..=12usize {
        for rr in 0..=k {
            r.same(
                || format!("ordered_partitions(k={k},r={rr})"),
                &t.ordered_partition_count(k, rr),
                &t.ordered_partition_count_by_runs(k, rr),
            );
        }
        for j in 1..=k {
            r.same(
                || format!("eulerian_inversion(k={k},j={j})"),
                &t.eulerian(k, j as i64),
                &t.eulerian_from_stirling(k, j),
            );
        }
    }
    for k in 0..=8usize {
        let series = polylog_numerator_series(k, k + 2);
        for j in 0..=k {
            r.same(|| format!("polylog_series(k={k},degree={j})"), &t.eulerian(k, j as i64), &series[j]);
        }
        r.same(|| format!("polylog_series(k={k},degree={})", k + 1), &ExactInt::zero(), &series[k + 1]);
    }
    for a in 0..=20usize {
        for b in 0..=a {
            r.same(|| format!("memo_stirling2(n={a},m={b})"), &stirling2_direct(a, b), &t.stirling2(a, b));
            r.same(|| format!("memo_eulerian(k={a},j={b})"), &eulerian_direct(a, b as i64), &t.eulerian(a, b as i64));
            r.same(|| format!("memo_binomial(n={a},r={b})"), &binomial_direct(a, b as i64), &t.binomial(a, b as i64));
        }
    }
}

/// `(n, k, basic value, other routes)`.
type CellResult = (usize, usize, ExactInt, Vec<(FormulaId, Result<ExactInt>)>);

pub fn identities(t: &Tables, max: usize) -> CheckReport {
    let mut r = CheckReport::new("identities");
    eulerian_infrastructure(t, &mut r);

    let cells: Vec<(usize, usize)> = (0..=max).flat_map(|n| (0..=max).map(move |k| (n, k))).collect();
    let results: Vec<CellResult> = cells
        .par_iter()
        .map(|&(n, k)| {
            let basic = pb_basic(t, n, k);
            let others = if n >= 1 && k >= 1 {
                FormulaId::ALL[1..].iter().map(|&f| (f, evaluate(t, f, n, k))).collect()
            } else {
                vec![(FormulaId::InclusionExclusion, evaluate(t, FormulaId::InclusionExclusion, n, k))]
            };
            (n, k, basic, others)
        })
        .collect();
    let by_cell: HashMap<(usize, usize), &ExactInt> =
        results.iter().map(|(n, k, b, _)| ((*n, *k), b)).collect();

    for (n, k, basic, others) in &results {
        let (n, k) = (*n, *k);
        for (f, value) in others {
            r.eq_result(|| format!("agreement({f},n={n},k={k})"), basic, value.clone());
        }
        r.same(|| format!("symmetry(n={n},k={k})"), by_cell[&(k, n)], basic);
        r.holds(|| format!("non_negative(n={n},k={k})"), !basic.is_negative(), ">= 0", || basic.to_string());
        if n == 1 {
            r.same(|| format!("row_one(k={k})"), &ExactInt::from(2u32).pow(k as u32), basic);
        }
        if k == 0 {
            r.same(|| format!("column_zero(n={n})"), &ExactInt::one(), basic);
        }
    }

    for n in 1..=6usize.min(max.max(1)) {
        for k in 1..=6usize {
            for j in 1..=k {
                r.same(
                    || format!("inner_w(j-1)(n={n},k={k},j={j})"),
                    &thm6_inner(t, n, k, j),
                    &thm5_inner(t, n, k, j),
                );
                r.same(
                    || format!("inner_w(k-j)(n={n},k={k},j={j})"),
                    &thm8_inner(t, n, k, j),
                    &thm7_inner(t, n, k, j),
                );
            }
        }
    }
    r
}

pub fn oracles(t: &Tables, max_sum: usize) -> CheckReport {
    let mut r = CheckReport::new("oracles");

    for k in 0..=7usize {
        let mut by_runs = vec![0u64; k + 2];
        for p in permutations(k) {
            by_runs[descent_set(&p).runs] += 1;
        }
        for (j, &count) in by_runs.iter().enumerate() {
            r.same(|| format!("eulerian_bruteforce(k={k},j={j})"), &ExactInt::from(count), &t.eulerian(k, j as i64));
        }
    }

    let cells: Vec<(usize, usize)> = (0..=max_sum)
        .flat_map(|s| (0..=s).map(move |n| (n, s - n)))
        .collect();
    let callan: Vec<_> = cells
        .par_iter()
        .map(|&(n, k)| (n, k, count_callan_bruteforce(n, k)))
        .collect();
    for (n, k, count) in callan {
        r.eq_result(|| format!("callan(n={n},k={k})"), &pb_basic(t, n, k), count);
    }

    for n in 0..=16usize {
        for k in 0..=16usize {
            if n * k <= 16 {
                r.eq_result(|| format!("lonesum(n={n},k={k})"), &pb_basic(t, n, k), lonesum_count_bruteforce(n, k));
            }
        }
    }

    for k in 0..=4usize {
        for n in 0..=4usize {
            let mut by_descents: HashMap<usize, ExactInt> = HashMap::new();
            for p in permutations(k) {
                let d = descent_set(&p).descents.len();
                let brute = count_valid_words_bruteforce(&p, n);
                if k >= 1 {
                    r.eq_result(|| format!("w_ie(p={p:?},n={n})"), &w_count_ie(t, d, n, k), brute.clone());
                    r.eq_result(|| format!("w_partition(p={p:?},n={n})"), &w_count_partition(t, d, n, k), brute.clone());
                }
                if let Ok(b) = brute {
                    match by_descents.get(&d) {
                        Some(prev) => r.same(|| format!("corollary(p={p:?},n={n},d={d})"), prev, &b),
                        None => {
                            by_descents.insert(d, b);
                        }
                    }
                }
            }
        }
    }

    for n in 0..=5usize {
        for k in 1..=5usize {
            let recount: ExactInt = permutations(k)
                .iter()
                .map(|p| w_count_ie(t, descent_set(p).descents.len(), n, k))
                .sum();
            r.same(|| format!("recount(n={n},k={k})"), &pb_basic(t, n, k), &recount);
        }
    }

    for n in 0..=3usize {
        for k in 0..=3usize {
            let all = match list_callan(n, k) {
                Ok(all) => all,
                Err(e) => {
                    r.holds(|| format!("bijection(n={n},k={k})"), false, "enumeration", || e.to_string());
                    continue;
                }
            };
            let mut images = std::collections::HashSet::new();
            for p in &all {
                let (_, right) = restrict(p);
                let w = word_of(p);
                r.holds(|| format!("valid_image({p})"), is_valid_word(&w, &right), "valid word", || w.to_string());
                let back = merge(&right, &w);
                r.holds(
                    || format!("merge_inverse({p})"),
                    back.as_ref().is_ok_and(|q| q == p && is_callan(q)),
                    &p.to_string(),
                    || format!("{back:?}"),
                );
                images.insert((right, w));

                let blocks = p.with_sentinels().blocks();
                let alternating = blocks.windows(2).all(|b| b[0].0 != b[1].0)
                    && blocks.first().map(|b| b.0) == Some(Color::Left)
                    && blocks.last().map(|b| b.0) == Some(Color::Right);
                r.holds(|| format!("block_alternation({p})"), alternating, "L..R alternating", || format!("{blocks:?}"));
            }
            r.holds(
                || format!("injective(n={n},k={k})"),
                images.len() == all.len(),
                &all.len().to_string(),
                || images.len().to_string(),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_tables_pass_small_runs() {
        let t = Tables::new();
        let reports = run(&t, Suite::All, CheckBounds { max: 8, max_sum: 7 });
        for rep in &reports {
            assert!(rep.passed(), "{rep}");
            assert!(rep.cases_run > 0);
        }
    }

    #[test]
    fn corrupted_eulerian_cell_is_named() {
        let t = Tables::new();
        assert!(t.eulerian_table().seed(4, 2, ExactInt::from(12u32)));
        let rep = identities(&t, 6);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.case == "eulerian_row_sum(k=4)"));
        assert!(rep.failures.iter().any(|f| f.case == "eulerian_inversion(k=4,j=2)"));
    }

    #[test]
    fn refusals_are_failures() {
        let rep = oracles(&Tables::new(), 11);
        assert!(rep.failures.iter().any(|f| f.case == "callan(n=0,k=11)" && f.actual.starts_with("refused")));
    }
}
