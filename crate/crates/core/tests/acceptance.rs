//! Acceptance criteria, one line each. Runs as a plain binary so the verdict
//! lines are always visible; exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use polybernoulli_core::oracles::{
    count_callan_bruteforce, count_valid_words_bruteforce, descent_set, is_callan, is_valid_word, list_callan,
    lonesum_count_bruteforce, merge, permutations, restrict, w_count_ie, w_count_partition, word_of,
    BicoloredPermutation,
};
use polybernoulli_core::exact_core::polylog_numerator_series;
use polybernoulli_core::{evaluate, pb_basic, ExactInt, FormulaId, Tables};

/// The 6x6 reference grid for B(n, k), 0 <= n, k <= 5, as printed.
const REFERENCE_GRID: [[u64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 4, 8, 16, 32],
    [1, 4, 14, 46, 146, 454],
    [1, 8, 46, 230, 1066, 4718],
    [1, 16, 146, 1066, 6906, 41506],
    [1, 32, 454, 4718, 41506, 329462],
];

const RUNNING_EXAMPLE: &str = "L0 L2 L3 R1 R4 R5 L4 L7 R2 R8 L1 L8 R3 L5 L6 L9 R6 R7 R9";

struct Outcome {
    failures: Vec<String>,
    cases: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), cases: 0 }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_eq(&mut self, case: impl FnOnce() -> String, expected: &ExactInt, actual: &ExactInt) {
        self.expect(expected == actual, || format!("{}: expected {expected}, got {actual}", case()));
    }
}

fn v(x: u64) -> ExactInt {
    ExactInt::from(x)
}

fn table_reproduction() -> Outcome {
    let mut o = Outcome::new();
    let bin = env!("CARGO_BIN_EXE_polybernoulli");
    for f in FormulaId::ALL {
        let start = Instant::now();
        let output = Command::new(bin)
            .args(["table", "5", "5", "--formula", f.name(), "--format", "csv"])
            .output()
            .expect("run cli");
        let elapsed = start.elapsed();
        o.expect(output.status.success(), || format!("{f}: exit {:?}", output.status.code()));
        o.expect(elapsed < Duration::from_secs(1), || format!("{f}: took {elapsed:?}"));
        let text = String::from_utf8(output.stdout).unwrap();
        let rows: Vec<Vec<String>> = text
            .lines()
            .skip(1)
            .map(|l| l.split(',').skip(1).map(str::to_string).collect())
            .collect();
        o.expect(rows.len() == 6, || format!("{f}: {} rows", rows.len()));
        for (n, row) in REFERENCE_GRID.iter().enumerate() {
            for (k, &expected) in row.iter().enumerate() {
                let got = rows.get(n).and_then(|r| r.get(k)).map(String::as_str).unwrap_or("<missing>");
                o.expect(got == expected.to_string(), || format!("{f} B({n},{k}): expected {expected}, got {got}"));
            }
        }
    }
    o
}

fn cross_formula_agreement() -> Outcome {
    use rayon::prelude::*;
    let mut o = Outcome::new();
    let t = Tables::new();
    let start = Instant::now();
    let cells: Vec<(usize, usize)> = (1..=40).flat_map(|n| (1..=40).map(move |k| (n, k))).collect();
    let mismatches: Vec<String> = cells
        .par_iter()
        .flat_map_iter(|&(n, k)| {
            let basic = pb_basic(&t, n, k);
            FormulaId::ALL[1..]
                .iter()
                .filter_map(|&f| match evaluate(&t, f, n, k) {
                    Ok(x) if x == basic => None,
                    other => Some(format!("{f} B({n},{k}): expected {basic}, got {other:?}")),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let elapsed = start.elapsed();
    o.cases += cells.len() * 6;
    o.failures.extend(mismatches);
    o.expect(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"));
    o
}

fn callan_oracle() -> Outcome {
    let mut o = Outcome::new();
    let t = Tables::shared();
    o.expect_eq(|| "listed (2,2)".into(), &v(14), &count_callan_bruteforce(2, 2).unwrap());
    for s in 0..=9usize {
        for n in 0..=s {
            let k = s - n;
            let brute = count_callan_bruteforce(n, k).unwrap();
            o.expect_eq(|| format!("C({n},{k})"), &pb_basic(t, n, k), &brute);
        }
    }
    o
}

fn valid_word_identity() -> Outcome {
    let mut o = Outcome::new();
    let t = Tables::shared();
    for k in 1..=4usize {
        for n in 0..=4usize {
            for p in permutations(k) {
                let d = descent_set(&p).descents.len();
                let brute = count_valid_words_bruteforce(&p, n).unwrap();
                o.expect_eq(|| format!("ie p={p:?} n={n}"), &brute, &w_count_ie(t, d, n, k));
                o.expect_eq(|| format!("partition p={p:?} n={n}"), &brute, &w_count_partition(t, d, n, k));
            }
        }
    }
    for n in 0..=5usize {
        for k in 1..=5usize {
            let total: ExactInt = permutations(k)
                .iter()
                .map(|p| w_count_ie(t, descent_set(p).descents.len(), n, k))
                .sum();
            o.expect_eq(|| format!("sum over p, n={n} k={k}"), &pb_basic(t, n, k), &total);
        }
    }
    o
}

fn eulerian_infrastructure() -> Outcome {
    let mut o = Outcome::new();
    let t = Tables::new();
    for k in 0..=12usize {
        for r in 0..=k {
            o.expect_eq(
                || format!("ordered partitions k={k} r={r}"),
                &t.ordered_partition_count(k, r),
                &t.ordered_partition_count_by_runs(k, r),
            );
        }
        for j in 1..=k {
            o.expect_eq(|| format!("inversion k={k} j={j}"), &t.eulerian(k, j as i64), &t.eulerian_from_stirling(k, j));
        }
    }
    for k in 1..=9usize {
        let row: ExactInt = (1..=k as i64).map(|j| t.eulerian(k, j)).sum();
        o.expect_eq(|| format!("row sum k={k}"), &t.factorial(k), &row);
        for j in 1..=k {
            o.expect_eq(
                || format!("symmetry k={k} j={j}"),
                &t.eulerian(k, (k + 1 - j) as i64),
                &t.eulerian(k, j as i64),
            );
        }
    }
    for k in 0..=7usize {
        let mut by_runs = vec![0u64; k + 2];
        for p in permutations(k) {
            by_runs[descent_set(&p).runs] += 1;
        }
        for (j, &c) in by_runs.iter().enumerate() {
            o.expect_eq(|| format!("descent count k={k} j={j}"), &v(c), &t.eulerian(k, j as i64));
        }
    }
    for k in 0..=8usize {
        let series = polylog_numerator_series(k, k + 2);
        for j in 0..=k {
            o.expect_eq(|| format!("series k={k} degree {j}"), &t.eulerian(k, j as i64), &series[j]);
        }
        o.expect_eq(|| format!("series k={k} degree {}", k + 1), &ExactInt::zero(), &series[k + 1]);
    }
    o
}

fn bijection_round_trip() -> Outcome {
    let mut o = Outcome::new();
    for n in 0..=3 {
        for k in 0..=3 {
            let all = list_callan(n, k).unwrap();
            let mut images = HashSet::new();
            for p in &all {
                let (_, right) = restrict(p);
                let w = word_of(p);
                o.expect(is_valid_word(&w, &right), || format!("{p}: word {w} invalid"));
                let back = merge(&right, &w);
                o.expect(back.as_ref().is_ok_and(|q| q == p && is_callan(q)), || format!("{p}: merge gave {back:?}"));
                images.insert((right, w));
            }
            o.expect(images.len() == all.len(), || format!("n={n} k={k}: pair map not injective"));
        }
    }
    o
}

fn lonesum_oracle() -> Outcome {
    let mut o = Outcome::new();
    let t = Tables::shared();
    for n in 0..=16usize {
        for k in 0..=16usize {
            if n * k <= 16 {
                o.expect_eq(|| format!("L({n},{k})"), &pb_basic(t, n, k), &lonesum_count_bruteforce(n, k).unwrap());
            }
        }
    }
    o
}

fn worked_example() -> Outcome {
    let mut o = Outcome::new();
    let p: BicoloredPermutation = RUNNING_EXAMPLE.parse().unwrap();
    let w = word_of(&p);
    o.expect(w.to_string() == "500366356", || format!("word {w}"));
    let d = descent_set(&[3, 6, 1, 4, 8, 7, 9, 2, 5]);
    let descents: Vec<usize> = d.descents.iter().copied().collect();
    o.expect(descents == [2, 5, 7], || format!("descents {descents:?}"));
    o.expect(d.runs == 4, || format!("runs {}", d.runs));
    let (left, right) = restrict(&p);
    o.expect(right == [1, 4, 5, 2, 8, 3, 6, 7, 9], || format!("right {right:?}"));
    o.expect(left == [0, 2, 3, 4, 7, 1, 8, 5, 6, 9], || format!("left {left:?}"));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 table reproduction (every route, 6x6 reference grid)", table_reproduction),
        ("2 cross-formula agreement, 1 <= n,k <= 40", cross_formula_agreement),
        ("3 Callan brute force = basic, n+k <= 9", callan_oracle),
        ("4 valid-word counts and recount", valid_word_identity),
        ("5 Eulerian infrastructure", eulerian_infrastructure),
        ("6 merge / (restrict, word_of) round trip, n,k <= 3", bijection_round_trip),
        ("7 lonesum brute force = basic, n*k <= 16", lonesum_oracle),
        ("8 worked example word and descents", worked_example),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {name}: {} cases, {:.2?}", outcome.cases, elapsed);
        for f in outcome.failures.iter().take(20) {
            println!("       {f}");
        }
        if outcome.failures.len() > 20 {
            println!("       ... {} more", outcome.failures.len() - 20);
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", 8 - failed, 8);
    if failed > 0 {
        std::process::exit(1);
    }
}
