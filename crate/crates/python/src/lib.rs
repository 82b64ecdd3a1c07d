use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use polybernoulli_core::check::{self, CheckBounds, Suite};
use polybernoulli_core::oracles::{self, Word};
use polybernoulli_core::render::{Format, Table};
use polybernoulli_core::{exact_core, pb_value, ExactInt, FormulaId, PolyBernoulliQuery, Tables};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn big(v: ExactInt) -> BigInt {
    v.into_bigint()
}

fn formula(name: &str) -> PyResult<FormulaId> {
    name.parse().map_err(value_error)
}

/// B(n, k) by the named route ("basic", "ie", "thm4" ... "thm8").
/// Border cells of the Eulerian routes are answered by "basic".
#[pyfunction]
#[pyo3(signature = (n, k, formula_name = "basic"))]
fn value(n: usize, k: usize, formula_name: &str) -> PyResult<BigInt> {
    let f = formula(formula_name)?;
    Ok(big(pb_value(Tables::shared(), PolyBernoulliQuery::new(n, k), f).value))
}

/// Every route at once, as {name: (value, fell_back)}.
#[pyfunction]
fn value_all(py: Python<'_>, n: usize, k: usize) -> PyResult<Bound<'_, PyDict>> {
    let out = PyDict::new(py);
    for f in FormulaId::ALL {
        let e = pb_value(Tables::shared(), PolyBernoulliQuery::new(n, k), f);
        out.set_item(f.name(), (big(e.value.clone()), e.fallback()))?;
    }
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (max_n, max_k, formula_name = "basic"))]
fn table(max_n: usize, max_k: usize, formula_name: &str) -> PyResult<Vec<Vec<BigInt>>> {
    let t = Table::compute(Tables::shared(), max_n, max_k, formula(formula_name)?);
    Ok(t.rows().map(|r| r.iter().cloned().map(big).collect()).collect())
}

/// The CLI rendering ("plain", "csv" or "json") of a table.
#[pyfunction]
#[pyo3(signature = (max_n, max_k, formula_name = "basic", format = "plain"))]
fn render_table(max_n: usize, max_k: usize, formula_name: &str, format: &str) -> PyResult<String> {
    let fmt: Format = format.parse().map_err(value_error)?;
    Ok(Table::compute(Tables::shared(), max_n, max_k, formula(formula_name)?).render(fmt))
}

#[pyfunction]
fn factorial(n: usize) -> BigInt {
    big(exact_core::factorial(n))
}

#[pyfunction]
fn binomial(n: usize, r: i64) -> BigInt {
    big(exact_core::binomial(n, r))
}

#[pyfunction]
fn stirling2(n: usize, m: usize) -> BigInt {
    big(exact_core::stirling2(n, m))
}

#[pyfunction]
fn eulerian(k: usize, j: i64) -> BigInt {
    big(exact_core::eulerian(k, j))
}

#[pyfunction]
fn ordered_partition_count(k: usize, r: usize) -> BigInt {
    big(exact_core::ordered_partition_count(k, r))
}

#[pyfunction]
fn eulerian_from_stirling(k: usize, j: usize) -> BigInt {
    big(exact_core::eulerian_from_stirling(k, j))
}

/// (descent positions, ascending runs), positions 1-indexed.
#[pyfunction]
fn descent_set(p: Vec<u32>) -> (Vec<usize>, usize) {
    let d = oracles::descent_set(&p);
    (d.descents.into_iter().collect(), d.runs)
}

#[pyfunction]
fn count_callan(n: usize, k: usize) -> PyResult<BigInt> {
    oracles::count_callan_bruteforce(n, k).map(big).map_err(value_error)
}

#[pyfunction]
fn callan_permutations(n: usize, k: usize) -> PyResult<Vec<BicoloredPermutation>> {
    let all = oracles::list_callan(n, k).map_err(value_error)?;
    Ok(all.into_iter().map(BicoloredPermutation).collect())
}

#[pyfunction]
fn count_valid_words(pi_right: Vec<u32>, n: usize) -> PyResult<BigInt> {
    oracles::count_valid_words_bruteforce(&pi_right, n).map(big).map_err(value_error)
}

#[pyfunction]
fn w_count_ie(d: usize, n: usize, k: usize) -> BigInt {
    big(oracles::w_count_ie(Tables::shared(), d, n, k))
}

#[pyfunction]
fn w_count_partition(d: usize, n: usize, k: usize) -> BigInt {
    big(oracles::w_count_partition(Tables::shared(), d, n, k))
}

#[pyfunction]
fn is_valid_word(word: Vec<usize>, pi_right: Vec<u32>) -> PyResult<bool> {
    let w = Word::new(word, pi_right.len()).map_err(value_error)?;
    Ok(oracles::is_valid_word(&w, &pi_right))
}

#[pyfunction]
fn merge(pi_right: Vec<u32>, word: Vec<usize>) -> PyResult<BicoloredPermutation> {
    let w = Word::new(word, pi_right.len()).map_err(value_error)?;
    oracles::merge(&pi_right, &w).map(BicoloredPermutation).map_err(value_error)
}

#[pyfunction]
fn lonesum_count(n: usize, k: usize) -> PyResult<BigInt> {
    oracles::lonesum_count_bruteforce(n, k).map(big).map_err(value_error)
}

/// Runs a verification suite; returns one dict per suite with
/// "suite", "cases_run" and "failures" (list of (case, expected, actual)).
#[pyfunction]
#[pyo3(signature = (suite = "all", max = 40, max_sum = 9))]
fn run_check<'py>(py: Python<'py>, suite: &str, max: usize, max_sum: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let reports = check::run(Tables::shared(), suite, CheckBounds { max, max_sum });
    reports
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("suite", r.suite)?;
            d.set_item("cases_run", r.cases_run)?;
            let failures: Vec<(String, String, String)> =
                r.failures.into_iter().map(|f| (f.case, f.expected, f.actual)).collect();
            d.set_item("failures", failures)?;
            Ok(d)
        })
        .collect()
}

/// A permutation of left values 1..n and right values 1..k, written
/// "L1 R1 L2 R2"; optionally framed by the sentinels L0 and R(k+1).
#[pyclass(frozen, eq, hash, from_py_object, module = "polybernoulli")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct BicoloredPermutation(oracles::BicoloredPermutation);

#[pymethods]
impl BicoloredPermutation {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(BicoloredPermutation).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn is_callan(&self) -> bool {
        oracles::is_callan(&self.0)
    }

    /// (left subsequence, right subsequence)
    fn restrict(&self) -> (Vec<u32>, Vec<u32>) {
        oracles::restrict(&self.0)
    }

    fn word(&self) -> Vec<usize> {
        oracles::word_of(&self.0).symbols().to_vec()
    }

    fn with_sentinels(&self) -> Self {
        BicoloredPermutation(self.0.with_sentinels())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BicoloredPermutation('{}')", self.0)
    }
}

#[pymodule]
fn polybernoulli(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FORMULAS", FormulaId::ALL.map(FormulaId::name).to_vec())?;
    m.add_class::<BicoloredPermutation>()?;
    m.add_function(wrap_pyfunction!(value, m)?)?;
    m.add_function(wrap_pyfunction!(value_all, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(render_table, m)?)?;
    m.add_function(wrap_pyfunction!(factorial, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(ordered_partition_count, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian_from_stirling, m)?)?;
    m.add_function(wrap_pyfunction!(descent_set, m)?)?;
    m.add_function(wrap_pyfunction!(count_callan, m)?)?;
    m.add_function(wrap_pyfunction!(callan_permutations, m)?)?;
    m.add_function(wrap_pyfunction!(count_valid_words, m)?)?;
    m.add_function(wrap_pyfunction!(w_count_ie, m)?)?;
    m.add_function(wrap_pyfunction!(w_count_partition, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_word, m)?)?;
    m.add_function(wrap_pyfunction!(merge, m)?)?;
    m.add_function(wrap_pyfunction!(lonesum_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    Ok(())
}
