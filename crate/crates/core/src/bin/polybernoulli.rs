use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polybernoulli_core::check::{self, CheckBounds, Suite};
use polybernoulli_core::oracles::{count_callan_bruteforce_bounded, list_callan_bounded, DEFAULT_CALLAN_BOUND};
use polybernoulli_core::render::{Format, OutputSpec, Table};
use polybernoulli_core::{pb_value, ExactInt, FormulaId, PolyBernoulliQuery, Tables};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact poly-Bernoulli numbers B(n, k) = B_n^(-k).
#[derive(Debug, Parser)]
#[command(name = "polybernoulli", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy)]
enum FormulaChoice {
    One(FormulaId),
    All,
}

fn parse_formula_choice(s: &str) -> Result<FormulaChoice, String> {
    if s == "all" {
        return Ok(FormulaChoice::All);
    }
    s.parse().map(FormulaChoice::One).map_err(|e| e.to_string())
}

fn parse_formula(s: &str) -> Result<FormulaId, String> {
    s.parse().map_err(|e: polybernoulli_core::Error| e.to_string())
}

/// `K,J,VALUE` for a pre-seeded Eulerian cell.
fn parse_injection(s: &str) -> Result<(usize, usize, ExactInt), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [k, j, v] = parts.as_slice() else {
        return Err("expected K,J,VALUE".into());
    };
    Ok((
        k.parse().map_err(|_| format!("bad K {k:?}"))?,
        j.parse().map_err(|_| format!("bad J {j:?}"))?,
        v.parse().map_err(|e: polybernoulli_core::Error| e.to_string())?,
    ))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print B(n, k).
    Value {
        n: usize,
        k: usize,
        /// basic, ie, thm4 ... thm8, or all
        #[arg(long, default_value = "basic", value_parser = parse_formula_choice)]
        formula: FormulaChoice,
    },
    /// Print the (max_n + 1) x (max_k + 1) table.
    Table {
        max_n: usize,
        max_k: usize,
        #[arg(long, default_value = "basic", value_parser = parse_formula)]
        formula: FormulaId,
        /// plain, csv or json
        #[arg(long, default_value = "plain")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: identities, oracles or all.
    Check {
        suite: Suite,
        /// Largest n and k for the cross-formula grid.
        #[arg(long, default_value_t = CheckBounds::default().max)]
        max: usize,
        /// Largest n + k for the Callan brute force.
        #[arg(long, default_value_t = CheckBounds::default().max_sum)]
        max_sum: usize,
        /// Seed a wrong Eulerian cell before running (fault injection).
        #[arg(long, hide = true, value_parser = parse_injection)]
        inject_eulerian: Option<(usize, usize, ExactInt)>,
    },
    /// Count (or list) Callan permutations by brute force.
    Enumerate {
        n: usize,
        k: usize,
        #[arg(long)]
        list: bool,
        /// Largest n + k accepted.
        #[arg(long, default_value_t = DEFAULT_CALLAN_BOUND)]
        bound: usize,
    },
}

fn fallback_notice(formula: FormulaId, n: usize, k: usize) {
    eprintln!("note: {formula} is stated for n, k > 0; B({n}, {k}) answered by basic");
}

fn run(cli: Cli, out: &mut String) -> Result<u8, String> {
    let tables = Tables::shared();
    match cli.command {
        Command::Value { n, k, formula } => {
            let q = PolyBernoulliQuery::new(n, k);
            match formula {
                FormulaChoice::One(f) => {
                    let e = pb_value(tables, q, f);
                    if e.fallback() {
                        fallback_notice(f, n, k);
                    }
                    writeln!(out, "{}", e.value).unwrap();
                    Ok(0)
                }
                FormulaChoice::All => {
                    let evals: Vec<_> = FormulaId::ALL.iter().map(|&f| pb_value(tables, q, f)).collect();
                    for e in &evals {
                        if e.fallback() {
                            fallback_notice(e.requested, n, k);
                        }
                        writeln!(out, "{} {}", e.requested, e.value).unwrap();
                    }
                    if evals.iter().all(|e| e.value == evals[0].value) {
                        out.push_str("AGREE\n");
                        Ok(0)
                    } else {
                        out.push_str("DISAGREE\n");
                        Ok(EXIT_VERIFY)
                    }
                }
            }
        }
        Command::Table { max_n, max_k, formula, format, out: destination } => {
            let table = Table::compute(tables, max_n, max_k, formula);
            if table.fallback_cells > 0 {
                eprintln!(
                    "note: {formula} is stated for n, k > 0; {} border cells answered by basic",
                    table.fallback_cells
                );
            }
            let text = table.render(format);
            match destination {
                Some(path) => OutputSpec { format, destination: Some(path) }
                    .write(&text)
                    .map_err(|e| format!("cannot write output: {e}"))?,
                None => out.push_str(&text),
            }
            Ok(0)
        }
        Command::Check { suite, max, max_sum, inject_eulerian } => {
            let fresh;
            let tables = match inject_eulerian {
                Some((k, j, value)) => {
                    fresh = Tables::new();
                    fresh.eulerian_table().seed(k, j, value);
                    &fresh
                }
                None => tables,
            };
            let reports = check::run(tables, suite, CheckBounds { max, max_sum });
            for r in &reports {
                write!(out, "{r}").unwrap();
            }
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { EXIT_VERIFY })
        }
        Command::Enumerate { n, k, list, bound } => {
            if list {
                let all = list_callan_bounded(n, k, bound).map_err(|e| e.to_string())?;
                for p in &all {
                    writeln!(out, "{p}").unwrap();
                }
            } else {
                let count = count_callan_bruteforce_bounded(n, k, bound).map_err(|e| e.to_string())?;
                writeln!(out, "{count}").unwrap();
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
