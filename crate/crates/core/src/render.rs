//! Table generation and the plain / csv / json renderings.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact_core::{ExactInt, Tables};
use crate::polybernoulli::{pb_value, FormulaId, PolyBernoulliQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected plain, csv or json)")),
        }
    }
}

/// Where and how a rendering goes. `None` is standard output.
#[derive(Debug, Clone, Default)]
pub struct OutputSpec {
    pub format: Format,
    pub destination: Option<PathBuf>,
}

impl OutputSpec {
    pub fn write(&self, text: &str) -> io::Result<()> {
        match &self.destination {
            Some(path) => std::fs::write(path, text),
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()
            }
        }
    }
}

/// `B(n, k)` for `0 <= n <= max_n`, `0 <= k <= max_k`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub max_n: usize,
    pub max_k: usize,
    pub formula: FormulaId,
    pub values: Vec<ExactInt>,
    #[serde(skip)]
    pub fallback_cells: usize,
}

impl Table {
    /// Cells are evaluated in parallel; assembly order is fixed.
    pub fn compute(t: &Tables, max_n: usize, max_k: usize, formula: FormulaId) -> Table {
        let evals: Vec<_> = (0..(max_n + 1) * (max_k + 1))
            .into_par_iter()
            .map(|i| pb_value(t, PolyBernoulliQuery::new(i / (max_k + 1), i % (max_k + 1)), formula))
            .collect();
        let fallback_cells = evals.iter().filter(|e| e.fallback()).count();
        Table {
            max_n,
            max_k,
            formula,
            values: evals.into_iter().map(|e| e.value).collect(),
            fallback_cells,
        }
    }

    pub fn get(&self, n: usize, k: usize) -> &ExactInt {
        &self.values[n * (self.max_k + 1) + k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.values.chunks(self.max_k + 1)
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Plain => {
                for row in self.rows() {
                    let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(s, "{}", line.join(" ")).unwrap();
                }
            }
            Format::Csv => {
                let header: Vec<String> = (0..=self.max_k).map(|k| k.to_string()).collect();
                writeln!(s, "n,{}", header.join(",")).unwrap();
                for (n, row) in self.rows().enumerate() {
                    let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(s, "{n},{}", line.join(",")).unwrap();
                }
            }
            Format::Json => {
                s = serde_json::to_string(self).expect("table serializes");
                s.push('\n');
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings_share_values() {
        let table = Table::compute(Tables::shared(), 2, 3, FormulaId::Basic);
        assert_eq!(table.render(Format::Plain), "1 1 1 1\n1 2 4 8\n1 4 14 46\n");
        assert_eq!(table.render(Format::Csv), "n,0,1,2,3\n0,1,1,1,1\n1,1,2,4,8\n2,1,4,14,46\n");
        let json: serde_json::Value = serde_json::from_str(&table.render(Format::Json)).unwrap();
        assert_eq!(json["max_n"], 2);
        assert_eq!(json["max_k"], 3);
        assert_eq!(json["formula"], "basic");
        let values: Vec<&str> = json["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(values, ["1", "1", "1", "1", "1", "2", "4", "8", "1", "4", "14", "46"]);
    }

    #[test]
    fn eulerian_route_tables_count_fallbacks() {
        let table = Table::compute(Tables::shared(), 2, 2, FormulaId::Thm5);
        assert_eq!(table.fallback_cells, 5);
        assert_eq!(table.get(2, 2), &ExactInt::from(14u32));
    }
}
