//! Reference polynomial values for named braids and built-in biracks, and
//! a checker that recomputes them.
//!
//! The golden file is tab-separated with columns `table`, `link`, `birack`,
//! `kind` (`plain` or `refined`) and `expected`. Blank lines and lines
//! starting with `#` are ignored.

use serde::Serialize;
use thiserror::Error;

use crate::braid;
use crate::catalog;
use crate::invariant::{birack_polynomial_with, refined_polynomial_with, InvariantError, Options};

/// The reference values shipped with the library.
pub const EMBEDDED: &str = include_str!("../data/golden.tsv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub table: String,
    pub link: String,
    pub birack: String,
    pub refined: bool,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("golden line {line}: {message}")]
pub struct GoldenError {
    pub line: usize,
    pub message: String,
}

pub fn parse_golden(text: &str) -> Result<Vec<Cell>, GoldenError> {
    let mut cells = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| GoldenError { line, message };
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        let [table, link, birack, kind, expected] = fields[..] else {
            return Err(err(format!("expected 5 tab-separated fields, found {}", fields.len())));
        };
        if braid::named(link).is_none() {
            return Err(err(format!("unknown link {link:?}")));
        }
        if !catalog::BUILTIN_NAMES.contains(&birack) {
            return Err(err(format!("unknown birack {birack:?}")));
        }
        let refined = match kind {
            "plain" => false,
            "refined" => true,
            _ => return Err(err(format!("kind must be plain or refined, found {kind:?}"))),
        };
        if table.is_empty() || expected.is_empty() {
            return Err(err("empty field".into()));
        }
        cells.push(Cell {
            table: table.into(),
            link: link.into(),
            birack: birack.into(),
            refined,
            expected: expected.into(),
        });
    }
    Ok(cells)
}

pub fn embedded() -> Vec<Cell> {
    parse_golden(EMBEDDED).expect("embedded golden file parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellOutcome {
    pub cell: Cell,
    pub got: Result<String, InvariantError>,
}

impl CellOutcome {
    pub fn passed(&self) -> bool {
        self.got.as_deref() == Ok(self.cell.expected.as_str())
    }
}

/// Recomputes one cell.
pub fn compute(cell: &Cell, opts: &Options) -> Result<String, InvariantError> {
    let word = braid::named(&cell.link).expect("validated at parse time");
    let birack = catalog::builtin(&cell.birack).expect("validated at parse time");
    let poly = if cell.refined {
        refined_polynomial_with(&word, &birack, opts)?
    } else {
        birack_polynomial_with(&word, &birack, opts)?
    };
    Ok(poly.to_string())
}

pub fn verify(cells: &[Cell], opts: &Options) -> Vec<CellOutcome> {
    cells.iter().map(|cell| CellOutcome { cell: cell.clone(), got: compute(cell, opts) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_cells() {
        let cells = embedded();
        assert_eq!(cells.len(), 26);
        assert_eq!(cells.iter().filter(|c| c.table == "bigelow").count(), 8);
    }

    #[test]
    fn rejects_malformed_lines() {
        for (text, line) in [
            ("table1\tunknot\tR5_40\tplain", 1),
            ("# c\n\ntable1\tknot\tR5_40\tplain\t1", 3),
            ("table1\tunknot\tR9\tplain\t1", 1),
            ("table1\tunknot\tR5_40\tfancy\t1", 1),
            ("table1\tunknot\tR5_40\tplain\t", 1),
        ] {
            assert_eq!(parse_golden(text).unwrap_err().line, line, "{text:?}");
        }
    }

    #[test]
    fn tampered_cell_fails() {
        let mut cell = embedded().remove(0);
        cell.expected = "3t + 6".into();
        let out = verify(&[cell], &Options::default());
        assert!(!out[0].passed());
        assert_eq!(out[0].got.as_deref(), Ok("3t + 5"));
    }
}
