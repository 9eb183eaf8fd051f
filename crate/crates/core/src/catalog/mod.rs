//! Built-in biracks, the birack text format, and small-size enumeration.

mod enumerate;
mod format;

use std::path::PathBuf;

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteBirack};

pub use enumerate::{enumerate_biracks, enumerate_biracks_with, EnumerateOptions, Mode};
pub use format::{load, parse_biracks, save, to_text};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown built-in birack {0:?} (expected one of R5_40, R6_114, BR6_125)")]
    UnknownBuiltin(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {matrix} row {row}: {source}")]
    Row { line: usize, matrix: String, row: usize, source: AlgebraError },
    #[error("line {line}: {source}")]
    Structure { line: usize, source: AlgebraError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("enumeration of size {size} exceeded {nodes} search nodes after {found} structures")]
    Budget { size: usize, nodes: u64, found: usize, partial: Vec<FiniteBirack> },
    #[error("enumeration supports sizes 1..={max} in this mode, got {size}")]
    SizeLimit { size: usize, max: usize },
}

pub const BUILTIN_NAMES: [&str; 3] = ["R5_40", "R6_114", "BR6_125"];

const BUILTIN_TEXT: &str = "\
# Racks of size 5 that are not quandles.
name: R5_40
size: 5
U(s) = ((1 3), (4 5), (1 3), (2 5), (2 4))
D(s) = ι
---
# Racks of size 6 that are not quandles.
name: R6_114
size: 6
U(s) = ((2 3)(4 5 6), (2 3), (2 3), (1 6 5)(2 3), (1 4 6)(2 3), (1 5 4)(2 3))
D(s) = ι
---
# Quandle-related biracks of size 6 that are neither biquandles nor racks.
name: BR6_125
size: 6
U(s) = ((3 4 6), (3 4 6), (1 5 2), (1 5 2), (3 4 6), (1 5 2))
D(s) = ((1 2 5)(3 4 6), (1 2 5)(3 4 6), (4 6), (3 6), (1 2 5)(3 4 6), (3 4))
";

/// One of the published catalog biracks by name.
pub fn builtin(name: &str) -> Result<FiniteBirack, CatalogError> {
    let all = parse_biracks(BUILTIN_TEXT).expect("built-in catalog parses");
    all.into_iter().find(|b| b.name() == Some(name)).ok_or_else(|| CatalogError::UnknownBuiltin(name.to_string()))
}

/// All built-in biracks in catalog order.
pub fn builtins() -> Vec<FiniteBirack> {
    parse_biracks(BUILTIN_TEXT).expect("built-in catalog parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Permutation, Tag};

    #[test]
    fn builtins_load_with_expected_rows() {
        assert_eq!(builtins().len(), 3);
        let br = builtin("BR6_125").unwrap();
        let d = br.component(Tag::Classical).unwrap().rows().down_rows();
        assert_eq!(d[2], Permutation::parse_cycles("(4 6)", 6).unwrap());
        let r6 = builtin("R6_114").unwrap();
        let u = r6.component(Tag::Classical).unwrap().rows().up_rows();
        assert_eq!(u[0].to_string(), "(2 3)(4 5 6)");
        assert!(matches!(builtin("R7_1"), Err(CatalogError::UnknownBuiltin(_))));
    }

    #[test]
    fn builtins_are_fully_formed_and_yang_baxter() {
        for b in builtins() {
            let c = b.component(Tag::Classical).unwrap();
            assert!(c.is_fully_formed(), "{:?}", b.name());
            assert_eq!(c.yang_baxter_witness(), None, "{:?}", b.name());
        }
    }

    #[test]
    fn biquandle_status() {
        for b in builtins() {
            assert!(!b.is_biquandle(Tag::Classical).unwrap(), "{:?}", b.name());
        }
        let c = builtin("R5_40").unwrap();
        assert_eq!(c.component(Tag::Classical).unwrap().biquandle_witness(), Some(0));
    }
}
