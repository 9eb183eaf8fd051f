//! The birack text format.
//!
//! ```text
//! # comment
//! name: R5_40
//! size: 5
//! U(s) = ((1 3), (4 5), (1 3), (2 5), (2 4))
//! D(s) = ι
//! ---
//! ```
//!
//! Each stanza gives `U(tag)` and `D(tag)` for every crossing type it uses.
//! A matrix is a parenthesised, comma-separated list of rows in one-based
//! cycle notation, or `ι` / `id` for all-identity rows. `U` and `D` without
//! a tag, and the tag `r`, mean the classical crossing. `size:` may be
//! omitted when some matrix lists its rows. Stanzas are separated by `---`.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use super::CatalogError;
use crate::algebra::{FiniteBirack, Permutation, SwitchMap, Tag};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Which {
    Up,
    Down,
}

enum Matrix {
    Identity,
    Rows(Vec<String>),
}

#[derive(Default)]
struct Stanza {
    start: usize,
    name: Option<String>,
    size: Option<usize>,
    matrices: BTreeMap<(Tag, Which), (Matrix, usize)>,
    tag_order: Vec<Tag>,
}

impl Stanza {
    fn is_empty(&self) -> bool {
        self.name.is_none() && self.size.is_none() && self.matrices.is_empty()
    }

    fn finish(self) -> Result<FiniteBirack, CatalogError> {
        let parse_err = |line, message: String| CatalogError::Parse { line, message };
        if self.tag_order.is_empty() {
            return Err(parse_err(self.start, "stanza has no U/D matrices".into()));
        }
        let inferred = self.matrices.values().find_map(|(m, _)| match m {
            Matrix::Rows(r) => Some(r.len()),
            Matrix::Identity => None,
        });
        let n = self
            .size
            .or(inferred)
            .ok_or_else(|| parse_err(self.start, "size unknown: give `size:` or list the rows".into()))?;
        let mut components = Vec::new();
        for &tag in &self.tag_order {
            let mut rows = Vec::new();
            for which in [Which::Up, Which::Down] {
                let letter = if which == Which::Up { 'U' } else { 'D' };
                let (matrix, line) = self
                    .matrices
                    .get(&(tag, which))
                    .ok_or_else(|| parse_err(self.start, format!("missing {letter}({})", tag.letter())))?;
                rows.push(match matrix {
                    Matrix::Identity => vec![Permutation::identity(n); n],
                    Matrix::Rows(items) => {
                        if items.len() != n {
                            return Err(parse_err(
                                *line,
                                format!("{letter}({}) has {} rows, size is {n}", tag.letter(), items.len()),
                            ));
                        }
                        items
                            .iter()
                            .enumerate()
                            .map(|(i, s)| {
                                Permutation::parse_cycles(s, n).map_err(|source| CatalogError::Row {
                                    line: *line,
                                    matrix: format!("{letter}({})", tag.letter()),
                                    row: i + 1,
                                    source,
                                })
                            })
                            .collect::<Result<_, _>>()?
                    }
                });
            }
            let down = rows.pop().expect("two matrices");
            let up = rows.pop().expect("two matrices");
            let line = self.matrices[&(tag, Which::Up)].1;
            let map = SwitchMap::new(up, down).map_err(|source| CatalogError::Structure { line, source })?;
            components.push((tag, map));
        }
        FiniteBirack::new(self.name, components).map_err(|source| CatalogError::Structure { line: self.start, source })
    }
}

/// Parses every stanza of a birack file.
pub fn parse_biracks(text: &str) -> Result<Vec<FiniteBirack>, CatalogError> {
    let mut out = Vec::new();
    let mut stanza = Stanza { start: 1, ..Default::default() };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if stanza.is_empty() {
            stanza.start = line_no;
        }
        if line == "---" {
            if !stanza.is_empty() {
                out.push(std::mem::take(&mut stanza).finish()?);
            }
            continue;
        }
        parse_line(line, line_no, &mut stanza)?;
    }
    if !stanza.is_empty() {
        out.push(stanza.finish()?);
    }
    Ok(out)
}

fn parse_line(line: &str, line_no: usize, stanza: &mut Stanza) -> Result<(), CatalogError> {
    let err = |message: String| CatalogError::Parse { line: line_no, message };
    if let Some(value) = line.strip_prefix("name:") {
        if stanza.name.is_some() {
            return Err(err("duplicate `name:`".into()));
        }
        let value = value.trim();
        if value.is_empty() {
            return Err(err("empty name".into()));
        }
        stanza.name = Some(value.to_string());
        return Ok(());
    }
    if let Some(value) = line.strip_prefix("size:") {
        if stanza.size.is_some() {
            return Err(err("duplicate `size:`".into()));
        }
        let n: usize = value.trim().parse().map_err(|_| err(format!("bad size {:?}", value.trim())))?;
        if n == 0 || n > crate::algebra::MAX_SIZE {
            return Err(err(format!("size {n} outside 1..={}", crate::algebra::MAX_SIZE)));
        }
        stanza.size = Some(n);
        return Ok(());
    }
    let (lhs, rhs) = line.split_once('=').ok_or_else(|| err(format!("unrecognised line {line:?}")))?;
    let lhs = lhs.trim();
    let which = match lhs.chars().next() {
        Some('U') => Which::Up,
        Some('D') => Which::Down,
        _ => return Err(err(format!("expected `U(tag)` or `D(tag)`, found {lhs:?}"))),
    };
    let tag_text = lhs[1..].trim();
    let tag = if tag_text.is_empty() {
        Tag::Classical
    } else {
        let inner = tag_text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .map(str::trim)
            .ok_or_else(|| err(format!("bad crossing type {tag_text:?}")))?;
        let mut chars = inner.chars();
        match (chars.next(), chars.next()) {
            (Some('r'), None) => Tag::Classical,
            (Some(c), None) => Tag::from_letter(c).ok_or_else(|| err(format!("unknown crossing type {inner:?}")))?,
            _ => return Err(err(format!("unknown crossing type {inner:?}"))),
        }
    };
    let matrix = parse_matrix(rhs.trim()).map_err(err)?;
    if stanza.matrices.insert((tag, which), (matrix, line_no)).is_some() {
        return Err(err(format!("{} given twice", lhs)));
    }
    if !stanza.tag_order.contains(&tag) {
        stanza.tag_order.push(tag);
    }
    Ok(())
}

fn parse_matrix(text: &str) -> Result<Matrix, String> {
    if text == "ι" || text == "id" {
        return Ok(Matrix::Identity);
    }
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected a parenthesised row list or ι, found {text:?}"))?;
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced ')'".into());
                }
            }
            ',' if depth == 0 => {
                items.push(inner[start..i].trim().to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced '('".into());
    }
    items.push(inner[start..].trim().to_string());
    if let Some(pos) = items.iter().position(|s| s.is_empty()) {
        return Err(format!("row {} is empty", pos + 1));
    }
    Ok(Matrix::Rows(items))
}

fn matrix_text(rows: &[Permutation]) -> String {
    if rows.iter().all(Permutation::is_identity) {
        return "ι".into();
    }
    let items: Vec<String> = rows.iter().map(|p| p.to_string()).collect();
    format!("({})", items.join(", "))
}

/// Serialises biracks in the text format, one stanza each.
pub fn to_text(biracks: &[FiniteBirack]) -> String {
    let mut out = String::new();
    for (i, b) in biracks.iter().enumerate() {
        if i > 0 {
            out.push_str("---\n");
        }
        if let Some(name) = b.name() {
            writeln!(out, "name: {name}").unwrap();
        }
        writeln!(out, "size: {}", b.size()).unwrap();
        for (tag, c) in b.components() {
            writeln!(out, "U({}) = {}", tag.letter(), matrix_text(c.rows().up_rows())).unwrap();
            writeln!(out, "D({}) = {}", tag.letter(), matrix_text(c.rows().down_rows())).unwrap();
        }
    }
    out
}

pub fn load(path: impl AsRef<Path>) -> Result<Vec<FiniteBirack>, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })?;
    parse_biracks(&text)
}

pub fn save(biracks: &[FiniteBirack], path: impl AsRef<Path>) -> Result<(), CatalogError> {
    let path = path.as_ref();
    std::fs::write(path, to_text(biracks)).map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })
}
