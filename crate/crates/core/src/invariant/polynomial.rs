use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::count::{count_labellings_with, count_refined};
use super::{InvariantError, Options};
use crate::algebra::{FiniteBirack, Tag};
use crate::braid::{BraidWord, Polarity};

/// `Σ φ_w t^w` over writhe residues `w = 0..k-1`, optionally refined into
/// `Σ n_i^w s^(i-1)` by the size `i` of the smallest containing sub-birack.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial")]
pub struct BirackPolynomial {
    period: usize,
    coeffs: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    refined: Option<Vec<Vec<u64>>>,
}

#[derive(Deserialize)]
struct RawPolynomial {
    period: usize,
    coeffs: Vec<u64>,
    refined: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("period {period} does not match {got} coefficients")]
    Period { period: usize, got: usize },
    #[error("refined row for t^{residue} sums to {sum}, coefficient is {coeff}")]
    RefinedSum { residue: usize, sum: u64, coeff: u64 },
    #[error("refined matrix has {got} rows, expected {period}")]
    RefinedRows { period: usize, got: usize },
}

impl TryFrom<RawPolynomial> for BirackPolynomial {
    type Error = PolynomialError;

    fn try_from(raw: RawPolynomial) -> Result<Self, Self::Error> {
        if raw.period == 0 || raw.period != raw.coeffs.len() {
            return Err(PolynomialError::Period { period: raw.period, got: raw.coeffs.len() });
        }
        match raw.refined {
            None => Ok(Self::new(raw.coeffs)),
            Some(rows) => {
                if rows.len() != raw.period {
                    return Err(PolynomialError::RefinedRows { period: raw.period, got: rows.len() });
                }
                for (residue, (row, &coeff)) in rows.iter().zip(&raw.coeffs).enumerate() {
                    let sum: u64 = row.iter().sum();
                    if sum != coeff {
                        return Err(PolynomialError::RefinedSum { residue, sum, coeff });
                    }
                }
                Ok(Self::from_refined(rows))
            }
        }
    }
}

impl BirackPolynomial {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one residue");
        Self { period: coeffs.len(), coeffs, refined: None }
    }

    /// Builds from `rows[w][i - 1] = n_i^w`; `φ_w` is each row's sum.
    pub fn from_refined(rows: Vec<Vec<u64>>) -> Self {
        let coeffs = rows.iter().map(|r| r.iter().sum()).collect();
        Self { refined: Some(rows), ..Self::new(coeffs) }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `φ_w` for any writhe, reduced mod the period.
    pub fn coefficient(&self, writhe: i64) -> u64 {
        self.coeffs[writhe.rem_euclid(self.period as i64) as usize]
    }

    pub fn refined(&self) -> Option<&[Vec<u64>]> {
        self.refined.as_deref()
    }

    /// The same polynomial with `s = 1`.
    pub fn unrefined(&self) -> Self {
        Self::new(self.coeffs.clone())
    }
}

/// Descending powers of `t`. A coefficient is an integer, or a
/// parenthesised polynomial in `s` when it has any `s` term.
impl fmt::Display for BirackPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for w in (0..self.period).rev() {
            let coeff = match &self.refined {
                Some(rows) => s_polynomial(&rows[w]),
                None => self.coeffs[w].to_string(),
            };
            if coeff == "0" {
                continue;
            }
            let mut term = String::new();
            let bare = !coeff.starts_with('(');
            match w {
                0 => term.push_str(&coeff),
                _ => {
                    if !(bare && coeff == "1") {
                        term.push_str(&coeff);
                    }
                    term.push('t');
                    if w > 1 {
                        write!(term, "^{w}")?;
                    }
                }
            }
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// `row[i]` is the coefficient of `s^i`.
fn s_polynomial(row: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in row.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mut part = String::new();
        if i == 0 || c != 1 {
            part.push_str(&c.to_string());
        }
        if i >= 1 {
            part.push('s');
        }
        if i > 1 {
            part.push_str(&format!("^{i}"));
        }
        parts.push(part);
    }
    match parts.as_slice() {
        [] => "0".into(),
        [only] if row.iter().skip(1).all(|&c| c == 0) => only.clone(),
        _ => format!("({})", parts.join("+")),
    }
}

/// Runs `count` on the word and on its first `k - 1` positive
/// stabilizations, filing each result under its writhe residue.
fn stratify<T>(
    word: &BraidWord,
    birack: &FiniteBirack,
    opts: &Options,
    count: impl Fn(&BraidWord) -> Result<T, InvariantError>,
) -> Result<Vec<T>, InvariantError> {
    if let Some(tag) = word.tags().find(|&t| t != Tag::Classical) {
        return Err(InvariantError::UnsupportedTheory(tag));
    }
    let k = birack.stabilization_period(Tag::Classical)?;
    opts.check(birack.size(), word.strands() + k - 1)?;
    let w0 = word.writhe();
    let mut slots: Vec<Option<T>> = (0..k).map(|_| None).collect();
    let mut current = word.clone();
    for j in 0..k {
        let residue = (w0 + j as i64).rem_euclid(k as i64) as usize;
        slots[residue] = Some(count(&current)?);
        current = current.stabilize(Polarity::Positive);
    }
    Ok(slots.into_iter().map(|s| s.expect("k consecutive residues cover 0..k")).collect())
}

pub fn birack_polynomial(word: &BraidWord, birack: &FiniteBirack) -> Result<BirackPolynomial, InvariantError> {
    birack_polynomial_with(word, birack, &Options::default())
}

pub fn birack_polynomial_with(
    word: &BraidWord,
    birack: &FiniteBirack,
    opts: &Options,
) -> Result<BirackPolynomial, InvariantError> {
    let coeffs = stratify(word, birack, opts, |w| count_labellings_with(w, birack, opts))?;
    Ok(BirackPolynomial::new(coeffs))
}

pub fn refined_polynomial(word: &BraidWord, birack: &FiniteBirack) -> Result<BirackPolynomial, InvariantError> {
    refined_polynomial_with(word, birack, &Options::default())
}

pub fn refined_polynomial_with(
    word: &BraidWord,
    birack: &FiniteBirack,
    opts: &Options,
) -> Result<BirackPolynomial, InvariantError> {
    let rows = stratify(word, birack, opts, |w| count_refined(w, birack, opts))?;
    Ok(BirackPolynomial::from_refined(rows))
}
