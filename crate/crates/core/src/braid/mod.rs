//! Braid words and diagram quantities of their closures.

mod macros;
mod parse;

use std::fmt;

use thiserror::Error;

use crate::algebra::Tag;

pub use macros::{named, source as macro_source, MACRO_NAMES};
pub use parse::parse_braid;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator index {index} needs at least {} strands, word has {strands}", index + 1)]
    Bound { index: usize, strands: usize },
    #[error("closure direction vector has length {got}, braid has {strands} strands")]
    DirectionLength { got: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
}

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn sign(self) -> i64 {
        match self {
            Polarity::Positive => 1,
            Polarity::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// A crossing between strands `position` and `position + 1` (one-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub position: usize,
    pub tag: Tag,
    pub polarity: Polarity,
}

impl Generator {
    pub fn new(position: usize, tag: Tag, polarity: Polarity) -> Self {
        Self { position, tag, polarity }
    }

    pub fn classical(position: usize, polarity: Polarity) -> Self {
        Self::new(position, Tag::Classical, polarity)
    }

    pub fn inverse(self) -> Self {
        Self { polarity: self.polarity.flip(), ..self }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polarity == Polarity::Negative {
            f.write_str("-")?;
        }
        write!(f, "{}{}", self.tag.letter(), self.position)
    }
}

/// A braid on `strands` strands as a fully expanded generator sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    gens: Vec<Generator>,
}

/// Closing direction of one strand of a braid closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Anticlockwise,
    Clockwise,
}

/// Parity of `w - n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: i64) -> Self {
        if value.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Colour of a diagram with writhe `writhe` and turning number `turning`.
pub fn colour(writhe: i64, turning: i64) -> Parity {
    Parity::of(writhe - turning)
}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<Generator>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(g) = gens.iter().find(|g| g.position == 0 || g.position >= strands) {
            return Err(BraidError::Bound { index: g.position, strands });
        }
        Ok(Self { strands, gens })
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("no generators")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn tags(&self) -> impl Iterator<Item = Tag> + '_ {
        self.gens.iter().map(|g| g.tag)
    }

    /// Reverses the word and flips every polarity.
    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, gens: self.gens.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// Concatenation on the larger of the two strand counts.
    pub fn then(&self, other: &Self) -> Self {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Self { strands: self.strands.max(other.strands), gens }
    }

    /// `γ · self · γ⁻¹`
    pub fn conjugate(&self, gamma: &Self) -> Self {
        gamma.then(self).then(&gamma.inverse())
    }

    /// Appends a generator on the top strand of one new strand.
    pub fn stabilize(&self, polarity: Polarity) -> Self {
        let mut gens = self.gens.clone();
        gens.push(Generator::classical(self.strands, polarity));
        Self { strands: self.strands + 1, gens }
    }

    pub fn with_strands(&self, strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, self.gens.clone())
    }

    /// Signed count of the classical crossings.
    pub fn writhe(&self) -> i64 {
        self.gens.iter().filter(|g| g.tag == Tag::Classical).map(|g| g.polarity.sign()).sum()
    }

    /// Where each strand's start ends up: every generator transposes its
    /// two strands regardless of tag or sign.
    pub fn strand_permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for g in &self.gens {
            at.swap(g.position - 1, g.position);
        }
        let mut perm = vec![0; self.strands];
        for (slot, &start) in at.iter().enumerate() {
            perm[start] = slot;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.strand_permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        count
    }

    /// Turning number of the closure as the sum of Seifert circle signs.
    /// Anticlockwise circles count `+1`; with `None` every strand closes
    /// anticlockwise.
    pub fn turning_number(&self, directions: Option<&[Closure]>) -> Result<i64, BraidError> {
        match directions {
            None => Ok(self.strands as i64),
            Some(d) if d.len() != self.strands => {
                Err(BraidError::DirectionLength { got: d.len(), strands: self.strands })
            }
            Some(d) => Ok(d
                .iter()
                .map(|c| match c {
                    Closure::Anticlockwise => 1,
                    Closure::Clockwise => -1,
                })
                .sum()),
        }
    }

    /// Colour of the closure with every strand closing anticlockwise.
    pub fn colour(&self) -> Parity {
        colour(self.writhe(), self.strands as i64)
    }
}

/// Space-separated generators, e.g. `s1 -s2 s1 -s2`. Parsing the output
/// with the same strand count gives back the same word.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
