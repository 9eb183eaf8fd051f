//! Finite birack structures: square maps, axiom checks, sub-birack closure
//! and the stabilization period.

mod birack;
mod checks;
mod permutation;
mod square;
mod theory;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use birack::{Component, FiniteBirack, RowReading, ROW_READING};
pub use checks::{check_commute, check_yang_baxter, check_yang_baxter_identities, CommuteFailure, IdentityFailure};
pub use permutation::Permutation;
pub use square::{AuxRow, Formedness, PairTable, SwitchMap};
pub use theory::{check_birack_for_theory, CheckKind, CheckOutcome, Dominance, TheoryDescriptor, TheoryReport};

/// Largest supported label set. Label sets are stored as `u8` and label
/// subsets as `u64` bitmasks.
pub const MAX_SIZE: usize = 64;

/// A crossing type. Letters follow the braid-word grammar: `s` classical,
/// `v` virtual, `q` singular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Classical,
    Virtual,
    Singular,
}

impl Tag {
    pub const ALL: [Tag; 3] = [Tag::Classical, Tag::Virtual, Tag::Singular];

    pub fn letter(self) -> char {
        match self {
            Tag::Classical => 's',
            Tag::Virtual => 'v',
            Tag::Singular => 'q',
        }
    }

    pub fn from_letter(c: char) -> Option<Tag> {
        match c {
            's' => Some(Tag::Classical),
            'v' => Some(Tag::Virtual),
            'q' => Some(Tag::Singular),
            _ => None,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Errors from building or querying birack structures. Labels and rows in
/// messages are one-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("label {label} out of range 1..={size}")]
    LabelOutOfRange { label: usize, size: usize },
    #[error("label set size {size} exceeds the supported maximum of 64")]
    TooLarge { size: usize },
    #[error("label set must be non-empty")]
    EmptyLabelSet,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("image {image} repeated at position {position}")]
    RepeatedImage { image: usize, position: usize },
    #[error("bad cycle notation {text:?}: {message}")]
    CycleSyntax { text: String, message: String },
    #[error("not formed: auxiliary row {row:?} is not a bijection")]
    NotFormed { row: AuxRow },
    #[error("not fully formed: pairs {collision:?} share an image")]
    NotFullyFormed { collision: [(usize, usize); 2] },
    #[error("companion map undefined at {pair:?}: {images} preimages (not formed)")]
    SidewaysUndefined { pair: (usize, usize), images: usize },
    #[error("no component for crossing type {0}")]
    MissingTag(Tag),
    #[error("crossing type {0} given twice")]
    DuplicateTag(Tag),
    #[error("crossing type {0} is not part of the theory")]
    UnknownTag(Tag),
    #[error("label subset must be non-empty")]
    EmptySubset,
}
