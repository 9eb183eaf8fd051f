use std::collections::BTreeMap;

use super::InvariantError;
use crate::algebra::{AlgebraError, FiniteBirack, PairTable, Tag};
use crate::braid::{BraidWord, Polarity};

/// Which strand feeds which argument of the switch at a positive generator
/// `σ_i`.
///
/// `Direct` sends `(strand i, strand i+1)` through `S` and writes the image
/// back in the same order. `Swapped` feeds `(strand i+1, strand i)` instead.
/// Only `Direct` reproduces the published tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrandAssignment {
    Direct,
    Swapped,
}

pub const STRAND_ASSIGNMENT: StrandAssignment = StrandAssignment::Direct;

/// A braid word lowered to a list of table lookups.
pub(crate) struct CompiledBraid {
    pub(crate) size: usize,
    pub(crate) strands: usize,
    steps: Vec<(usize, usize)>,
    tables: Vec<Vec<(u8, u8)>>,
}

impl CompiledBraid {
    pub(crate) fn new(
        word: &BraidWord,
        birack: &FiniteBirack,
        assignment: StrandAssignment,
    ) -> Result<Self, InvariantError> {
        let n = birack.size();
        let mut index: BTreeMap<(Tag, bool), usize> = BTreeMap::new();
        let mut tables = Vec::new();
        let mut steps = Vec::with_capacity(word.len());
        for g in word.generators() {
            let key = (g.tag, g.polarity == Polarity::Positive);
            let slot = match index.get(&key) {
                Some(&slot) => slot,
                None => {
                    let table = step_table(birack, g.tag, g.polarity, assignment)?;
                    tables.push(table.raw().to_vec());
                    index.insert(key, tables.len() - 1);
                    tables.len() - 1
                }
            };
            steps.push((g.position - 1, slot));
        }
        Ok(Self { size: n, strands: word.strands(), steps, tables })
    }

    #[inline]
    pub(crate) fn run(&self, v: &mut [u8]) {
        let n = self.size;
        for &(i, t) in &self.steps {
            let (a, b) = self.tables[t][v[i] as usize * n + v[i + 1] as usize];
            v[i] = a;
            v[i + 1] = b;
        }
    }

    /// Runs the word and returns the mask of every label seen on an arc.
    #[inline]
    pub(crate) fn run_tracking(&self, v: &mut [u8]) -> u64 {
        let n = self.size;
        let mut mask = v.iter().fold(0u64, |m, &x| m | 1 << x);
        for &(i, t) in &self.steps {
            let (a, b) = self.tables[t][v[i] as usize * n + v[i + 1] as usize];
            v[i] = a;
            v[i + 1] = b;
            mask |= 1 << a | 1 << b;
        }
        mask
    }
}

/// The pair map applied to `(strand i, strand i+1)` by one generator.
fn step_table(
    birack: &FiniteBirack,
    tag: Tag,
    polarity: Polarity,
    assignment: StrandAssignment,
) -> Result<PairTable, AlgebraError> {
    let c = birack.component(tag)?;
    let inverse = c.switch_inverse()?;
    let s = c.switch();
    Ok(match (assignment, polarity) {
        (StrandAssignment::Direct, Polarity::Positive) => s.clone(),
        (StrandAssignment::Direct, Polarity::Negative) => inverse.clone(),
        (StrandAssignment::Swapped, Polarity::Positive) => PairTable::from_fn(s.size(), |a, b| s.apply(b, a)),
        (StrandAssignment::Swapped, Polarity::Negative) => PairTable::from_fn(s.size(), |a, b| {
            let (p, q) = inverse.apply(a, b);
            (q, p)
        }),
    })
}

/// Applies the braid to a zero-based label vector, generator by generator.
pub fn braid_action(word: &BraidWord, birack: &FiniteBirack, x: &[usize]) -> Result<Vec<usize>, InvariantError> {
    if x.len() != word.strands() {
        return Err(InvariantError::VectorLength { got: x.len(), strands: word.strands() });
    }
    let n = birack.size();
    if let Some(&label) = x.iter().find(|&&l| l >= n) {
        return Err(AlgebraError::LabelOutOfRange { label: label + 1, size: n }.into());
    }
    let compiled = CompiledBraid::new(word, birack, STRAND_ASSIGNMENT)?;
    let mut v: Vec<u8> = x.iter().map(|&l| l as u8).collect();
    compiled.run(&mut v);
    Ok(v.into_iter().map(usize::from).collect())
}
