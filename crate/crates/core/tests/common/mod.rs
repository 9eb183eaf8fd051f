#![allow(dead_code)]

use birack::algebra::{FiniteBirack, Permutation, SwitchMap, Tag};
use birack::braid::{BraidWord, Generator, Polarity};
use birack::catalog::builtins;
use proptest::prelude::*;
use rand::Rng;

pub fn catalog() -> Vec<FiniteBirack> {
    builtins()
}

pub fn classical_word(strands: usize, gens: &[(usize, bool)]) -> BraidWord {
    let gens = gens
        .iter()
        .map(|&(i, pos)| Generator::classical(i, if pos { Polarity::Positive } else { Polarity::Negative }))
        .collect();
    BraidWord::new(strands, gens).unwrap()
}

/// Classical words on 1..=`max_strands` strands with up to `max_len`
/// generators of either sign.
pub fn words(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |r| {
        let len = if r == 1 { 0..=0 } else { 0..=max_len };
        prop::collection::vec((1..r.max(2), any::<bool>()), len).prop_map(move |g| classical_word(r, &g))
    })
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands.max(1));
    }
    let gens: Vec<(usize, bool)> = (0..len).map(|_| (rng.gen_range(1..strands), rng.gen())).collect();
    classical_word(strands, &gens)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(&images).unwrap()
}

/// Random up/down rows; usually not Yang–Baxter, sometimes not fully formed.
pub fn random_rows<R: Rng>(rng: &mut R, n: usize) -> SwitchMap {
    let up = (0..n).map(|_| random_permutation(rng, n)).collect();
    let down = (0..n).map(|_| random_permutation(rng, n)).collect();
    SwitchMap::new(up, down).unwrap()
}

pub fn classical(b: &FiniteBirack) -> &birack::algebra::Component {
    b.component(Tag::Classical).unwrap()
}
