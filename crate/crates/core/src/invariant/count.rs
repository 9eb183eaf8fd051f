use std::sync::atomic::{AtomicU8, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::action::CompiledBraid;
use super::{InvariantError, Options};
use crate::algebra::FiniteBirack;
use crate::braid::BraidWord;

/// A left-edge label vector fixed by the braid action (zero-based labels).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labelling {
    pub vector: Vec<usize>,
}

/// Visits every fixed vector of the compiled word. Workers split the range
/// of the first strand's label; the rest of the vector runs in odometer
/// order with the last strand fastest.
fn fold_fixed<A, I, V, M>(c: &CompiledBraid, track: bool, identity: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u8], u64) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let (n, r) = (c.size, c.strands);
    (0..n)
        .into_par_iter()
        .map(|lead| {
            let mut acc = identity();
            let mut x = vec![0u8; r];
            x[0] = lead as u8;
            let mut v = vec![0u8; r];
            loop {
                v.copy_from_slice(&x);
                let mask = if track {
                    c.run_tracking(&mut v)
                } else {
                    c.run(&mut v);
                    0
                };
                if v == x {
                    visit(&mut acc, &x, mask);
                }
                let mut i = r;
                loop {
                    if i == 1 {
                        return acc;
                    }
                    i -= 1;
                    x[i] += 1;
                    if (x[i] as usize) < n {
                        break;
                    }
                    x[i] = 0;
                }
            }
        })
        .reduce(&identity, &merge)
}

fn compile(word: &BraidWord, birack: &FiniteBirack, opts: &Options) -> Result<CompiledBraid, InvariantError> {
    let compiled = CompiledBraid::new(word, birack, opts.assignment)?;
    opts.check(birack.size(), word.strands())?;
    Ok(compiled)
}

/// Number of label vectors fixed by the braid action, which is the number
/// of labellings of the closure.
pub fn count_labellings(word: &BraidWord, birack: &FiniteBirack) -> Result<u64, InvariantError> {
    count_labellings_with(word, birack, &Options::default())
}

pub fn count_labellings_with(word: &BraidWord, birack: &FiniteBirack, opts: &Options) -> Result<u64, InvariantError> {
    let c = compile(word, birack, opts)?;
    Ok(fold_fixed(&c, false, || 0u64, |acc, _, _| *acc += 1, |a, b| a + b))
}

/// All fixed vectors in odometer order.
pub fn labellings(word: &BraidWord, birack: &FiniteBirack, opts: &Options) -> Result<Vec<Labelling>, InvariantError> {
    let c = compile(word, birack, opts)?;
    Ok(fold_fixed(
        &c,
        false,
        Vec::new,
        |acc, x, _| acc.push(Labelling { vector: x.iter().map(|&l| l as usize).collect() }),
        |mut a, b| {
            a.extend(b);
            a
        },
    ))
}

/// Labellings binned by the size of the smallest sub-birack containing
/// every label on every arc. Entry `i - 1` counts closures of size `i`.
pub fn count_refined(word: &BraidWord, birack: &FiniteBirack, opts: &Options) -> Result<Vec<u64>, InvariantError> {
    let c = compile(word, birack, opts)?;
    let n = birack.size();
    let sizes = ClosureSizes::new(birack);
    Ok(fold_fixed(
        &c,
        true,
        || vec![0u64; n],
        |acc, _, mask| acc[sizes.get(mask) - 1] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ))
}

/// Memoised closure sizes for small label sets; larger sets close directly.
struct ClosureSizes<'a> {
    birack: &'a FiniteBirack,
    memo: Vec<AtomicU8>,
}

const MEMO_LIMIT: usize = 16;

impl<'a> ClosureSizes<'a> {
    fn new(birack: &'a FiniteBirack) -> Self {
        let len = if birack.size() <= MEMO_LIMIT { 1 << birack.size() } else { 0 };
        Self { birack, memo: (0..len).map(|_| AtomicU8::new(0)).collect() }
    }

    fn get(&self, mask: u64) -> usize {
        let Some(slot) = self.memo.get(mask as usize) else {
            return self.birack.closure_mask(mask).count_ones() as usize;
        };
        match slot.load(Ordering::Relaxed) {
            0 => {
                let size = self.birack.closure_mask(mask).count_ones() as u8;
                slot.store(size, Ordering::Relaxed);
                size as usize
            }
            size => size as usize,
        }
    }
}
