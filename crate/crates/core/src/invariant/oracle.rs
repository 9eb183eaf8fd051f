//! Labelling counts by constraint solving over the arcs of the braid
//! diagram, independent of the vector-enumeration path.

use std::collections::BTreeMap;

use super::{InvariantError, Options, StrandAssignment};
use crate::algebra::{FiniteBirack, PairTable, Tag};
use crate::braid::{BraidWord, Polarity};

/// One crossing as the relation `S(u, x) = (v, y)` between arc classes.
struct Crossing {
    tables: usize,
    u: usize,
    x: usize,
    v: usize,
    y: usize,
}

/// `S`, `S⁻¹`, the twitch `T(x, y) = (u, v)` and `T⁻¹` for one tag.
struct Tables {
    s: PairTable,
    s_inv: PairTable,
    t: PairTable,
    t_inv: PairTable,
}

struct Solver {
    crossings: Vec<Crossing>,
    tables: Vec<Tables>,
    touching: Vec<Vec<usize>>,
    value: Vec<Option<u8>>,
    trail: Vec<usize>,
    n: usize,
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

pub fn oracle_count(word: &BraidWord, birack: &FiniteBirack) -> Result<u64, InvariantError> {
    oracle_count_with(word, birack, &Options::default())
}

pub fn oracle_count_with(word: &BraidWord, birack: &FiniteBirack, opts: &Options) -> Result<u64, InvariantError> {
    let r = word.strands();
    let layers = word.len() + 1;
    let arc = |layer: usize, strand: usize| layer * r + strand;

    let mut tag_index: BTreeMap<Tag, usize> = BTreeMap::new();
    let mut tables = Vec::new();
    for tag in word.tags() {
        if tag_index.contains_key(&tag) {
            continue;
        }
        let c = birack.component(tag)?;
        let s = c.switch().clone();
        let s_inv = c.switch_inverse()?.clone();
        let t = s.sideways()?;
        let t_inv = t.inverse()?;
        tag_index.insert(tag, tables.len());
        tables.push(Tables { s, s_inv, t, t_inv });
    }
    opts.check(birack.size(), r)?;

    let mut parent: Vec<usize> = (0..layers * r).collect();
    for (l, g) in word.generators().iter().enumerate() {
        let p = g.position - 1;
        for s in (0..r).filter(|&s| s != p && s != p + 1) {
            union(&mut parent, arc(l, s), arc(l + 1, s));
        }
    }
    for s in 0..r {
        union(&mut parent, arc(0, s), arc(layers - 1, s));
    }
    let mut class_of = vec![usize::MAX; layers * r];
    let mut classes = 0;
    for a in 0..layers * r {
        let root = find(&mut parent, a);
        if class_of[root] == usize::MAX {
            class_of[root] = classes;
            classes += 1;
        }
        class_of[a] = class_of[root];
    }

    let mut crossings = Vec::with_capacity(word.len());
    for (l, g) in word.generators().iter().enumerate() {
        let p = g.position - 1;
        let c = |layer, strand| class_of[arc(layer, strand)];
        // Inputs and outputs of the switch relation, in argument order.
        let (before, after) = ((c(l, p), c(l, p + 1)), (c(l + 1, p), c(l + 1, p + 1)));
        let ((u, x), (v, y)) = match (opts.assignment, g.polarity) {
            (StrandAssignment::Direct, Polarity::Positive) => (before, after),
            (StrandAssignment::Direct, Polarity::Negative) => (after, before),
            (StrandAssignment::Swapped, Polarity::Positive) => ((before.1, before.0), after),
            (StrandAssignment::Swapped, Polarity::Negative) => ((after.1, after.0), before),
        };
        crossings.push(Crossing { tables: tag_index[&g.tag], u, x, v, y });
    }
    let mut touching = vec![Vec::new(); classes];
    for (i, c) in crossings.iter().enumerate() {
        for class in [c.u, c.x, c.v, c.y] {
            if touching[class].last() != Some(&i) {
                touching[class].push(i);
            }
        }
    }
    let mut solver =
        Solver { crossings, tables, touching, value: vec![None; classes], trail: Vec::new(), n: birack.size() };
    Ok(solver.count(0))
}

impl Solver {
    /// Assigns `class = label`; false on conflict.
    fn set(&mut self, class: usize, label: usize, queue: &mut Vec<usize>) -> bool {
        match self.value[class] {
            Some(old) => old as usize == label,
            None => {
                self.value[class] = Some(label as u8);
                self.trail.push(class);
                queue.extend_from_slice(&self.touching[class]);
                true
            }
        }
    }

    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(i) = queue.pop() {
            let c = &self.crossings[i];
            let (cu, cx, cv, cy) = (c.u, c.x, c.v, c.y);
            let t = &self.tables[c.tables];
            let get = |k: usize| self.value[k].map(usize::from);
            let implied = match (get(cu), get(cx), get(cv), get(cy)) {
                (Some(u), Some(x), _, _) => {
                    let (v, y) = t.s.apply(u, x);
                    [(cv, v), (cy, y)]
                }
                (_, _, Some(v), Some(y)) => {
                    let (u, x) = t.s_inv.apply(v, y);
                    [(cu, u), (cx, x)]
                }
                (_, Some(x), _, Some(y)) => {
                    let (u, v) = t.t.apply(x, y);
                    [(cu, u), (cv, v)]
                }
                (Some(u), _, Some(v), _) => {
                    let (x, y) = t.t_inv.apply(u, v);
                    [(cx, x), (cy, y)]
                }
                _ => continue,
            };
            for (class, label) in implied {
                if !self.set(class, label, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for class in self.trail.drain(mark..) {
            self.value[class] = None;
        }
    }

    /// Counts completions of the current partial assignment, branching on
    /// the lowest unassigned class at or after `from`.
    fn count(&mut self, from: usize) -> u64 {
        let Some(class) = (from..self.value.len()).find(|&c| self.value[c].is_none()) else {
            return 1;
        };
        let mut total = 0;
        for label in 0..self.n {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.set(class, label, &mut queue) && self.propagate(queue) {
                total += self.count(class + 1);
            }
            self.undo(mark);
        }
        total
    }
}
