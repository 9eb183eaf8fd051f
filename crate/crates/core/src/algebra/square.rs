//! Maps `X² → X²` in two forms: explicit tables, and the up/down
//! auxiliary rows of a formed map.
//!
//! Throughout, a square map is written `F(x, y) = (y_x, x^y)` where
//! `y_x = down[x](y)` and `x^y = up[y](x)`.

use std::sync::OnceLock;

use super::{AlgebraError, Permutation};

/// Outcome of a formedness check, carrying a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formedness {
    FullyFormed,
    /// Every auxiliary map is a bijection but the pair map is not.
    /// The witness is two distinct pairs with the same image.
    FormedOnly {
        collision: [(usize, usize); 2],
    },
    /// Some auxiliary map is not a bijection.
    NotFormed {
        row: AuxRow,
    },
}

impl Formedness {
    pub fn is_formed(&self) -> bool {
        !matches!(self, Formedness::NotFormed { .. })
    }

    pub fn is_fully_formed(&self) -> bool {
        matches!(self, Formedness::FullyFormed)
    }
}

/// Names one auxiliary function: `Down(x)` is `y ↦ y_x`, `Up(y)` is `x ↦ x^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxRow {
    Down(usize),
    Up(usize),
}

/// An arbitrary map `X² → X²` stored as an `n²` table indexed by `x * n + y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairTable {
    size: usize,
    entries: Vec<(u8, u8)>,
}

impl std::fmt::Debug for PairTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PairTable").field("size", &self.size).finish_non_exhaustive()
    }
}

impl PairTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        assert!(size <= super::MAX_SIZE);
        let mut entries = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let (a, b) = f(x, y);
                assert!(a < size && b < size, "image ({a}, {b}) out of range");
                entries.push((a as u8, b as u8));
            }
        }
        Self { size, entries }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |x, y| (x, y))
    }

    /// The swap `τ(x, y) = (y, x)`.
    pub fn swap(size: usize) -> Self {
        Self::from_fn(size, |x, y| (y, x))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let (a, b) = self.entries[x * self.size + y];
        (a as usize, b as usize)
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[(u8, u8)] {
        &self.entries
    }

    /// Returns a pair of distinct arguments with equal images, if any.
    pub fn collision(&self) -> Option<[(usize, usize); 2]> {
        let n = self.size;
        let mut first: Vec<Option<usize>> = vec![None; n * n];
        for (i, &(a, b)) in self.entries.iter().enumerate() {
            let key = a as usize * n + b as usize;
            if let Some(j) = first[key] {
                return Some([(j / n, j % n), (i / n, i % n)]);
            }
            first[key] = Some(i);
        }
        None
    }

    pub fn is_bijection(&self) -> bool {
        self.collision().is_none()
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if let Some(pairs) = self.collision() {
            return Err(AlgebraError::NotFullyFormed { collision: one_based(pairs) });
        }
        let n = self.size;
        let mut entries = vec![(0u8, 0u8); n * n];
        for (i, &(a, b)) in self.entries.iter().enumerate() {
            entries[a as usize * n + b as usize] = ((i / n) as u8, (i % n) as u8);
        }
        Ok(Self { size: n, entries })
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, |x, y| {
            let (a, b) = self.apply(x, y);
            other.apply(a, b)
        })
    }

    /// Auxiliary row as a function table: `Down(x)` gives `y ↦ F(x, y).0`,
    /// `Up(y)` gives `x ↦ F(x, y).1`.
    pub fn aux_row(&self, row: AuxRow) -> Vec<usize> {
        match row {
            AuxRow::Down(x) => (0..self.size).map(|y| self.apply(x, y).0).collect(),
            AuxRow::Up(y) => (0..self.size).map(|x| self.apply(x, y).1).collect(),
        }
    }

    pub fn check_formed(&self) -> Formedness {
        let n = self.size;
        for i in 0..n {
            for row in [AuxRow::Down(i), AuxRow::Up(i)] {
                let images = self.aux_row(row);
                let mut seen = vec![false; n];
                for y in images {
                    if std::mem::replace(&mut seen[y], true) {
                        return Formedness::NotFormed { row };
                    }
                }
            }
        }
        match self.collision() {
            None => Formedness::FullyFormed,
            Some(collision) => Formedness::FormedOnly { collision },
        }
    }

    /// The companion map `G` with `F(u, x) = (v, y) ⟺ G(x, y) = (u, v)`.
    ///
    /// Well defined exactly when every up row of `F` is a bijection; the
    /// error names a target pair that receives no preimage or two.
    pub fn sideways(&self) -> Result<Self, AlgebraError> {
        let n = self.size;
        let mut entries: Vec<Option<(u8, u8)>> = vec![None; n * n];
        for u in 0..n {
            for x in 0..n {
                let (v, y) = self.apply(u, x);
                let slot = &mut entries[x * n + y];
                if slot.is_some() {
                    return Err(AlgebraError::SidewaysUndefined { pair: (x + 1, y + 1), images: 2 });
                }
                *slot = Some((u as u8, v as u8));
            }
        }
        collect_total(n, entries)
    }

    /// Inverse of [`PairTable::sideways`]: given `G`, the map `F` with
    /// `F(u, x) = (v, y) ⟺ G(x, y) = (u, v)`.
    pub fn unsideways(&self) -> Result<Self, AlgebraError> {
        let n = self.size;
        let mut entries: Vec<Option<(u8, u8)>> = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                let slot = &mut entries[u * n + x];
                if slot.is_some() {
                    return Err(AlgebraError::SidewaysUndefined { pair: (u + 1, x + 1), images: 2 });
                }
                *slot = Some((v as u8, y as u8));
            }
        }
        collect_total(n, entries)
    }

    /// Reads the table as a formed map in row form.
    pub fn to_switch_map(&self) -> Result<SwitchMap, AlgebraError> {
        if let Formedness::NotFormed { row } = self.check_formed() {
            return Err(AlgebraError::NotFormed { row: one_based_row(row) });
        }
        let n = self.size;
        let rows = |f: &dyn Fn(usize) -> AuxRow| -> Vec<Permutation> {
            (0..n).map(|i| Permutation::from_images(&self.aux_row(f(i))).expect("formed rows")).collect()
        };
        let down = rows(&AuxRow::Down);
        let up = rows(&AuxRow::Up);
        Ok(SwitchMap::from_parts(up, down))
    }
}

fn collect_total(n: usize, entries: Vec<Option<(u8, u8)>>) -> Result<PairTable, AlgebraError> {
    let mut out = Vec::with_capacity(n * n);
    for (i, e) in entries.into_iter().enumerate() {
        match e {
            Some(p) => out.push(p),
            None => return Err(AlgebraError::SidewaysUndefined { pair: (i / n + 1, i % n + 1), images: 0 }),
        }
    }
    Ok(PairTable { size: n, entries: out })
}

pub(crate) fn one_based(pairs: [(usize, usize); 2]) -> [(usize, usize); 2] {
    pairs.map(|(a, b)| (a + 1, b + 1))
}

pub(crate) fn one_based_row(row: AuxRow) -> AuxRow {
    match row {
        AuxRow::Down(x) => AuxRow::Down(x + 1),
        AuxRow::Up(y) => AuxRow::Up(y + 1),
    }
}

/// A formed square map held as its auxiliary rows.
///
/// `up[x]` is `y ↦ y^x` and `down[x]` is `y ↦ y_x`, so the map is
/// `F(x, y) = (down[x](y), up[y](x))`. Rows are permutations by
/// construction; whether the pair map is a bijection is computed on demand
/// and cached.
pub struct SwitchMap {
    up: Vec<Permutation>,
    down: Vec<Permutation>,
    table: OnceLock<PairTable>,
    formedness: OnceLock<Formedness>,
}

impl Clone for SwitchMap {
    fn clone(&self) -> Self {
        Self::from_parts(self.up.clone(), self.down.clone())
    }
}

impl PartialEq for SwitchMap {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up && self.down == other.down
    }
}

impl Eq for SwitchMap {}

impl std::fmt::Debug for SwitchMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SwitchMap").field("up", &self.up).field("down", &self.down).finish()
    }
}

impl SwitchMap {
    pub fn new(up: Vec<Permutation>, down: Vec<Permutation>) -> Result<Self, AlgebraError> {
        let n = up.len();
        if n == 0 {
            return Err(AlgebraError::EmptyLabelSet);
        }
        if down.len() != n {
            return Err(AlgebraError::SizeMismatch { left: n, right: down.len() });
        }
        if let Some(p) = up.iter().chain(&down).find(|p| p.size() != n) {
            return Err(AlgebraError::SizeMismatch { left: n, right: p.size() });
        }
        Ok(Self::from_parts(up, down))
    }

    /// Builds from zero-based row tables, validating that every row is a
    /// permutation.
    pub fn from_rows(up: &[Vec<usize>], down: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = up.len();
        let convert = |rows: &[Vec<usize>], kind: fn(usize) -> AuxRow| {
            rows.iter()
                .enumerate()
                .map(|(i, r)| {
                    if r.len() != n {
                        return Err(AlgebraError::SizeMismatch { left: n, right: r.len() });
                    }
                    Permutation::from_images(r).map_err(|_| AlgebraError::NotFormed { row: kind(i + 1) })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        // `up[x]` indexes by the acting label, i.e. it is the auxiliary `Up(x)`.
        let up = convert(up, AuxRow::Up)?;
        let down = convert(down, AuxRow::Down)?;
        Self::new(up, down)
    }

    pub(crate) fn from_parts(up: Vec<Permutation>, down: Vec<Permutation>) -> Self {
        Self { up, down, table: OnceLock::new(), formedness: OnceLock::new() }
    }

    pub fn identity_rows(n: usize) -> Self {
        Self::from_parts(vec![Permutation::identity(n); n], vec![Permutation::identity(n); n])
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn up_rows(&self) -> &[Permutation] {
        &self.up
    }

    pub fn down_rows(&self) -> &[Permutation] {
        &self.down
    }

    /// `x^y`
    #[inline]
    pub fn up(&self, x: usize, y: usize) -> usize {
        self.up[y].apply(x)
    }

    /// `x_y`
    #[inline]
    pub fn down(&self, x: usize, y: usize) -> usize {
        self.down[y].apply(x)
    }

    /// `x^ȳ`, the inverse up action.
    pub fn up_bar(&self, x: usize, y: usize) -> usize {
        self.up[y].inverse().apply(x)
    }

    /// `x_ȳ`, the inverse down action.
    pub fn down_bar(&self, x: usize, y: usize) -> usize {
        self.down[y].inverse().apply(x)
    }

    /// The crossing relation `(z, w) = (y_x, x^y)`.
    pub fn apply(&self, x: usize, y: usize) -> Result<(usize, usize), AlgebraError> {
        let n = self.size();
        for l in [x, y] {
            if l >= n {
                return Err(AlgebraError::LabelOutOfRange { label: l + 1, size: n });
            }
        }
        Ok((self.down(y, x), self.up(x, y)))
    }

    pub fn table(&self) -> &PairTable {
        self.table.get_or_init(|| PairTable::from_fn(self.size(), |x, y| (self.down(y, x), self.up(x, y))))
    }

    pub fn formedness(&self) -> &Formedness {
        self.formedness.get_or_init(|| self.table().check_formed())
    }

    pub fn is_fully_formed(&self) -> bool {
        self.formedness().is_fully_formed()
    }

    /// Inverse of the pair map. Fails with a colliding pair when the map is
    /// only formed.
    pub fn inverse(&self) -> Result<PairTable, AlgebraError> {
        self.table().inverse()
    }

    /// The sideways companion; always a bijection for a formed map.
    pub fn sideways(&self) -> PairTable {
        self.table().sideways().expect("formed maps have a total sideways map")
    }

    /// Reads `self` as a twitch and returns the switch it determines.
    /// Always a bijection for a formed twitch.
    pub fn twitch_to_switch(&self) -> PairTable {
        self.table().unsideways().expect("formed maps have a total companion")
    }

    /// `x^y = y ⟺ y_x = x` for all `x, y`. Returns the first failing pair.
    pub fn biquandle_witness(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                if (self.up(x, y) == y) != (self.down(y, x) == x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `x^x = x_x` for all `x`, i.e. the map fixes the diagonal. Returns
    /// the first failing label.
    pub fn diagonal_witness(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.up(x, x) != self.down(x, x))
    }

    /// Relabels through `sigma`: the result satisfies
    /// `F'(σx, σy) = (σ × σ) F(x, y)`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        let n = self.size();
        let inv = sigma.inverse();
        let conj = |rows: &[Permutation]| -> Vec<Permutation> {
            (0..n)
                .map(|a| {
                    let row = &rows[inv.apply(a)];
                    let images: Vec<usize> = (0..n).map(|b| sigma.apply(row.apply(inv.apply(b)))).collect();
                    Permutation::from_images(&images).expect("conjugate of a permutation")
                })
                .collect()
        };
        Self::from_parts(conj(&self.up), conj(&self.down))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(strs: &[&str], n: usize) -> Vec<Permutation> {
        strs.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect()
    }

    fn r5_40() -> SwitchMap {
        SwitchMap::new(rows(&["(1 3)", "(4 5)", "(1 3)", "(2 5)", "(2 4)"], 5), vec![Permutation::identity(5); 5])
            .unwrap()
    }

    #[test]
    fn crossing_relation_on_printed_rack() {
        // D = ι so z = y; row 2 of U fixes 1.
        assert_eq!(r5_40().apply(0, 1).unwrap(), (1, 0));
        assert!(r5_40().apply(5, 0).is_err());
    }

    #[test]
    fn identity_rows_swap() {
        let s = SwitchMap::identity_rows(4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(s.apply(x, y).unwrap(), (y, x));
            }
        }
        assert_eq!(s.inverse().unwrap(), PairTable::swap(4));
        assert!(s.biquandle_witness().is_none());
    }

    #[test]
    fn inverse_of_computed_image() {
        let inv = r5_40().inverse().unwrap();
        assert_eq!(inv.apply(1, 0), (0, 1));
    }

    #[test]
    fn repeated_row_entry_is_not_formed() {
        let up = vec![vec![0, 0, 1], vec![0, 1, 2], vec![0, 1, 2]];
        let down = vec![vec![0, 1, 2]; 3];
        match SwitchMap::from_rows(&up, &down) {
            Err(AlgebraError::NotFormed { row: AuxRow::Up(1) }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn formed_but_not_fully_formed() {
        // On Z_3 with x^y = x + 1 and y_x = y + x: F(x, y) = (x + y, x + 1).
        let n = 3;
        let up: Vec<Vec<usize>> = (0..n).map(|_| (0..n).map(|x| (x + 1) % n).collect()).collect();
        let down: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (y + x) % n).collect()).collect();
        let s = SwitchMap::from_rows(&up, &down).unwrap();
        assert!(s.is_fully_formed());

        let up: Vec<Vec<usize>> = (0..n).map(|y| (0..n).map(|x| (x + y) % n).collect()).collect();
        let s = SwitchMap::from_rows(&up, &down).unwrap();
        // F(x, y) = (x + y, x + y): collides.
        match s.formedness() {
            Formedness::FormedOnly { collision } => {
                let [p, q] = *collision;
                assert_ne!(p, q);
                assert_eq!(s.table().apply(p.0, p.1), s.table().apply(q.0, q.1));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(s.inverse(), Err(AlgebraError::NotFullyFormed { .. })));
    }

    #[test]
    fn sideways_round_trip_and_defining_relation() {
        let s = r5_40();
        let t = s.sideways();
        let n = s.size();
        for u in 0..n {
            for x in 0..n {
                let (v, y) = s.table().apply(u, x);
                assert_eq!(t.apply(x, y), (u, v));
            }
        }
        assert_eq!(&t.unsideways().unwrap(), s.table());
    }

    #[test]
    fn twitch_with_collapsing_differences_gives_unformed_switch() {
        // T(x, y) = (y - x, x - y) on Z_5: formed, not invertible. The switch
        // it determines is S(u, x) = (-u, x + u): invertible but not formed.
        let n = 5;
        let down: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (y + n - x) % n).collect()).collect();
        let up: Vec<Vec<usize>> = (0..n).map(|y| (0..n).map(|x| (x + n - y) % n).collect()).collect();
        let t = SwitchMap::from_rows(&up, &down).unwrap();
        assert!(!t.is_fully_formed());
        let s = t.twitch_to_switch();
        assert!(s.is_bijection());
        for u in 0..n {
            for x in 0..n {
                assert_eq!(s.apply(u, x), ((n - u) % n, (x + u) % n));
            }
        }
        assert!(matches!(s.to_switch_map(), Err(AlgebraError::NotFormed { .. })));
    }

    #[test]
    fn relabel_conjugates() {
        let s = r5_40();
        let sigma = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        let r = s.relabel(&sigma);
        for x in 0..5 {
            for y in 0..5 {
                let (a, b) = s.table().apply(x, y);
                assert_eq!(r.table().apply(sigma.apply(x), sigma.apply(y)), (sigma.apply(a), sigma.apply(b)));
            }
        }
    }
}
