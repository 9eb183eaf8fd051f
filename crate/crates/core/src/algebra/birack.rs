use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{check_yang_baxter, AlgebraError, Formedness, PairTable, Permutation, SwitchMap, Tag};

/// How the stored up/down rows of a component are read.
///
/// The rows define a square map `F(x, y) = (y_x, x^y)`. Read as a
/// [`RowReading::Twitch`], `F` is the twitch `T` and the switch acting on
/// braid strands is the companion determined by `T`. Read as a
/// [`RowReading::Switch`], `F` acts on strands directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowReading {
    Switch,
    Twitch,
}

/// Reading under which the published catalog rows satisfy every birack
/// axiom. Under [`RowReading::Switch`] the `BR6_125` rows fail Yang–Baxter.
pub const ROW_READING: RowReading = RowReading::Twitch;

/// One crossing type's structure: the stored rows plus lazily derived
/// switch, twitch and inverse tables.
pub struct Component {
    rows: SwitchMap,
    reading: RowReading,
    switch: OnceLock<PairTable>,
    twitch: OnceLock<PairTable>,
    switch_inverse: OnceLock<Result<PairTable, AlgebraError>>,
    self_yang_baxter: OnceLock<Option<[usize; 3]>>,
}

impl Clone for Component {
    fn clone(&self) -> Self {
        Self::new(self.rows.clone(), self.reading)
    }
}

impl std::fmt::Debug for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Component").field("rows", &self.rows).field("reading", &self.reading).finish()
    }
}

impl Component {
    fn new(rows: SwitchMap, reading: RowReading) -> Self {
        Self {
            rows,
            reading,
            switch: OnceLock::new(),
            twitch: OnceLock::new(),
            switch_inverse: OnceLock::new(),
            self_yang_baxter: OnceLock::new(),
        }
    }

    pub fn rows(&self) -> &SwitchMap {
        &self.rows
    }

    pub fn reading(&self) -> RowReading {
        self.reading
    }

    /// The map applied at a positive crossing between adjacent strands.
    pub fn switch(&self) -> &PairTable {
        self.switch.get_or_init(|| match self.reading {
            RowReading::Switch => self.rows.table().clone(),
            RowReading::Twitch => self.rows.twitch_to_switch(),
        })
    }

    pub fn twitch(&self) -> &PairTable {
        self.twitch.get_or_init(|| match self.reading {
            RowReading::Switch => self.rows.sideways(),
            RowReading::Twitch => self.rows.table().clone(),
        })
    }

    /// The map applied at a negative crossing.
    pub fn switch_inverse(&self) -> Result<&PairTable, AlgebraError> {
        self.switch_inverse.get_or_init(|| self.switch().inverse()).as_ref().map_err(Clone::clone)
    }

    /// The twitch in row form, when its auxiliary maps are bijections.
    pub fn twitch_rows(&self) -> Result<SwitchMap, AlgebraError> {
        match self.reading {
            RowReading::Twitch => Ok(self.rows.clone()),
            RowReading::Switch => self.twitch().to_switch_map(),
        }
    }

    /// Formedness of the stored rows. Switch and twitch are fully formed
    /// together, so this answers for both.
    pub fn formedness(&self) -> &Formedness {
        self.rows.formedness()
    }

    pub fn is_fully_formed(&self) -> bool {
        self.rows.is_fully_formed()
    }

    /// First triple where the switch fails Yang–Baxter with itself.
    pub fn yang_baxter_witness(&self) -> Option<[usize; 3]> {
        *self.self_yang_baxter.get_or_init(|| check_yang_baxter(self.switch(), self.switch()).expect("same size"))
    }

    /// The biquandle condition: the twitch fixes the diagonal. Returns a
    /// label where it does not.
    pub fn biquandle_witness(&self) -> Option<usize> {
        let t = self.twitch();
        (0..t.size()).find(|&x| t.apply(x, x) != (x, x))
    }

    /// Number of labels `x` with `T(x, x) = (x, x)`.
    pub fn diagonal_fixed_count(&self) -> usize {
        let t = self.twitch();
        (0..t.size()).filter(|&x| t.apply(x, x) == (x, x)).count()
    }
}

/// A finite generalised birack: one component per crossing type, all on the
/// same label set. Negative crossings use the inverse switch.
#[derive(Clone, Debug)]
pub struct FiniteBirack {
    name: Option<String>,
    size: usize,
    components: BTreeMap<Tag, Component>,
}

impl PartialEq for FiniteBirack {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.size == other.size
            && self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|((ta, a), (tb, b))| ta == tb && a.rows == b.rows && a.reading == b.reading)
    }
}

impl FiniteBirack {
    pub fn new(
        name: Option<String>,
        components: impl IntoIterator<Item = (Tag, SwitchMap)>,
    ) -> Result<Self, AlgebraError> {
        let mut map = BTreeMap::new();
        let mut size = None;
        for (tag, rows) in components {
            match size {
                None => size = Some(rows.size()),
                Some(n) if n != rows.size() => return Err(AlgebraError::SizeMismatch { left: n, right: rows.size() }),
                _ => {}
            }
            if map.insert(tag, Component::new(rows, ROW_READING)).is_some() {
                return Err(AlgebraError::DuplicateTag(tag));
            }
        }
        let size = size.ok_or(AlgebraError::EmptyLabelSet)?;
        Ok(Self { name, size, components: map })
    }

    /// Single-component birack for the classical crossing type.
    pub fn classical(name: Option<String>, rows: SwitchMap) -> Self {
        Self::new(name, [(Tag::Classical, rows)]).expect("one component")
    }

    /// Re-reads every component's rows under `reading`.
    pub fn with_reading(self, reading: RowReading) -> Self {
        let components = self.components.into_iter().map(|(t, c)| (t, Component::new(c.rows, reading))).collect();
        Self { components, ..self }
    }

    pub fn with_name(self, name: Option<String>) -> Self {
        Self { name, ..self }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn tags(&self) -> impl Iterator<Item = Tag> + '_ {
        self.components.keys().copied()
    }

    pub fn components(&self) -> impl Iterator<Item = (Tag, &Component)> {
        self.components.iter().map(|(t, c)| (*t, c))
    }

    pub fn component(&self, tag: Tag) -> Result<&Component, AlgebraError> {
        self.components.get(&tag).ok_or(AlgebraError::MissingTag(tag))
    }

    /// `a`-biquandle status per crossing type.
    pub fn is_biquandle(&self, tag: Tag) -> Result<bool, AlgebraError> {
        Ok(self.component(tag)?.biquandle_witness().is_none())
    }

    /// Smallest subset containing `labels` (zero-based) and closed under
    /// every component's up and down actions.
    pub fn subbirack_closure(&self, labels: &[usize]) -> Result<Vec<usize>, AlgebraError> {
        if labels.is_empty() {
            return Err(AlgebraError::EmptySubset);
        }
        let mut mask = 0u64;
        for &x in labels {
            if x >= self.size {
                return Err(AlgebraError::LabelOutOfRange { label: x + 1, size: self.size });
            }
            mask |= 1 << x;
        }
        Ok(mask_to_labels(self.closure_mask(mask)))
    }

    /// Closure on bitmask label sets.
    pub fn closure_mask(&self, mut mask: u64) -> u64 {
        loop {
            let mut next = mask;
            for c in self.components.values() {
                for rows in [c.rows.up_rows(), c.rows.down_rows()] {
                    for x in iter_mask(mask) {
                        let row = rows[x].raw();
                        for y in iter_mask(mask) {
                            next |= 1 << row[y];
                        }
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    pub fn is_closed(&self, mask: u64) -> bool {
        mask != 0 && self.closure_mask(mask) == mask
    }

    /// All non-empty sub-biracks, sorted by size then by label mask.
    pub fn sub_biracks(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<u64> = Vec::new();
        let mut frontier: Vec<u64> = (0..self.size).map(|x| self.closure_mask(1 << x)).collect();
        while let Some(m) = frontier.pop() {
            if found.contains(&m) {
                continue;
            }
            found.push(m);
            for x in 0..self.size {
                if m & (1 << x) == 0 {
                    frontier.push(self.closure_mask(m | (1 << x)));
                }
            }
        }
        found.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
        found.into_iter().map(mask_to_labels).collect()
    }

    /// The stabilization map `W = τ ∘ T` for a crossing type.
    pub fn stabilization_map(&self, tag: Tag) -> Result<PairTable, AlgebraError> {
        let t = self.fully_formed_component(tag)?.twitch();
        Ok(t.then(&PairTable::swap(self.size)))
    }

    /// `W⁻¹ = T⁻¹ ∘ τ`.
    pub fn stabilization_map_inverse(&self, tag: Tag) -> Result<PairTable, AlgebraError> {
        let t = self.fully_formed_component(tag)?.twitch();
        Ok(PairTable::swap(self.size).then(&t.inverse()?))
    }

    /// Smallest `k ≥ 1` with `W^k(Δ) = Δ` as a set.
    pub fn stabilization_period(&self, tag: Tag) -> Result<usize, AlgebraError> {
        let w = self.stabilization_map(tag)?;
        let n = self.size;
        let diagonal: Vec<bool> = (0..n * n).map(|i| i / n == i % n).collect();
        let mut current: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
        let mut k = 0;
        loop {
            for p in current.iter_mut() {
                *p = w.apply(p.0, p.1);
            }
            k += 1;
            if current.iter().all(|&(a, b)| diagonal[a * n + b]) {
                return Ok(k);
            }
        }
    }

    /// Cycle length of every pair under `W`, indexed by `x * n + y`.
    pub fn pair_periods(&self, tag: Tag) -> Result<Vec<usize>, AlgebraError> {
        let w = self.stabilization_map(tag)?;
        let n = self.size;
        let mut periods = vec![0usize; n * n];
        for start in 0..n * n {
            if periods[start] != 0 {
                continue;
            }
            let mut orbit = vec![start];
            let (mut a, mut b) = w.apply(start / n, start % n);
            while a * n + b != start {
                orbit.push(a * n + b);
                (a, b) = w.apply(a, b);
            }
            for &i in &orbit {
                periods[i] = orbit.len();
            }
        }
        Ok(periods)
    }

    /// Relabels every component through `sigma`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        let components =
            self.components.iter().map(|(t, c)| (*t, Component::new(c.rows.relabel(sigma), c.reading))).collect();
        Self { name: self.name.clone(), size: self.size, components }
    }

    fn fully_formed_component(&self, tag: Tag) -> Result<&Component, AlgebraError> {
        let c = self.component(tag)?;
        if let Formedness::FormedOnly { collision } = c.formedness() {
            return Err(AlgebraError::NotFullyFormed { collision: super::square::one_based(*collision) });
        }
        Ok(c)
    }
}

pub(crate) fn iter_mask(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn mask_to_labels(mask: u64) -> Vec<usize> {
    iter_mask(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(strs: &[&str], n: usize) -> Vec<Permutation> {
        strs.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect()
    }

    fn r5_40() -> FiniteBirack {
        let s =
            SwitchMap::new(rows(&["(1 3)", "(4 5)", "(1 3)", "(2 5)", "(2 4)"], 5), vec![Permutation::identity(5); 5])
                .unwrap();
        FiniteBirack::classical(Some("R5_40".into()), s)
    }

    #[test]
    fn closure_examples() {
        let b = r5_40();
        assert_eq!(b.subbirack_closure(&[1]).unwrap(), vec![1]);
        assert_eq!(b.subbirack_closure(&[0]).unwrap(), vec![0, 2]);
        assert_eq!(b.subbirack_closure(&[0, 1, 2, 3, 4]).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(b.subbirack_closure(&[]).is_err());
        assert!(b.subbirack_closure(&[5]).is_err());
    }

    #[test]
    fn closure_satisfies_row_column_condition() {
        let b = r5_40();
        let c = b.component(Tag::Classical).unwrap().rows();
        for start in 0..5 {
            let a = b.subbirack_closure(&[start]).unwrap();
            for &x in &a {
                for &y in &a {
                    assert!(a.contains(&c.up_rows()[x].apply(y)));
                    assert!(a.contains(&c.down_rows()[x].apply(y)));
                }
            }
        }
    }

    #[test]
    fn period_of_printed_rack() {
        assert_eq!(r5_40().stabilization_period(Tag::Classical).unwrap(), 2);
    }

    #[test]
    fn identity_rows_have_period_one() {
        let b = FiniteBirack::classical(None, SwitchMap::identity_rows(4));
        assert_eq!(b.stabilization_period(Tag::Classical).unwrap(), 1);
    }

    #[test]
    fn size_one_is_trivial() {
        let b = FiniteBirack::classical(None, SwitchMap::identity_rows(1));
        let c = b.component(Tag::Classical).unwrap();
        assert!(c.is_fully_formed());
        assert_eq!(c.yang_baxter_witness(), None);
        assert!(b.is_biquandle(Tag::Classical).unwrap());
        assert_eq!(b.stabilization_period(Tag::Classical).unwrap(), 1);
        assert_eq!(b.sub_biracks(), vec![vec![0]]);
    }

    #[test]
    fn stabilization_inverse() {
        let b = r5_40();
        let w = b.stabilization_map(Tag::Classical).unwrap();
        let wi = b.stabilization_map_inverse(Tag::Classical).unwrap();
        assert_eq!(w.then(&wi), PairTable::identity(5));
    }

    #[test]
    fn rejects_mixed_sizes_and_duplicates() {
        let a = SwitchMap::identity_rows(2);
        let b = SwitchMap::identity_rows(3);
        assert!(FiniteBirack::new(None, [(Tag::Classical, a.clone()), (Tag::Virtual, b)]).is_err());
        assert!(FiniteBirack::new(None, [(Tag::Classical, a.clone()), (Tag::Classical, a)]).is_err());
        assert!(FiniteBirack::new(None, []).is_err());
    }

    #[test]
    fn biquandle_is_per_tag() {
        let b = FiniteBirack::new(
            None,
            [
                (Tag::Classical, r5_40().component(Tag::Classical).unwrap().rows().clone()),
                (Tag::Virtual, SwitchMap::identity_rows(5)),
            ],
        )
        .unwrap();
        assert!(!b.is_biquandle(Tag::Classical).unwrap());
        assert!(b.is_biquandle(Tag::Virtual).unwrap());
        assert_eq!(r5_40().component(Tag::Classical).unwrap().biquandle_witness(), Some(0));
    }
}
