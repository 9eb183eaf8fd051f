use std::fmt;

use super::AlgebraError;

/// A bijection of the label set `{0, .., n-1}`.
///
/// Labels are zero-based in memory. The cycle notation accepted by
/// [`Permutation::parse_cycles`] and produced by `Display` is one-based,
/// matching the usual written form `(1 3)(2 4 5)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from zero-based images, rejecting repeats and
    /// out-of-range values.
    pub fn from_images(images: &[usize]) -> Result<Self, AlgebraError> {
        let n = images.len();
        if n > super::MAX_SIZE {
            return Err(AlgebraError::TooLarge { size: n });
        }
        let mut seen = vec![false; n];
        for (i, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(AlgebraError::LabelOutOfRange { label: y + 1, size: n });
            }
            if seen[y] {
                return Err(AlgebraError::RepeatedImage { image: y + 1, position: i + 1 });
            }
            seen[y] = true;
        }
        Ok(Self { images: images.iter().map(|&y| y as u8).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&y| y as usize)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Self { images: inv }
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self { images: self.images.iter().map(|&y| other.images[y as usize]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses one-based disjoint-cycle notation on `{1..n}`.
    ///
    /// `ι`, `id` and `()` denote the identity. Cycles are juxtaposed, e.g.
    /// `(2 3)(4 5 6)`; a label may appear in at most one cycle.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, AlgebraError> {
        let err = |msg: String| AlgebraError::CycleSyntax { text: text.to_string(), message: msg };
        if n > super::MAX_SIZE {
            return Err(AlgebraError::TooLarge { size: n });
        }
        let trimmed = text.trim();
        if trimmed == "ι" || trimmed == "id" {
            return Ok(Self::identity(n));
        }
        if trimmed.is_empty() {
            return Err(err("empty permutation".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = trimmed;
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| err(format!("expected '(' at {:?}", rest)))?;
            let close = body_start.find(')').ok_or_else(|| err("unclosed cycle".into()))?;
            let body = &body_start[..close];
            rest = body_start[close + 1..].trim_start();

            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let label: usize = tok.parse().map_err(|_| err(format!("bad label {tok:?}")))?;
                if label == 0 || label > n {
                    return Err(AlgebraError::LabelOutOfRange { label, size: n });
                }
                let x = label - 1;
                if used[x] {
                    return Err(err(format!("label {label} appears twice")));
                }
                used[x] = true;
                cycle.push(x);
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images: images.into_iter().map(|y| y as u8).collect() })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("ι");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_rows() {
        let p = Permutation::parse_cycles("(2 3)(4 5 6)", 6).unwrap();
        assert_eq!(p.images().collect::<Vec<_>>(), vec![0, 2, 1, 4, 5, 3]);
        assert_eq!(p.to_string(), "(2 3)(4 5 6)");
    }

    #[test]
    fn identity_spellings() {
        for s in ["ι", "id", " id ", "()"] {
            assert!(Permutation::parse_cycles(s, 4).unwrap().is_identity(), "{s}");
        }
        assert_eq!(Permutation::identity(3).to_string(), "ι");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::parse_cycles("(1 7)", 6).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 6).is_err());
        assert!(Permutation::parse_cycles("(1 2", 6).is_err());
        assert!(Permutation::parse_cycles("1 2", 6).is_err());
        assert!(Permutation::parse_cycles("(0 2)", 6).is_err());
        assert!(Permutation::parse_cycles("", 6).is_err());
    }

    #[test]
    fn from_images_reports_repeat() {
        match Permutation::from_images(&[0, 0, 1]) {
            Err(AlgebraError::RepeatedImage { image: 1, position: 2 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inverse_and_then() {
        let p = Permutation::parse_cycles("(1 2 5)(3 4 6)", 6).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
        let q = Permutation::parse_cycles("(4 6)", 6).unwrap();
        // (1 2 5)(3 4 6) then (4 6): 3 -> 4 -> 6
        assert_eq!(p.then(&q).apply(2), 5);
    }
}
