use super::{AlgebraError, PairTable, SwitchMap};

/// Compares `(A × 1)(1 × A)(B × 1)` with `(1 × B)(A × 1)(1 × A)` on every
/// triple, composing left to right as a braid word is read. Returns the
/// first (zero-based) triple where they differ.
///
/// With `a == b` this is the Yang–Baxter equation; with `a != b` it is the
/// condition for `a` to dominate `b`.
pub fn check_yang_baxter(a: &PairTable, b: &PairTable) -> Result<Option<[usize; 3]>, AlgebraError> {
    if a.size() != b.size() {
        return Err(AlgebraError::SizeMismatch { left: a.size(), right: b.size() });
    }
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if lhs(a, b, [x, y, z]) != rhs(a, b, [x, y, z]) {
                    return Ok(Some([x, y, z]));
                }
            }
        }
    }
    Ok(None)
}

fn on_first(f: &PairTable, v: [usize; 3]) -> [usize; 3] {
    let (p, q) = f.apply(v[0], v[1]);
    [p, q, v[2]]
}

fn on_second(f: &PairTable, v: [usize; 3]) -> [usize; 3] {
    let (p, q) = f.apply(v[1], v[2]);
    [v[0], p, q]
}

fn lhs(a: &PairTable, b: &PairTable, v: [usize; 3]) -> [usize; 3] {
    on_first(b, on_second(a, on_first(a, v)))
}

fn rhs(a: &PairTable, b: &PairTable, v: [usize; 3]) -> [usize; 3] {
    on_second(a, on_first(a, on_second(b, v)))
}

/// Which of the three twitch identities failed, and where.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    /// 1: `z_{x y_x} = z_{y x^y}`, 2: `x^{z y^z} = x^{y z_y}`,
    /// 3: `(y_x)^{z_x} = (y^z)_{x^z}`.
    pub identity: u8,
    pub triple: [usize; 3],
}

/// The three Yang–Baxter identities written in the auxiliary operations of
/// a twitch `t`. For a formed twitch these hold exactly when the switch it
/// determines satisfies [`check_yang_baxter`] with itself.
pub fn check_yang_baxter_identities(t: &SwitchMap) -> Option<IdentityFailure> {
    let n = t.size();
    let up = |a, b| t.up(a, b);
    let dn = |a, b| t.down(a, b);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let triple = [x, y, z];
                if dn(dn(z, x), dn(y, x)) != dn(dn(z, y), up(x, y)) {
                    return Some(IdentityFailure { identity: 1, triple });
                }
                if up(up(x, z), up(y, z)) != up(up(x, y), dn(z, y)) {
                    return Some(IdentityFailure { identity: 2, triple });
                }
                if up(dn(y, x), dn(z, x)) != dn(up(y, z), up(x, z)) {
                    return Some(IdentityFailure { identity: 3, triple });
                }
            }
        }
    }
    None
}

/// A failed commuting condition with the (zero-based) pair where it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommuteFailure {
    /// `S_a S_b ≠ S_b S_a`
    Switches((usize, usize)),
    /// `T_a T̄_b ≠ T_b T̄_a`
    TwitchBar((usize, usize)),
    /// `T̄_a T_b ≠ T̄_b T_a`
    BarTwitch((usize, usize)),
}

/// Conditions for an `R4(a, b)` move between switches `a` and `b`: the
/// switches commute, and so do their twitches in the two mixed forms.
/// Both switches must be fully formed.
pub fn check_commute(a: &PairTable, b: &PairTable) -> Result<Option<CommuteFailure>, AlgebraError> {
    if a.size() != b.size() {
        return Err(AlgebraError::SizeMismatch { left: a.size(), right: b.size() });
    }
    a.inverse()?;
    b.inverse()?;
    if let Some(p) = first_difference(&a.then(b), &b.then(a)) {
        return Ok(Some(CommuteFailure::Switches(p)));
    }
    let ta = a.sideways()?;
    let tb = b.sideways()?;
    let ta_bar = ta.inverse()?;
    let tb_bar = tb.inverse()?;
    if let Some(p) = first_difference(&ta.then(&tb_bar), &tb.then(&ta_bar)) {
        return Ok(Some(CommuteFailure::TwitchBar(p)));
    }
    if let Some(p) = first_difference(&ta_bar.then(&tb), &tb_bar.then(&ta)) {
        return Ok(Some(CommuteFailure::BarTwitch(p)));
    }
    Ok(None)
}

fn first_difference(f: &PairTable, g: &PairTable) -> Option<(usize, usize)> {
    let n = f.size();
    (0..n * n).map(|i| (i / n, i % n)).find(|&(x, y)| f.apply(x, y) != g.apply(x, y))
}
