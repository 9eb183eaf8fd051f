use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{
    check_commute, check_yang_baxter, check_yang_baxter_identities, AlgebraError, FiniteBirack, Formedness, PairTable,
    Tag,
};

/// A permitted `R3(a, a, b)` move: `over` (possibly with inverted polarity)
/// dominates `under`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dominance {
    pub over: Tag,
    pub over_inverse: bool,
    pub under: Tag,
}

impl Dominance {
    pub const fn new(over: Tag, under: Tag) -> Self {
        Self { over, over_inverse: false, under }
    }

    pub const fn inverse(over: Tag, under: Tag) -> Self {
        Self { over, over_inverse: true, under }
    }
}

impl std::fmt::Display for Dominance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bar = if self.over_inverse { "\u{304}" } else { "" };
        write!(f, "R3({o}{bar},{o}{bar},{u})", o = self.over, u = self.under)
    }
}

/// Which moves a generalised knot theory permits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryDescriptor {
    pub name: String,
    pub crossing_types: BTreeSet<Tag>,
    /// Crossing types permitting `R2`.
    pub regular: BTreeSet<Tag>,
    pub r1_permitted: BTreeSet<Tag>,
    pub dominance: BTreeSet<Dominance>,
    /// Unordered pairs permitting `R4`.
    pub commuting: BTreeSet<(Tag, Tag)>,
}

impl TheoryDescriptor {
    pub const NAMES: [&'static str; 4] = ["classical", "rotational", "singular", "singular-rotational"];

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "classical" => Some(Self::classical()),
            "rotational" => Some(Self::rotational()),
            "singular" => Some(Self::singular()),
            "singular-rotational" => Some(Self::singular_rotational()),
            _ => None,
        }
    }

    /// Classical knots: `R1(s)`, `R2(s)`, `R3(s,s,s)`.
    pub fn classical() -> Self {
        use Tag::Classical as C;
        Self {
            name: "classical".into(),
            crossing_types: [C].into(),
            regular: [C].into(),
            r1_permitted: [C].into(),
            dominance: [Dominance::new(C, C)].into(),
            commuting: BTreeSet::new(),
        }
    }

    /// Rotational virtual knots: everything of virtual knot theory except
    /// the virtual `R1`.
    pub fn rotational() -> Self {
        use Tag::{Classical as C, Virtual as V};
        Self {
            name: "rotational".into(),
            crossing_types: [C, V].into(),
            regular: [C, V].into(),
            r1_permitted: [C].into(),
            dominance: [Dominance::new(C, C), Dominance::new(V, V), Dominance::new(V, C)].into(),
            commuting: BTreeSet::new(),
        }
    }

    /// Singular variety of `base`: adds `q` with `R2(q)`, and for every other
    /// type `a` the moves `R3(a,a,q)`, `R3(ā,ā,q)` and `R4(a,q)`.
    pub fn singular_of(base: &Self, name: &str) -> Self {
        let q = Tag::Singular;
        let mut t = base.clone();
        t.name = name.into();
        for &a in &base.crossing_types {
            t.dominance.insert(Dominance::new(a, q));
            t.dominance.insert(Dominance::inverse(a, q));
            t.commuting.insert((a, q));
        }
        t.crossing_types.insert(q);
        t.regular.insert(q);
        t
    }

    pub fn singular() -> Self {
        Self::singular_of(&Self::classical(), "singular")
    }

    pub fn singular_rotational() -> Self {
        Self::singular_of(&Self::rotational(), "singular-rotational")
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let tags = self
            .regular
            .iter()
            .chain(&self.r1_permitted)
            .copied()
            .chain(self.dominance.iter().flat_map(|d| [d.over, d.under]))
            .chain(self.commuting.iter().flat_map(|&(a, b)| [a, b]));
        for t in tags {
            if !self.crossing_types.contains(&t) {
                return Err(AlgebraError::UnknownTag(t));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Component,
    FullyFormed,
    Dominance,
    YangBaxterIdentities,
    Commute,
    ForbiddenDominance,
    Biquandle,
}

/// One line of a theory check. Witness labels are one-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub kind: CheckKind,
    pub subject: String,
    pub passed: bool,
    pub required: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryReport {
    pub theory: String,
    pub birack: Option<String>,
    pub essential: bool,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl TheoryReport {
    /// Promotes every check of `kind` to required and recomputes `passed`.
    pub fn require(&mut self, kind: CheckKind) {
        for c in self.checks.iter_mut().filter(|c| c.kind == kind) {
            c.required = true;
        }
        self.recompute();
    }

    fn recompute(&mut self) {
        self.passed = self.checks.iter().all(|c| c.passed || !c.required);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.required && !c.passed)
    }
}

/// Verifies the generalised birack conditions of `birack` for `theory`:
/// fully formed regular components, every permitted dominance and every
/// permitted commuting pair. In essential mode every forbidden dominance
/// must fail. Biquandle status of `R1`-permitting types is reported but not
/// required; see [`TheoryReport::require`].
pub fn check_birack_for_theory(
    birack: &FiniteBirack,
    theory: &TheoryDescriptor,
    essential: bool,
) -> Result<TheoryReport, AlgebraError> {
    theory.validate()?;
    if let Some(t) = birack.tags().find(|t| !theory.crossing_types.contains(t)) {
        return Err(AlgebraError::UnknownTag(t));
    }
    let mut checks = Vec::new();
    let mut push = |kind, subject: String, witness: Option<Vec<usize>>| {
        checks.push(CheckOutcome { kind, subject, passed: witness.is_none(), required: true, witness });
    };

    let missing: Vec<Tag> = theory.crossing_types.iter().copied().filter(|t| birack.component(*t).is_err()).collect();
    for &t in &missing {
        push(CheckKind::Component, format!("component {t}"), Some(vec![]));
    }

    for &t in &theory.regular {
        let Ok(c) = birack.component(t) else { continue };
        let witness = match c.formedness() {
            Formedness::FullyFormed => None,
            Formedness::FormedOnly { collision } => Some(collision.iter().flat_map(|&(a, b)| [a + 1, b + 1]).collect()),
            Formedness::NotFormed { .. } => Some(vec![]),
        };
        push(CheckKind::FullyFormed, format!("fully formed {t}"), witness);
    }

    let switch_for = |tag: Tag, inverse: bool| -> Option<PairTable> {
        let c = birack.component(tag).ok()?;
        if inverse {
            c.switch_inverse().ok().cloned()
        } else {
            Some(c.switch().clone())
        }
    };
    let triple = |w: [usize; 3]| w.iter().map(|x| x + 1).collect::<Vec<_>>();

    for d in &theory.dominance {
        let (Some(a), Some(b)) = (switch_for(d.over, d.over_inverse), switch_for(d.under, false)) else {
            if !missing.contains(&d.over) && !missing.contains(&d.under) {
                push(CheckKind::Dominance, d.to_string(), Some(vec![]));
            }
            continue;
        };
        push(CheckKind::Dominance, d.to_string(), check_yang_baxter(&a, &b)?.map(triple));
        if d.over == d.under && !d.over_inverse {
            let c = birack.component(d.over)?;
            let witness = match c.twitch_rows() {
                Ok(t) => check_yang_baxter_identities(&t).map(|f| triple(f.triple)),
                Err(_) => Some(vec![]),
            };
            push(CheckKind::YangBaxterIdentities, format!("twitch identities {}", d.over), witness);
        }
    }

    for &(a, b) in &theory.commuting {
        let (Some(sa), Some(sb)) = (switch_for(a, false), switch_for(b, false)) else { continue };
        let witness = match check_commute(&sa, &sb) {
            Ok(None) => None,
            Ok(Some(f)) => {
                let (x, y) = match f {
                    super::CommuteFailure::Switches(p)
                    | super::CommuteFailure::TwitchBar(p)
                    | super::CommuteFailure::BarTwitch(p) => p,
                };
                Some(vec![x + 1, y + 1])
            }
            Err(_) => Some(vec![]),
        };
        push(CheckKind::Commute, format!("R4({a},{b})"), witness);
    }

    if essential {
        for &a in &theory.crossing_types {
            for &b in &theory.crossing_types {
                let d = super::Dominance::new(a, b);
                if theory.dominance.contains(&d) {
                    continue;
                }
                let (Some(sa), Some(sb)) = (switch_for(a, false), switch_for(b, false)) else { continue };
                // Passing means the equation fails somewhere.
                let holds = check_yang_baxter(&sa, &sb)?.is_none();
                push(CheckKind::ForbiddenDominance, format!("respects {d}"), holds.then(Vec::new));
            }
        }
    }

    for &t in &theory.r1_permitted {
        let Ok(c) = birack.component(t) else { continue };
        let witness = c.biquandle_witness().map(|x| vec![x + 1]);
        checks.push(CheckOutcome {
            kind: CheckKind::Biquandle,
            subject: format!("{t}-biquandle"),
            passed: witness.is_none(),
            required: false,
            witness,
        });
    }

    let mut report = TheoryReport {
        theory: theory.name.clone(),
        birack: birack.name().map(str::to_string),
        essential,
        passed: false,
        checks,
    };
    report.recompute();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Permutation, SwitchMap};

    fn r5_40_rows() -> SwitchMap {
        let up = ["(1 3)", "(4 5)", "(1 3)", "(2 5)", "(2 4)"]
            .iter()
            .map(|s| Permutation::parse_cycles(s, 5).unwrap())
            .collect();
        SwitchMap::new(up, vec![Permutation::identity(5); 5]).unwrap()
    }

    #[test]
    fn builtin_descriptors_are_consistent() {
        for name in TheoryDescriptor::NAMES {
            let t = TheoryDescriptor::by_name(name).unwrap();
            t.validate().unwrap();
            assert_eq!(t.r1_permitted, [Tag::Classical].into());
        }
        let s = TheoryDescriptor::singular_rotational();
        assert!(s.dominance.contains(&Dominance::inverse(Tag::Virtual, Tag::Singular)));
        assert!(s.commuting.contains(&(Tag::Classical, Tag::Singular)));
        assert!(!s.dominance.contains(&Dominance::new(Tag::Singular, Tag::Singular)));
    }

    #[test]
    fn rack_passes_classical() {
        let b = FiniteBirack::classical(Some("R5_40".into()), r5_40_rows());
        let r = check_birack_for_theory(&b, &TheoryDescriptor::classical(), false).unwrap();
        assert!(r.passed, "{r:#?}");
        let mut r2 = r.clone();
        r2.require(CheckKind::Biquandle);
        assert!(!r2.passed);
        let bq = r2.failures().next().unwrap();
        assert_eq!(bq.witness, Some(vec![1]));
    }

    #[test]
    fn non_yang_baxter_fails_with_triple() {
        // x^y = x + [y = 0] on Z_3 (mod 3) with trivial down action.
        let n = 3;
        let up: Vec<Vec<usize>> =
            (0..n).map(|y| (0..n).map(|x| if y == 0 { (x + 1) % n } else { x }).collect()).collect();
        let down: Vec<Vec<usize>> = vec![(0..n).collect(); n];
        let t = SwitchMap::from_rows(&up, &down).unwrap();
        let b = FiniteBirack::classical(None, t);
        let r = check_birack_for_theory(&b, &TheoryDescriptor::classical(), false).unwrap();
        assert!(!r.passed);
        let f = r.failures().find(|c| c.kind == CheckKind::Dominance).unwrap();
        assert_eq!(f.witness.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn missing_component_fails_and_unknown_tag_errors() {
        let b = FiniteBirack::classical(None, r5_40_rows());
        let r = check_birack_for_theory(&b, &TheoryDescriptor::rotational(), false).unwrap();
        assert!(!r.passed);
        let q = FiniteBirack::new(None, [(Tag::Singular, r5_40_rows())]).unwrap();
        assert!(check_birack_for_theory(&q, &TheoryDescriptor::classical(), false).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let b = FiniteBirack::classical(Some("R5_40".into()), r5_40_rows());
        let r = check_birack_for_theory(&b, &TheoryDescriptor::classical(), true).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: TheoryReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
