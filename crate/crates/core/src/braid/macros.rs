//! Named braids: the small knots of the tables and Bigelow's braids in the
//! kernel of the Burau representation.

use super::{parse_braid, BraidWord};

const BIGELOW1: &str = "[(s3^-1 s2 s1^2 s2 s4^3 s3 s2)^-1 s4 (s3^-1 s2 s1^2 s2 s4^3 s3 s2), \
     (s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5)^-1 s4 s3 s2 s1^2 s2 s3 s4 \
     (s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5)]";

const BIGELOW2: &str = "[(s4 s5^-1 s2^-1 s1)^-1 s3 (s4 s5^-1 s2^-1 s1), \
     (s4^-1 s5^2 s2 s1^-2)^-1 s3 (s4^-1 s5^2 s2 s1^-2)]";

/// `(name, word, strands)`
const MACROS: [(&str, &str, usize); 7] = [
    ("unknot", "", 1),
    ("trefoil", "s1 s1 s1", 2),
    ("fig8", "s1 -s2 s1 -s2", 3),
    ("unlink5", "", 5),
    ("unlink6", "", 6),
    ("bigelow1", BIGELOW1, 5),
    ("bigelow2", BIGELOW2, 6),
];

pub const MACRO_NAMES: [&str; 7] = ["unknot", "trefoil", "fig8", "unlink5", "unlink6", "bigelow1", "bigelow2"];

/// Returns the named braid, or `None` for an unknown name.
pub fn named(name: &str) -> Option<BraidWord> {
    let (_, text, strands) = MACROS.iter().find(|(n, _, _)| *n == name)?;
    Some(parse_braid(text, Some(*strands)).expect("built-in braid words parse"))
}

/// The source text of a named braid.
pub fn source(name: &str) -> Option<&'static str> {
    MACROS.iter().find(|(n, _, _)| *n == name).map(|(_, t, _)| *t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_macros_parse() {
        for name in MACRO_NAMES {
            assert!(named(name).is_some(), "{name}");
            assert!(source(name).is_some());
        }
        assert!(named("nope").is_none());
    }

    #[test]
    fn bigelow_shapes() {
        let b1 = named("bigelow1").unwrap();
        let b2 = named("bigelow2").unwrap();
        assert_eq!((b1.strands(), b2.strands()), (5, 6));
        // psi1 has 10 letters, psi2 has 16: [21-letter word, 40-letter word]
        assert_eq!(b1.len(), 2 * (21 + 40));
        // psi1 = 4, psi2 = 6: [9, 13]
        assert_eq!(b2.len(), 2 * (9 + 13));
    }
}
