//! Recursive-descent parser for braid words.
//!
//! ```text
//! word  := term*
//! term  := atom ('^' int)?
//! atom  := '-'? gen | '(' word ')' | '[' word ',' word ']'
//! gen   := ('s' | 'v' | 'q') digits
//! ```
//!
//! Whitespace and `·` separate terms and are otherwise ignored. `-s2` is
//! `s2^-1`, and `[A, B]` expands to `A⁻¹ B⁻¹ A B`.

use super::{BraidError, BraidWord, Generator, Polarity};
use crate::algebra::Tag;

/// Expanded words longer than this are rejected.
pub const MAX_EXPANDED_LEN: usize = 1 << 22;
const MAX_DEPTH: usize = 200;

/// Parses and fully expands a braid word. Without `strands`, the word lives
/// on one more strand than its largest generator index.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, BraidError> {
    let mut p = Parser { src: text, pos: 0, depth: 0 };
    let gens = p.word()?;
    p.skip_separators();
    if p.pos < text.len() {
        return Err(p.error(format!("unexpected {:?}", p.peek().unwrap())));
    }
    let strands = strands.unwrap_or_else(|| gens.iter().map(|g| g.position + 1).max().unwrap_or(1));
    BraidWord::new(strands, gens)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> BraidError {
        BraidError::Syntax { position: self.pos, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_separators(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() || c == '·' {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> Result<Vec<Generator>, BraidError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        let mut out = Vec::new();
        loop {
            self.skip_separators();
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => break,
                _ => {
                    let term = self.term()?;
                    if out.len() + term.len() > MAX_EXPANDED_LEN {
                        return Err(self.error("expanded word too long"));
                    }
                    out.extend(term);
                }
            }
        }
        self.depth -= 1;
        Ok(out)
    }

    fn nonempty_word(&mut self) -> Result<Vec<Generator>, BraidError> {
        self.skip_separators();
        if matches!(self.peek(), None | Some(')') | Some(']') | Some(',')) {
            return Err(self.error("expected a braid word"));
        }
        self.word()
    }

    fn term(&mut self) -> Result<Vec<Generator>, BraidError> {
        let base = self.atom()?;
        self.skip_separators();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        self.skip_separators();
        let exponent = self.signed_int()?;
        power(&base, exponent).ok_or_else(|| self.error("expanded word too long"))
    }

    fn atom(&mut self) -> Result<Vec<Generator>, BraidError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.nonempty_word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.bump();
                let a = self.nonempty_word()?;
                self.expect(',')?;
                let b = self.nonempty_word()?;
                self.expect(']')?;
                let mut out = inverse(&a);
                out.extend(inverse(&b));
                out.extend(a);
                out.extend(b);
                if out.len() > MAX_EXPANDED_LEN {
                    return Err(self.error("expanded word too long"));
                }
                Ok(out)
            }
            Some('-') => {
                self.bump();
                Ok(vec![self.generator()?.inverse()])
            }
            Some(_) => Ok(vec![self.generator()?]),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn generator(&mut self) -> Result<Generator, BraidError> {
        let c = self.peek().ok_or_else(|| self.error("expected a generator"))?;
        let tag = Tag::from_letter(c).ok_or_else(|| self.error(format!("expected s, v or q, found {c:?}")))?;
        self.bump();
        let index = self.unsigned_int()?;
        if index == 0 {
            return Err(BraidError::Bound { index: 0, strands: 0 });
        }
        Ok(Generator::new(index, tag, Polarity::Positive))
    }

    fn expect(&mut self, c: char) -> Result<(), BraidError> {
        self.skip_separators();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn unsigned_int(&mut self) -> Result<usize, BraidError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| BraidError::Syntax { position: start, message: "integer too large".into() })
    }

    fn signed_int(&mut self) -> Result<i64, BraidError> {
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let magnitude = self.unsigned_int()?;
        let magnitude = i64::try_from(magnitude).map_err(|_| self.error("integer too large"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

fn inverse(w: &[Generator]) -> Vec<Generator> {
    w.iter().rev().map(|g| g.inverse()).collect()
}

fn power(w: &[Generator], exponent: i64) -> Option<Vec<Generator>> {
    let reps = usize::try_from(exponent.unsigned_abs()).ok()?;
    if reps.checked_mul(w.len())? > MAX_EXPANDED_LEN {
        return None;
    }
    let unit = if exponent < 0 { inverse(w) } else { w.to_vec() };
    Some(unit.repeat(reps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> String {
        parse_braid(text, None).unwrap().to_string()
    }

    #[test]
    fn trefoil() {
        let w = parse_braid("s1 s1 s1", Some(2)).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.generators().iter().all(|g| *g == Generator::classical(1, Polarity::Positive)));
    }

    #[test]
    fn figure_eight_polarities() {
        let w = parse_braid("s1 -s2 s1 -s2", Some(3)).unwrap();
        let signs: Vec<i64> = w.generators().iter().map(|g| g.polarity.sign()).collect();
        assert_eq!(signs, vec![1, -1, 1, -1]);
    }

    #[test]
    fn commutator_expansion() {
        assert_eq!(s("[s1, s2]"), "-s1 -s2 s1 s2");
        assert_eq!(s("[s1 s2, v3]"), "-s2 -s1 -v3 s1 s2 v3");
    }

    #[test]
    fn exponents_and_groups() {
        assert_eq!(s("s1^3"), "s1 s1 s1");
        assert_eq!(s("s1^-2"), "-s1 -s1");
        assert_eq!(s("-s1^2"), "-s1 -s1");
        assert_eq!(s("(s1 -s2)^-1"), "s2 -s1");
        assert_eq!(s("s1^0 s2"), "s2");
        assert_eq!(s("s1·s2·s1"), "s1 s2 s1");
        assert_eq!(s("s1s2"), "s1 s2");
        assert_eq!(s(""), "");
        assert_eq!(parse_braid("", None).unwrap().strands(), 1);
    }

    #[test]
    fn strands_default_and_bounds() {
        assert_eq!(parse_braid("s4", None).unwrap().strands(), 5);
        assert!(matches!(parse_braid("s4", Some(4)), Err(BraidError::Bound { index: 4, strands: 4 })));
        assert!(parse_braid("s0", None).is_err());
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_braid("s1 x2", None) {
            Err(BraidError::Syntax { position: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        for bad in ["s", "(s1", "[s1 s2]", "s1)", "s1^", "()", "[s1,]", "--s1", "s99999999999999999999999"] {
            assert!(parse_braid(bad, None).is_err(), "{bad}");
        }
    }

    #[test]
    fn expansion_is_bounded() {
        assert!(parse_braid("((s1^1000)^1000)^1000", None).is_err());
        let deep = "(".repeat(500) + "s1" + &")".repeat(500);
        assert!(parse_braid(&deep, None).is_err());
    }
}
