//! The X-class `Av(2143, 2413, 3142, 3412)`.
//!
//! Members are coded by words of the language `L`: either the single
//! symbol `1`, or a run of pair letters `(a,b)` with alternating signs
//! closed by a monotone letter `(m)`, `|m| ≥ 2`, whose sign continues the
//! alternation. A positive pair wraps the rest of the word as
//! `a ⊕ rest ⊕ b`, a negative pair as `|a| ⊖ rest ⊖ |b|` with decreasing
//! runs.

mod gf;
mod greedy;
mod key;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use gf::{containment_series, f_series, inv_gf, m_series, word_count_series, MVariant};
pub use greedy::{ab_prefix, greedy_contains, monotone_contained};
pub use key::WilfKey;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn of(v: i32) -> Option<Sign> {
        match v.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    fn apply(self, v: i32) -> i32 {
        match self {
            Sign::Positive => v,
            Sign::Negative => -v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XLetter {
    Pair(i32, i32),
    Mono(i32),
    One,
}

impl XLetter {
    pub fn sign(self) -> Option<Sign> {
        match self {
            XLetter::Pair(a, b) => Sign::of(a).or(Sign::of(b)),
            XLetter::Mono(m) => Sign::of(m),
            XLetter::One => None,
        }
    }

    pub fn size(self) -> usize {
        match self {
            XLetter::Pair(a, b) => (a.unsigned_abs() + b.unsigned_abs()) as usize,
            XLetter::Mono(m) => m.unsigned_abs() as usize,
            XLetter::One => 1,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            XLetter::Pair(a, b) => (a, b) != (0, 0) && (a >= 0 && b >= 0 || a <= 0 && b <= 0),
            XLetter::Mono(m) => m.abs() >= 2,
            XLetter::One => true,
        }
    }
}

impl fmt::Display for XLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XLetter::Pair(a, b) => write!(f, "({a},{b})"),
            XLetter::Mono(m) => write!(f, "({m})"),
            XLetter::One => f.write_str("1"),
        }
    }
}

/// A word of `L`; construction checks the alternation rules.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XWord {
    letters: Vec<XLetter>,
}

impl XWord {
    pub fn new(letters: Vec<XLetter>) -> Result<Self> {
        let word = Self { letters };
        word.validate()?;
        Ok(word)
    }

    pub fn one() -> Self {
        Self {
            letters: vec![XLetter::One],
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::NotInLanguage(format!("{self}: {why}")));
        match self.letters.as_slice() {
            [] => return bad("empty word"),
            [XLetter::One] => return Ok(()),
            _ => {}
        }
        let (last, body) = self.letters.split_last().unwrap();
        if !matches!(last, XLetter::Mono(_)) {
            return bad("last letter must be monotone");
        }
        if body.iter().any(|l| !matches!(l, XLetter::Pair(..))) {
            return bad("only the last letter may be monotone");
        }
        if let Some(l) = self.letters.iter().find(|l| !l.is_valid()) {
            return bad(&format!("invalid letter {l}"));
        }
        if self.letters.windows(2).any(|w| w[0].sign() == w[1].sign()) {
            return bad("signs must alternate");
        }
        Ok(())
    }

    pub fn letters(&self) -> &[XLetter] {
        &self.letters
    }

    pub fn size(&self) -> usize {
        self.letters.iter().map(|l| l.size()).sum()
    }

    pub fn is_crossed(&self) -> bool {
        self.letters.len() >= 2
    }

    /// Applies the recursive word-to-permutation map.
    pub fn decode(&self) -> Permutation {
        decode_letters(&self.letters)
    }

    /// Inverse of [`XWord::decode`]: peels the maximal monotone bookends off
    /// a crossed permutation, alternating sign, down to a monotone core.
    pub fn encode(p: &Permutation) -> Result<XWord> {
        let not_member = || Error::NotInClass(format!("{p} is not in Av(2143, 2413, 3142, 3412)"));
        if p.is_empty() {
            return Err(not_member());
        }
        if p.len() == 1 {
            return Ok(XWord::one());
        }
        let mut letters = Vec::new();
        let mut cur = p.values().to_vec();
        loop {
            let n = cur.len() as u32;
            let core = Permutation::new(cur.clone()).expect("standardised block");
            if core.is_increasing() && n >= 2 {
                letters.push(XLetter::Mono(n as i32));
                break;
            }
            if core.is_decreasing() && n >= 2 {
                letters.push(XLetter::Mono(-(n as i32)));
                break;
            }
            if n < 2 {
                return Err(not_member());
            }
            let last = cur.len() - 1;
            let (sign, a, b) = if cur[0] == 1 || cur[last] == n {
                let a = cur.iter().zip(1..).take_while(|(&v, k)| v == *k).count();
                let b = cur
                    .iter()
                    .rev()
                    .zip((1..=n).rev())
                    .take_while(|(&v, k)| v == *k)
                    .count();
                (Sign::Positive, a, b)
            } else if cur[0] == n || cur[last] == 1 {
                let a = cur
                    .iter()
                    .zip((1..=n).rev())
                    .take_while(|(&v, k)| v == *k)
                    .count();
                let b = cur
                    .iter()
                    .rev()
                    .zip(1..)
                    .take_while(|(&v, k)| v == *k)
                    .count();
                (Sign::Negative, a, b)
            } else {
                return Err(not_member());
            };
            if letters.last().and_then(|l: &XLetter| l.sign()) == Some(sign) {
                return Err(not_member());
            }
            letters.push(XLetter::Pair(sign.apply(a as i32), sign.apply(b as i32)));
            cur = Permutation::standardize(&cur[a..cur.len() - b])
                .values()
                .to_vec();
        }
        let word = XWord::new(letters).map_err(|_| not_member())?;
        if word.decode() != *p {
            return Err(not_member());
        }
        Ok(word)
    }

    /// The Wilf key: normalised pair multiset plus terminal magnitude.
    pub fn wilf_key(&self) -> WilfKey {
        WilfKey::of(self)
    }
}

fn decode_letters(letters: &[XLetter]) -> Permutation {
    match letters {
        [] => Permutation::empty(),
        [XLetter::One] => Permutation::identity(1),
        [XLetter::Mono(m)] if *m > 0 => Permutation::identity(*m as usize),
        [XLetter::Mono(m)] => Permutation::decreasing(m.unsigned_abs() as usize),
        [XLetter::Pair(a, b), rest @ ..] => {
            let inner = decode_letters(rest);
            if *a >= 0 && *b >= 0 {
                Permutation::identity(*a as usize)
                    .direct_sum(&inner)
                    .direct_sum(&Permutation::identity(*b as usize))
            } else {
                Permutation::decreasing(a.unsigned_abs() as usize)
                    .skew_sum(&inner)
                    .skew_sum(&Permutation::decreasing(b.unsigned_abs() as usize))
            }
        }
        _ => unreachable!("validated word"),
    }
}

impl fmt::Display for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for XWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('1') {
                letters.push(XLetter::One);
                rest = r;
                continue;
            }
            let Some(body_end) = rest.strip_prefix('(').and_then(|r| r.find(')')) else {
                return Err(Error::Parse(format!("expected '(' or '1' at {rest:?}")));
            };
            let body = &rest[1..=body_end];
            let nums: Result<Vec<i32>> = body
                .split(',')
                .map(|t| {
                    t.parse::<i32>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect();
            letters.push(match nums?.as_slice() {
                [m] => XLetter::Mono(*m),
                [a, b] => XLetter::Pair(*a, *b),
                _ => return Err(Error::Parse(format!("bad letter ({body})"))),
            });
            rest = &rest[body_end + 2..];
        }
        XWord::new(letters)
    }
}

/// Membership via the backtracking oracle against the four basis patterns.
pub fn is_member(p: &Permutation) -> bool {
    const BASIS: [[u32; 4]; 4] = [[2, 1, 4, 3], [2, 4, 1, 3], [3, 1, 4, 2], [3, 4, 1, 2]];
    BASIS
        .iter()
        .all(|b| !p.contains(&Permutation::new(b.to_vec()).expect("basis element")))
}

/// Every word of size exactly `n` (so `|X_n|` words), built by composing
/// letter sizes with alternating signs.
pub fn enumerate_words(n: usize) -> Vec<XWord> {
    fn extend(
        remaining: usize,
        need: Option<Sign>,
        prefix: &mut Vec<XLetter>,
        out: &mut Vec<XWord>,
    ) {
        let signs: &[Sign] = match need {
            Some(Sign::Positive) => &[Sign::Positive],
            Some(Sign::Negative) => &[Sign::Negative],
            None => &[Sign::Positive, Sign::Negative],
        };
        for &sign in signs {
            if remaining >= 2 {
                prefix.push(XLetter::Mono(sign.apply(remaining as i32)));
                out.push(XWord {
                    letters: prefix.clone(),
                });
                prefix.pop();
            }
            for size in 1..remaining.saturating_sub(1) {
                for a in 0..=size {
                    let b = size - a;
                    prefix.push(XLetter::Pair(sign.apply(a as i32), sign.apply(b as i32)));
                    extend(remaining - size, Some(sign.flip()), prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    match n {
        0 => Vec::new(),
        1 => vec![XWord::one()],
        _ => {
            let mut out = Vec::new();
            extend(n, None, &mut Vec::new(), &mut out);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> XWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let long = "(-3,-2)(2,0)(-1,-1)(4,3)(-3,-2)(3)";
        assert_eq!(w(long).to_string(), long);
        assert_eq!(w(" ( 2 , 0 ) ( -2 ) ").to_string(), "(2,0)(-2)");
        assert_eq!(w("1"), XWord::one());
        assert!(matches!(
            "(2,0)(2)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!(
            "(2,-1)(-2)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!(
            "(0,0)(-2)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!(
            "(1)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!(
            "(2,0)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!(
            "1(2)".parse::<XWord>(),
            Err(Error::NotInLanguage(_))
        ));
        assert!(matches!("(2,0".parse::<XWord>(), Err(Error::Parse(_))));
    }

    #[test]
    fn decode_fixtures() {
        assert_eq!(w("1").decode(), p("1"));
        assert_eq!(w("(2,0)(-2)").decode(), p("1243"));
        assert_eq!(w("(1,0)(0,-1)(2)").decode(), p("1342"));
        assert_eq!(w("(2,0)(-3)").decode(), p("12543"));
        let long = w("(-3,-2)(2,0)(-1,-1)(4,3)(-3,-2)(3)");
        let pi = long.decode();
        assert_eq!(pi.len(), 24);
        assert!(is_member(&pi));
        assert_eq!(XWord::encode(&pi).unwrap(), long);
    }

    #[test]
    fn size_24_word() {
        // crossed and negative: begins with its maximum, ends with its minimum
        let pi = w("(-3,-2)(2,0)(-1,-1)(4,3)(-3,-2)(3)").decode();
        let v = pi.values();
        assert_eq!(&v[..3], &[24, 23, 22]);
        assert_eq!(&v[22..], &[2, 1]);
        assert!(!pi.is_increasing() && !pi.is_decreasing());
    }

    #[test]
    fn encode_fixtures() {
        assert_eq!(XWord::encode(&p("1")).unwrap(), XWord::one());
        assert_eq!(XWord::encode(&p("132")).unwrap(), w("(1,0)(-2)"));
        assert_eq!(XWord::encode(&p("312")).unwrap(), w("(-1,0)(2)"));
        assert!(matches!(
            XWord::encode(&p("2143")),
            Err(Error::NotInClass(_))
        ));
        assert!(XWord::encode(&Permutation::empty()).is_err());
    }

    #[test]
    fn membership() {
        assert!(!is_member(&p("2143")));
        assert!(is_member(&p("25431")));
        for n in 0..=3 {
            assert!(Permutation::all(n).iter().all(is_member));
        }
    }

    #[test]
    fn encode_matches_membership() {
        for n in 1..=7 {
            for pi in Permutation::all(n) {
                assert_eq!(XWord::encode(&pi).is_ok(), is_member(&pi), "{pi}");
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let names = |n| {
            enumerate_words(n)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(1), vec!["1"]);
        assert_eq!(names(2), vec!["(2)", "(-2)"]);
        assert_eq!(enumerate_words(4).len(), 20);
        let members = Permutation::all(4).into_iter().filter(is_member).count();
        assert_eq!(members, 20);
    }

    #[test]
    fn bijection_round_trips() {
        for n in 1..=9 {
            let words = enumerate_words(n);
            let mut perms: Vec<Permutation> = words.iter().map(|x| x.decode()).collect();
            for (word, pi) in words.iter().zip(&perms) {
                assert_eq!(pi.len(), n);
                assert_eq!(&XWord::encode(pi).unwrap(), word);
            }
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), words.len());
        }
    }
}
