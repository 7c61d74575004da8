//! `SIO`, the sum closure of the increasing oscillation `2,4,1,6,3,8,5,…`.
//!
//! Its sum-indecomposables are exactly the permutations whose inversion
//! graph is a path, so members are words over the alphabet
//!
//! | letter | permutation       | diagram                       |
//! |--------|-------------------|-------------------------------|
//! | `a`    | `1`               | a lone vertex                 |
//! | `b`    | `21`              | one edge, no slope            |
//! | `w<k>` | `231`, `2413`, …  | `k − 1` edges: down, up, down…|
//! | `m<k>` | `312`, `3142`, …  | `k − 1` edges: up, down, up…  |
//!
//! The vertices of a letter's diagram are the vertices of its inversion
//! path in path order. Two vertices that are not adjacent on the path form
//! an increasing pair, which is what makes containment a packing problem.

mod bijection;
mod packing;
mod symmetry;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use bijection::{IdentityBijection, LemmaBijection, SioBijection, SubstitutionBijection};
pub use packing::{pack_into_letter, sio_contains};
pub use symmetry::{is_class_symmetry, sio_symmetry, type_image, CLASS_SYMMETRIES};

pub(crate) use packing::{leftmost_end, rightmost_start};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Up,
    Down,
}

impl Slope {
    pub fn flip(self) -> Slope {
        match self {
            Slope::Up => Slope::Down,
            Slope::Down => Slope::Up,
        }
    }

    /// Slope of edge `e` on a zigzag whose edge 0 has slope `self`; `e` may
    /// be negative, extending the zigzag to the left.
    fn at(self, e: isize) -> Slope {
        if e.rem_euclid(2) == 0 {
            self
        } else {
            self.flip()
        }
    }
}

/// Start or Finish of a letter or word: the slope of its first or last
/// diagram edge, undefined for `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum TypeMark {
    Up,
    Down,
    Undefined,
}

impl From<Option<Slope>> for TypeMark {
    fn from(s: Option<Slope>) -> Self {
        match s {
            Some(Slope::Up) => TypeMark::Up,
            Some(Slope::Down) => TypeMark::Down,
            None => TypeMark::Undefined,
        }
    }
}

impl TypeMark {
    pub fn slope(self) -> Option<Slope> {
        match self {
            TypeMark::Up => Some(Slope::Up),
            TypeMark::Down => Some(Slope::Down),
            TypeMark::Undefined => None,
        }
    }
}

impl fmt::Display for TypeMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeMark::Up => "up",
            TypeMark::Down => "down",
            TypeMark::Undefined => "undefined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SioLetter {
    A,
    B,
    W(usize),
    M(usize),
}

impl SioLetter {
    /// The letter with `vertices` vertices whose first edge has slope
    /// `first` (ignored below three vertices).
    pub fn from_shape(vertices: usize, first: Option<Slope>) -> SioLetter {
        match vertices {
            0 => panic!("a letter has at least one vertex"),
            1 => SioLetter::A,
            2 => SioLetter::B,
            k => match first.expect("zigzag of three or more vertices needs a slope") {
                Slope::Down => SioLetter::W(k),
                Slope::Up => SioLetter::M(k),
            },
        }
    }

    pub fn size(self) -> usize {
        match self {
            SioLetter::A => 1,
            SioLetter::B => 2,
            SioLetter::W(k) | SioLetter::M(k) => k,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            SioLetter::W(k) | SioLetter::M(k) => k >= 3,
            _ => true,
        }
    }

    pub fn first_slope(self) -> Option<Slope> {
        match self {
            SioLetter::W(_) => Some(Slope::Down),
            SioLetter::M(_) => Some(Slope::Up),
            _ => None,
        }
    }

    /// Slope of edge `e` (between vertices `e` and `e + 1`).
    pub fn slope(self, e: usize) -> Option<Slope> {
        let first = self.first_slope()?;
        (e + 1 < self.size()).then(|| first.at(e as isize))
    }

    pub fn last_slope(self) -> Option<Slope> {
        self.slope(self.size().checked_sub(2)?)
    }

    pub fn slopes(self) -> Vec<Slope> {
        (0..self.size().saturating_sub(1))
            .filter_map(|e| self.slope(e))
            .collect()
    }

    pub fn start(self) -> TypeMark {
        self.first_slope().into()
    }

    pub fn finish(self) -> TypeMark {
        self.last_slope().into()
    }

    /// The piece of the diagram on vertices `from..=to`.
    pub fn sub(self, from: usize, to: usize) -> SioLetter {
        assert!(from <= to && to < self.size(), "vertex range out of bounds");
        SioLetter::from_shape(to - from + 1, self.slope(from))
    }

    /// The sum-indecomposable permutation this letter names.
    pub fn to_perm(self) -> Permutation {
        let k = self.size();
        // path vertex j sits at (2j + dx, 2j + dy); the odd/even offsets make
        // consecutive vertices inversions and all others increasing pairs
        let offset = |j: usize, odd: bool| if (j % 2 == 1) == odd { 3 } else { 0 };
        let w_like = !matches!(self, SioLetter::M(_));
        let mut points: Vec<(usize, usize)> = (0..k)
            .map(|j| {
                let x = 2 * j + offset(j, w_like);
                let y = 2 * j + offset(j, !w_like);
                (x, y)
            })
            .collect();
        points.sort_unstable();
        let ys: Vec<usize> = points.into_iter().map(|(_, y)| y).collect();
        Permutation::standardize(&ys)
    }
}

impl fmt::Display for SioLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SioLetter::A => f.write_str("a"),
            SioLetter::B => f.write_str("b"),
            SioLetter::W(k) => write!(f, "w{k}"),
            SioLetter::M(k) => write!(f, "m{k}"),
        }
    }
}

impl FromStr for SioLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "bad letter {s:?}; expected a, b, w<k> or m<k> with k ≥ 3"
            ))
        };
        let letter = match s {
            "a" => SioLetter::A,
            "b" => SioLetter::B,
            _ => {
                let k: usize = s.get(1..).and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                match s.as_bytes()[0] {
                    b'w' => SioLetter::W(k),
                    b'm' => SioLetter::M(k),
                    _ => return Err(bad()),
                }
            }
        };
        letter.is_valid().then_some(letter).ok_or_else(bad)
    }
}

/// A member of SIO as its sequence of sum components. The empty word is the
/// empty permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SioWord {
    letters: Vec<SioLetter>,
}

impl SioWord {
    pub fn new(letters: Vec<SioLetter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| !l.is_valid()) {
            return Err(Error::Parse(format!("invalid letter {l:?}")));
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters(letters: Vec<SioLetter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.is_valid()));
        Self { letters }
    }

    pub fn letters(&self) -> &[SioLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn size(&self) -> usize {
        self.letters.iter().map(|l| l.size()).sum()
    }

    pub fn start(&self) -> TypeMark {
        self.letters
            .first()
            .map_or(TypeMark::Undefined, |l| l.start())
    }

    pub fn finish(&self) -> TypeMark {
        self.letters
            .last()
            .map_or(TypeMark::Undefined, |l| l.finish())
    }

    pub fn type_of(&self) -> (TypeMark, TypeMark) {
        (self.start(), self.finish())
    }

    pub fn has_defined_type(&self) -> bool {
        self.start() != TypeMark::Undefined && self.finish() != TypeMark::Undefined
    }

    pub fn concat(&self, other: &SioWord) -> SioWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SioWord { letters }
    }

    pub fn to_perm(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::empty(), |acc, l| acc.direct_sum(&l.to_perm()))
    }

    /// Classifies each sum component by its inversion graph; fails on the
    /// first component that is not one of the zigzag letters.
    pub fn from_perm(p: &Permutation) -> Result<SioWord> {
        let mut letters = Vec::new();
        for (index, comp) in p.sum_decompose().into_iter().enumerate() {
            let not_sio = || Error::NotInSio {
                index,
                component: comp.to_string(),
            };
            let letter = match comp.len() {
                1 => SioLetter::A,
                2 => SioLetter::B,
                k => {
                    let order = comp.inversion_graph().path_order().ok_or_else(not_sio)?;
                    // the first entry is a path endpoint exactly for w-letters
                    if order[0] == 0 || order[k - 1] == 0 {
                        SioLetter::W(k)
                    } else {
                        SioLetter::M(k)
                    }
                }
            };
            if letter.to_perm() != comp {
                return Err(not_sio());
            }
            letters.push(letter);
        }
        Ok(SioWord { letters })
    }

    /// Number of pairwise disjoint occurrences of `factor` as a run of
    /// consecutive letters, scanning left to right.
    pub fn disjoint_factor_count(&self, factor: &SioWord) -> usize {
        assert!(!factor.is_empty(), "factor must be nonempty");
        let f = factor.letters.as_slice();
        let mut count = 0;
        let mut i = 0;
        while i + f.len() <= self.letters.len() {
            if &self.letters[i..i + f.len()] == f {
                count += 1;
                i += f.len();
            } else {
                i += 1;
            }
        }
        count
    }
}

impl fmt::Display for SioWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SioWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: Result<Vec<SioLetter>> = s.split_whitespace().map(str::parse).collect();
        SioWord::new(letters?)
    }
}

/// Every word of size `n`, each once.
pub fn enumerate_sio(n: usize) -> Vec<SioWord> {
    fn extend(remaining: usize, prefix: &mut Vec<SioLetter>, out: &mut Vec<SioWord>) {
        if remaining == 0 {
            out.push(SioWord {
                letters: prefix.clone(),
            });
            return;
        }
        for k in 1..=remaining {
            let choices: &[SioLetter] = match k {
                1 => &[SioLetter::A],
                2 => &[SioLetter::B],
                _ => &[SioLetter::W(k), SioLetter::M(k)],
            };
            for &l in choices {
                prefix.push(l);
                extend(remaining - k, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SioWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn letter_permutations() {
        let table = [
            ("a", "1"),
            ("b", "21"),
            ("w3", "231"),
            ("m3", "312"),
            ("w4", "2413"),
            ("m4", "3142"),
            ("w5", "24153"),
            ("m5", "31524"),
        ];
        for (letter, perm) in table {
            let l: SioLetter = letter.parse().unwrap();
            assert_eq!(l.to_perm(), p(perm), "{letter}");
            assert!(l.to_perm().inversion_graph().is_path());
        }
    }

    #[test]
    fn type_table() {
        use TypeMark::*;
        let table = [
            ("a", Undefined, Undefined),
            ("b", Undefined, Undefined),
            ("w3", Down, Up),
            ("m3", Up, Down),
            ("w4", Down, Down),
            ("m4", Up, Up),
            ("w5", Down, Up),
            ("m5", Up, Down),
        ];
        for (letter, start, finish) in table {
            let l: SioLetter = letter.parse().unwrap();
            assert_eq!((l.start(), l.finish()), (start, finish), "{letter}");
        }
        assert_eq!(w("w4").type_of(), (Down, Down));
        assert_eq!(w("b").type_of(), (Undefined, Undefined));
        assert_eq!(w("w3 m4").type_of(), (Down, Up));
        assert_eq!(SioWord::default().type_of(), (Undefined, Undefined));
    }

    #[test]
    fn start_is_first_vertex_interiority() {
        for k in 3..=9 {
            for l in [SioLetter::W(k), SioLetter::M(k)] {
                let perm = l.to_perm();
                let order = perm.inversion_graph().path_order().unwrap();
                let first_terminal = order[0] == 0 || order[k - 1] == 0;
                let last_terminal = order[0] == k - 1 || order[k - 1] == k - 1;
                assert_eq!(l.start() == TypeMark::Down, first_terminal, "{l}");
                assert_eq!(l.finish() == TypeMark::Down, last_terminal, "{l}");
            }
        }
    }

    #[test]
    fn word_permutation_round_trip() {
        assert_eq!(w("w4").to_perm(), p("2413"));
        assert_eq!(w("a b").to_perm(), p("132"));
        assert_eq!(w("w3 m3").to_perm(), p("231645"));
        assert_eq!(SioWord::from_perm(&p("231645")).unwrap(), w("w3 m3"));
        assert_eq!(SioWord::from_perm(&p("132")).unwrap(), w("a b"));
        assert_eq!(
            SioWord::from_perm(&Permutation::empty()).unwrap(),
            SioWord::default()
        );
        let err = SioWord::from_perm(&p("1432")).unwrap_err();
        assert_eq!(
            err,
            Error::NotInSio {
                index: 1,
                component: "321".into()
            }
        );
    }

    #[test]
    fn parsing() {
        assert_eq!(w("w3 a  m4 b").to_string(), "w3 a m4 b");
        assert!("w2".parse::<SioWord>().is_err());
        assert!("x3".parse::<SioWord>().is_err());
        assert!("w".parse::<SioWord>().is_err());
        assert_eq!(w(""), SioWord::default());
    }

    #[test]
    fn enumeration() {
        let names = |n| {
            enumerate_sio(n)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
        };
        let mut two = names(2);
        two.sort();
        assert_eq!(two, vec!["a a", "b"]);
        let mut three = names(3);
        three.sort();
        assert_eq!(three, vec!["a a a", "a b", "b a", "m3", "w3"]);
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_sio(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 11, 24, 53, 117, 258]);
        let indecomposable: Vec<usize> = (1..=6)
            .map(|n| enumerate_sio(n).iter().filter(|x| x.len() == 1).count())
            .collect();
        assert_eq!(indecomposable, vec![1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn disjoint_factors() {
        let f = w("w3 m4");
        assert_eq!(w("w3 m4 w3 m4").disjoint_factor_count(&f), 2);
        assert_eq!(w("w3 w3 m4").disjoint_factor_count(&f), 1);
        assert_eq!(w("a a a").disjoint_factor_count(&w("a a")), 1);
        assert_eq!(w("").disjoint_factor_count(&f), 0);
    }

    #[test]
    fn sub_letters() {
        assert_eq!(SioLetter::W(7).sub(1, 6), SioLetter::M(6));
        assert_eq!(SioLetter::W(7).sub(0, 5), SioLetter::W(6));
        assert_eq!(SioLetter::M(4).sub(1, 2), SioLetter::B);
        assert_eq!(SioLetter::M(4).sub(3, 3), SioLetter::A);
    }
}
