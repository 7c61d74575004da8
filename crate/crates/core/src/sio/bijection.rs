//! Size- and type-preserving bijections of SIO that move the avoiders of
//! one pattern onto the avoiders of another.

use super::symmetry::{apply_letters, sio_symmetry};
use super::{leftmost_end, rightmost_start, sio_contains, SioLetter, SioWord, Slope, TypeMark};
use crate::error::{Error, Result};
use crate::perm::Symmetry;

pub trait SioBijection {
    fn apply(&self, w: &SioWord) -> SioWord;
}

impl<F: Fn(&SioWord) -> SioWord> SioBijection for F {
    fn apply(&self, w: &SioWord) -> SioWord {
        self(w)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityBijection;

impl SioBijection for IdentityBijection {
    fn apply(&self, w: &SioWord) -> SioWord {
        w.clone()
    }
}

/// `letter` with one more edge in front, of slope `slope`.
fn prepend_edge(letter: SioLetter, slope: Slope) -> SioLetter {
    SioLetter::from_shape(letter.size() + 1, Some(slope))
}

/// `letter` with one more edge at the end, of slope `slope`.
fn append_edge(letter: SioLetter, slope: Slope) -> SioLetter {
    let n = letter.size() + 1;
    let first = letter
        .first_slope()
        .unwrap_or_else(|| slope.at(-(n as isize - 2)));
    let out = SioLetter::from_shape(n, Some(first));
    debug_assert!(n < 3 || out.last_slope() == Some(slope));
    out
}

fn drop_first_edge(letter: SioLetter) -> SioLetter {
    SioLetter::from_shape(letter.size() - 1, letter.slope(1))
}

fn drop_last_edge(letter: SioLetter) -> SioLetter {
    SioLetter::from_shape(letter.size() - 1, letter.first_slope())
}

/// Witness that a pattern `X` and its image `σ(X)` under a class symmetry
/// of the same type are equivalent.
///
/// A word `W` is split as `P·E·S` where `P` and `S` are the longest prefix
/// and suffix that cannot host the ends of `X` (letters `a`, `b` and the
/// one 3-letter whose slopes point the wrong way). The first or last edge
/// of `E` is cut off when its slope disagrees with the type of `X`, `σ` is
/// applied to what is left, and the cut edges are glued back on.
#[derive(Debug, Clone)]
pub struct LemmaBijection {
    pattern: SioWord,
    symmetry: Symmetry,
    start: Slope,
    finish: Slope,
}

impl LemmaBijection {
    pub fn new(pattern: &SioWord, symmetry: Symmetry) -> Result<Self> {
        let image = sio_symmetry(pattern, symmetry)?;
        let (start, finish) = pattern.type_of();
        let mismatch =
            |why: String| Error::TypeMismatch(format!("{pattern} under {symmetry}: {why}"));
        let (Some(s), Some(f)) = (start.slope(), finish.slope()) else {
            return Err(mismatch("Start and Finish must be defined".into()));
        };
        if image.type_of() != (start, finish) {
            let (is, if_) = image.type_of();
            return Err(mismatch(format!(
                "image {image} has type ({is}, {if_}), pattern has ({start}, {finish})"
            )));
        }
        Ok(Self {
            pattern: pattern.clone(),
            symmetry,
            start: s,
            finish: f,
        })
    }

    pub fn pattern(&self) -> &SioWord {
        &self.pattern
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn image_pattern(&self) -> SioWord {
        sio_symmetry(&self.pattern, self.symmetry).expect("checked at construction")
    }

    pub fn type_of(&self) -> (TypeMark, TypeMark) {
        self.pattern.type_of()
    }

    fn unusable_prefix_letter(&self) -> SioLetter {
        match self.start {
            Slope::Up => SioLetter::W(3),
            Slope::Down => SioLetter::M(3),
        }
    }

    fn unusable_suffix_letter(&self) -> SioLetter {
        match self.finish {
            Slope::Up => SioLetter::M(3),
            Slope::Down => SioLetter::W(3),
        }
    }
}

impl SioBijection for LemmaBijection {
    fn apply(&self, w: &SioWord) -> SioWord {
        let letters = w.letters();
        let idle = |l: &SioLetter, three: SioLetter| {
            matches!(l, SioLetter::A | SioLetter::B) || *l == three
        };
        let p = letters
            .iter()
            .take_while(|l| idle(l, self.unusable_prefix_letter()))
            .count();
        let rest = &letters[p..];
        let s = rest
            .iter()
            .rev()
            .take_while(|l| idle(l, self.unusable_suffix_letter()))
            .count();
        let essential = &rest[..rest.len() - s];
        if essential.is_empty() {
            return w.clone();
        }
        let first_edge = essential[0]
            .first_slope()
            .expect("essential part has a Start");
        let last_edge = essential[essential.len() - 1]
            .last_slope()
            .expect("essential part has a Finish");
        let cut_front = first_edge != self.start;
        let cut_back = last_edge != self.finish;

        let mut core = essential.to_vec();
        if cut_front {
            core[0] = drop_first_edge(core[0]);
        }
        if cut_back {
            let last = core.len() - 1;
            core[last] = drop_last_edge(core[last]);
        }
        let mut image = apply_letters(&core, self.symmetry).expect("class symmetry");
        if cut_front {
            image[0] = prepend_edge(image[0], first_edge);
        }
        if cut_back {
            let last = image.len() - 1;
            image[last] = append_edge(image[last], last_edge);
        }

        let mut out = letters[..p].to_vec();
        out.extend(image);
        out.extend_from_slice(&rest[rest.len() - s..]);
        SioWord::from_letters(out)
    }
}

/// Lifts a bijection witnessing `X ~ Y` to one witnessing `P·X·S ~ P·Y·S`.
///
/// For a word containing `P·S`, the leftmost embedding of `P` and the
/// rightmost embedding of `S` are fixed; the usable stretch between them
/// (two vertices clear of each embedding) is rewritten by the inner map and
/// re-joined to the untouched ends. Other words are left alone.
#[derive(Debug, Clone)]
pub struct SubstitutionBijection<B> {
    prefix: SioWord,
    suffix: SioWord,
    inner: B,
}

impl<B: SioBijection> SubstitutionBijection<B> {
    pub fn new(prefix: SioWord, suffix: SioWord, inner: B) -> Self {
        Self {
            prefix,
            suffix,
            inner,
        }
    }

    pub fn wrap(&self, middle: &SioWord) -> SioWord {
        self.prefix.concat(middle).concat(&self.suffix)
    }
}

impl<B: SioBijection> SioBijection for SubstitutionBijection<B> {
    fn apply(&self, w: &SioWord) -> SioWord {
        let letters = w.letters();
        if letters.is_empty() {
            return if self.prefix.is_empty() && self.suffix.is_empty() {
                self.inner.apply(w)
            } else {
                w.clone()
            };
        }
        if !sio_contains(&self.prefix.concat(&self.suffix), w) {
            return w.clone();
        }

        // first usable position (letter, vertex)
        let (mut i0, mut s0) = if self.prefix.is_empty() {
            (0, 0)
        } else {
            let (ix, v) = leftmost_end(self.prefix.letters(), letters).expect("P embeds");
            (ix, v + 2)
        };
        if s0 >= letters[i0].size() {
            i0 += 1;
            s0 = 0;
        }
        // last usable position (letter, vertex), inclusive
        let end = if self.suffix.is_empty() {
            Some((letters.len() - 1, letters[letters.len() - 1].size() - 1))
        } else {
            let (iy, u) = rightmost_start(self.suffix.letters(), letters).expect("S embeds");
            match (u >= 2, iy) {
                (true, _) => Some((iy, u - 2)),
                (false, 0) => None,
                (false, _) => Some((iy - 1, letters[iy - 1].size() - 1)),
            }
        };
        let Some((i1, e1)) = end else {
            return w.clone();
        };
        if i0 >= letters.len() || (i0, s0) > (i1, e1) {
            return w.clone();
        }

        let middle: Vec<SioLetter> = if i0 == i1 {
            vec![letters[i0].sub(s0, e1)]
        } else {
            let mut m = vec![letters[i0].sub(s0, letters[i0].size() - 1)];
            m.extend_from_slice(&letters[i0 + 1..i1]);
            m.push(letters[i1].sub(0, e1));
            m
        };
        let middle = SioWord::from_letters(middle);
        let mapped = self.inner.apply(&middle);
        debug_assert_eq!(mapped.size(), middle.size());
        debug_assert_eq!(mapped.type_of(), middle.type_of());

        let mut mid = mapped.letters().to_vec();
        if s0 > 0 {
            // head: vertices 0..s0 of letters[i0], joined by its next edge
            let host = letters[i0];
            mid[0] = SioLetter::from_shape(s0 + mid[0].size(), host.first_slope());
        }
        let tail = letters[i1].size() - 1 - e1;
        if tail > 0 {
            let host = letters[i1];
            let last = mid.len() - 1;
            let n = mid[last].size() + tail;
            let first = mid[last].first_slope().or_else(|| {
                host.first_slope()
                    .map(|f| f.at(host.size() as isize - n as isize))
            });
            mid[last] = SioLetter::from_shape(n, first);
        }

        let mut out = letters[..i0].to_vec();
        out.extend(mid);
        out.extend_from_slice(&letters[i1 + 1..]);
        SioWord::from_letters(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SioWord {
        s.parse().unwrap()
    }

    #[test]
    fn edge_surgery() {
        assert_eq!(drop_first_edge(SioLetter::W(7)), SioLetter::M(6));
        assert_eq!(drop_last_edge(SioLetter::W(4)), SioLetter::W(3));
        assert_eq!(drop_first_edge(SioLetter::M(3)), SioLetter::B);
        assert_eq!(prepend_edge(SioLetter::M(5), Slope::Down), SioLetter::W(6));
        assert_eq!(append_edge(SioLetter::B, Slope::Down), SioLetter::M(3));
        assert_eq!(append_edge(SioLetter::A, Slope::Up), SioLetter::B);
        assert_eq!(append_edge(SioLetter::M(3), Slope::Up), SioLetter::M(4));
    }

    #[test]
    fn essential_part_rewrite() {
        // any pattern of type (Up, Down) with the vertical-mirror symmetry
        let x = w("m3");
        let phi = LemmaBijection::new(&x, Symmetry::REVERSE_COMPLEMENT_INVERSE).unwrap();
        assert_eq!(phi.apply(&w("w7 a m5")), w("w6 a w6"));
        assert_eq!(phi.apply(&w("a b w3 b")), w("a b w3 b"));
        assert_eq!(phi.apply(&w("w6 a w6")), w("w7 a m5"));
    }

    #[test]
    fn lemma_preconditions() {
        assert!(matches!(
            LemmaBijection::new(&w("b w3"), Symmetry::IDENTITY),
            Err(Error::TypeMismatch(_))
        ));
        assert!(matches!(
            LemmaBijection::new(&w("w3 m4"), Symmetry::INVERSE),
            Err(Error::TypeMismatch(_))
        ));
        assert!(matches!(
            LemmaBijection::new(&w("w3"), Symmetry::REVERSE),
            Err(Error::UnsupportedSymmetry(_))
        ));
        let phi = LemmaBijection::new(&w("w3 m4"), Symmetry::REVERSE_COMPLEMENT_INVERSE).unwrap();
        assert_eq!(phi.image_pattern(), w("w4 w3"));
    }

    #[test]
    fn substitution_degenerate_cases() {
        let x = w("w3 m4");
        let phi = LemmaBijection::new(&x, Symmetry::REVERSE_COMPLEMENT_INVERSE).unwrap();
        let psi = SubstitutionBijection::new(SioWord::default(), SioWord::default(), phi.clone());
        for word in ["w5 a m4", "m9", "a w3 m4 b", ""] {
            assert_eq!(psi.apply(&w(word)), phi.apply(&w(word)));
        }
        let psi = SubstitutionBijection::new(w("w5"), w("w5"), phi);
        assert_eq!(psi.apply(&w("w5 m4 a")), w("w5 m4 a"));
    }
}
