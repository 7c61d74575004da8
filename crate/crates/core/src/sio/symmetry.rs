//! The four symmetries that fix SIO, acting on word diagrams: the
//! reverse-complement is a half turn, the inverse a reflection in a
//! horizontal axis, and their composite a reflection in a vertical axis.

use super::{SioLetter, SioWord, TypeMark};
use crate::error::{Error, Result};
use crate::perm::Symmetry;

pub const CLASS_SYMMETRIES: [Symmetry; 4] = [
    Symmetry::IDENTITY,
    Symmetry::REVERSE_COMPLEMENT,
    Symmetry::INVERSE,
    Symmetry::REVERSE_COMPLEMENT_INVERSE,
];

pub fn is_class_symmetry(s: Symmetry) -> bool {
    CLASS_SYMMETRIES.contains(&s)
}

/// (reverses letter order and each slope sequence, negates slopes)
fn action(s: Symmetry) -> Result<(bool, bool)> {
    match s {
        Symmetry::IDENTITY => Ok((false, false)),
        Symmetry::REVERSE_COMPLEMENT => Ok((true, false)),
        Symmetry::INVERSE => Ok((false, true)),
        Symmetry::REVERSE_COMPLEMENT_INVERSE => Ok((true, true)),
        other => Err(Error::UnsupportedSymmetry(other.to_string())),
    }
}

fn letter_image(l: SioLetter, reverse: bool, negate: bool) -> SioLetter {
    let first = if reverse {
        l.last_slope()
    } else {
        l.first_slope()
    };
    let first = if negate {
        first.map(|s| s.flip())
    } else {
        first
    };
    SioLetter::from_shape(l.size(), first)
}

pub(crate) fn apply_letters(letters: &[SioLetter], s: Symmetry) -> Result<Vec<SioLetter>> {
    let (reverse, negate) = action(s)?;
    let mut out: Vec<SioLetter> = letters
        .iter()
        .map(|&l| letter_image(l, reverse, negate))
        .collect();
    if reverse {
        out.reverse();
    }
    Ok(out)
}

pub(crate) fn rotate_half_turn(letters: &[SioLetter]) -> Vec<SioLetter> {
    apply_letters(letters, Symmetry::REVERSE_COMPLEMENT).expect("class symmetry")
}

/// Image of `w` under a symmetry of SIO; the other four symmetries of the
/// square do not map SIO to itself and are rejected.
pub fn sio_symmetry(w: &SioWord, s: Symmetry) -> Result<SioWord> {
    Ok(SioWord::from_letters(apply_letters(w.letters(), s)?))
}

/// How a class symmetry moves the (Start, Finish) type of a word.
pub fn type_image(ty: (TypeMark, TypeMark), s: Symmetry) -> Result<(TypeMark, TypeMark)> {
    let (reverse, negate) = action(s)?;
    let flip = |t: TypeMark| {
        if negate {
            TypeMark::from(t.slope().map(|x| x.flip()))
        } else {
            t
        }
    };
    let (start, finish) = if reverse { (ty.1, ty.0) } else { ty };
    Ok((flip(start), flip(finish)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SioWord {
        s.parse().unwrap()
    }

    #[test]
    fn fixtures() {
        assert_eq!(sio_symmetry(&w("w5"), Symmetry::INVERSE).unwrap(), w("m5"));
        assert_eq!(
            sio_symmetry(&w("w4"), Symmetry::REVERSE_COMPLEMENT).unwrap(),
            w("w4")
        );
        assert_eq!(
            sio_symmetry(&w("w3 m4"), Symmetry::REVERSE_COMPLEMENT_INVERSE).unwrap(),
            w("w4 w3")
        );
        assert!(matches!(
            sio_symmetry(&w("w3"), Symmetry::REVERSE),
            Err(Error::UnsupportedSymmetry(_))
        ));
    }

    #[test]
    fn type_action_matches_words() {
        for n in 0..=8 {
            for word in super::super::enumerate_sio(n) {
                for s in CLASS_SYMMETRIES {
                    let img = sio_symmetry(&word, s).unwrap();
                    assert_eq!(type_image(word.type_of(), s).unwrap(), img.type_of());
                }
            }
        }
    }
}
