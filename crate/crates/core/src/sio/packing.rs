//! Greedy containment for SIO words.
//!
//! Inside one text letter the pattern letters are laid out left to right on
//! the text's path: `a` on a vertex, `b` on an edge, `w_j`/`m_j` on `j − 1`
//! consecutive edges whose first slope matches. Consecutive pieces must not
//! be joined by an edge, so the next piece starts two vertices on. Across
//! text letters each letter takes the longest pattern prefix it can hold.

use super::{symmetry::rotate_half_turn, SioLetter, SioWord};

/// Earliest placement of `piece` in `host` at vertex `from` or later;
/// returns the last vertex used.
fn place(piece: SioLetter, host: SioLetter, from: usize) -> Option<usize> {
    let n = host.size();
    match piece {
        SioLetter::A => (from < n).then_some(from),
        SioLetter::B => (from + 1 < n).then_some(from + 1),
        SioLetter::W(j) | SioLetter::M(j) => {
            let want = piece.first_slope();
            let start = match host.slope(from) {
                Some(s) if Some(s) == want => from,
                Some(_) => from + 1,
                None => return None,
            };
            (start + j <= n).then_some(start + j - 1)
        }
    }
}

/// Packs the longest prefix of `pattern` into `host` starting at vertex
/// `from`. Returns how many letters fit and the last vertex used.
fn pack_prefix(pattern: &[SioLetter], host: SioLetter, from: usize) -> (usize, Option<usize>) {
    let mut pos = from;
    let mut last = None;
    for (i, &piece) in pattern.iter().enumerate() {
        match place(piece, host, pos) {
            Some(end) => {
                last = Some(end);
                pos = end + 2;
            }
            None => return (i, last),
        }
    }
    (pattern.len(), last)
}

pub fn pack_into_letter(pattern: &SioWord, letter: SioLetter) -> bool {
    pack_prefix(pattern.letters(), letter, 0).0 == pattern.len()
}

pub fn sio_contains(pattern: &SioWord, text: &SioWord) -> bool {
    if pattern.size() > text.size() {
        return false;
    }
    let pat = pattern.letters();
    let mut done = 0;
    for &host in text.letters() {
        if done == pat.len() {
            break;
        }
        done += pack_prefix(&pat[done..], host, 0).0;
    }
    done == pat.len()
}

/// Where the leftmost embedding of a nonempty `pattern` ends: text letter
/// index and vertex.
pub(crate) fn leftmost_end(pattern: &[SioLetter], text: &[SioLetter]) -> Option<(usize, usize)> {
    assert!(!pattern.is_empty());
    let mut done = 0;
    for (i, &host) in text.iter().enumerate() {
        let (fit, last) = pack_prefix(&pattern[done..], host, 0);
        done += fit;
        if done == pattern.len() {
            return Some((i, last.expect("at least one piece placed")));
        }
    }
    None
}

/// Where the rightmost embedding of a nonempty `pattern` begins, found as
/// the leftmost embedding in the half-turn rotated picture.
pub(crate) fn rightmost_start(pattern: &[SioLetter], text: &[SioLetter]) -> Option<(usize, usize)> {
    let rp = rotate_half_turn(pattern);
    let rt = rotate_half_turn(text);
    let (i, v) = leftmost_end(&rp, &rt)?;
    let li = text.len() - 1 - i;
    Some((li, text[li].size() - 1 - v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SioWord {
        s.parse().unwrap()
    }

    #[test]
    fn packing_into_one_letter() {
        let x = w("w3 a m4 b");
        assert!(pack_into_letter(&x, SioLetter::M(16)));
        assert!(!pack_into_letter(&x, SioLetter::M(14)));
        assert!(pack_into_letter(&x, SioLetter::M(15)));
        assert!(pack_into_letter(&w("a a"), SioLetter::W(3)));
        assert!(!pack_into_letter(&w("a a"), SioLetter::B));
        assert!(pack_into_letter(&w(""), SioLetter::A));
    }

    #[test]
    fn containment_fixtures() {
        assert!(sio_contains(&w("w3 m4"), &w("w3 a m4")));
        assert!(!sio_contains(&w("m3"), &w("w3")));
        let x = w("w5 a b m3");
        assert!(sio_contains(&x, &x));
        assert!(sio_contains(&w(""), &w("")));
    }

    #[test]
    fn embedding_ends() {
        let text = w("w3 a m4 b");
        assert_eq!(
            leftmost_end(w("a a").letters(), text.letters()),
            Some((0, 2))
        );
        assert_eq!(
            leftmost_end(w("b b").letters(), text.letters()),
            Some((2, 1))
        );
        assert_eq!(
            rightmost_start(w("a").letters(), text.letters()),
            Some((3, 1))
        );
        assert_eq!(
            rightmost_start(w("m3").letters(), text.letters()),
            Some((2, 0))
        );
        assert_eq!(
            rightmost_start(w("w3").letters(), text.letters()),
            Some((2, 1))
        );
        assert_eq!(leftmost_end(w("w5").letters(), text.letters()), None);
    }
}
