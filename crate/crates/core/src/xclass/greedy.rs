use super::{Sign, XLetter, XWord};

/// Whether the permutation of `text` contains the monotone pattern `m`
/// (increasing of size `m` when positive, decreasing of size `|m|` when
/// negative). Works on any suffix of a word.
///
/// For `m > 0` the longest increasing run is the sum of all positive
/// entries, plus one if the monotone letter is negative; `m < 0` mirrors.
pub fn monotone_contained(m: i32, text: &[XLetter]) -> bool {
    let size: usize = text.iter().map(|l| l.size()).sum();
    if m.abs() <= 1 {
        return size >= 1;
    }
    let want = if m > 0 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    let longest: usize = text
        .iter()
        .map(|&l| match l {
            XLetter::Pair(..) if l.sign() == Some(want) => l.size(),
            XLetter::Pair(..) => 0,
            XLetter::Mono(_) if l.sign() == Some(want) => l.size(),
            XLetter::Mono(_) | XLetter::One => 1,
        })
        .sum();
    longest >= m.unsigned_abs() as usize
}

/// Splits `text` at its `q`-prefix: the shortest prefix whose same-sign
/// pair content dominates `|q|` coordinatewise. The monotone letter carries
/// no pair content. `None` when no prefix qualifies.
pub fn ab_prefix(text: &[XLetter], q: (i32, i32)) -> Option<(&[XLetter], &[XLetter])> {
    let want = XLetter::Pair(q.0, q.1).sign()?;
    let (need_a, need_b) = (q.0.unsigned_abs(), q.1.unsigned_abs());
    let (mut a, mut b) = (0u32, 0u32);
    for (i, &l) in text.iter().enumerate() {
        if let XLetter::Pair(x, y) = l {
            if l.sign() == Some(want) {
                a += x.unsigned_abs();
                b += y.unsigned_abs();
                if a >= need_a && b >= need_b {
                    return Some(text.split_at(i + 1));
                }
            }
        }
    }
    None
}

fn greedy(pattern: &[XLetter], text: &[XLetter]) -> bool {
    match pattern {
        [] => true,
        [XLetter::One] => !text.is_empty(),
        [XLetter::Mono(m)] => monotone_contained(*m, text),
        [XLetter::Pair(a, b), rest @ ..] => match ab_prefix(text, (*a, *b)) {
            Some((_, remainder)) => greedy(rest, remainder),
            None => false,
        },
        _ => unreachable!("validated word"),
    }
}

/// Containment of `pattern` in `text` by repeated prefix stripping, in time
/// linear in the two word lengths.
pub fn greedy_contains(pattern: &XWord, text: &XWord) -> bool {
    greedy(pattern.letters(), text.letters())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> XWord {
        s.parse().unwrap()
    }

    #[test]
    fn monotone_rule() {
        let t = w("(2,0)(-3)");
        assert!(monotone_contained(3, t.letters()));
        assert!(!monotone_contained(4, t.letters()));
        assert!(monotone_contained(-2, t.letters()));
        assert!(monotone_contained(-3, t.letters()));
        assert!(!monotone_contained(-4, t.letters()));
        assert!(monotone_contained(1, w("1").letters()));
        assert!(!monotone_contained(2, w("1").letters()));
        assert!(monotone_contained(-1, w("(2)").letters()));
    }

    #[test]
    fn prefixes() {
        let t = w("(1,1)(-2,0)(3,1)(-4)");
        let (pre, rem) = ab_prefix(t.letters(), (2, 1)).unwrap();
        assert_eq!(pre.len(), 3);
        assert_eq!(rem, &[XLetter::Mono(-4)]);
        assert!(ab_prefix(w("(1,1)(-2)").letters(), (2, 1)).is_none());
        assert!(ab_prefix(w("(0,-1)(3)").letters(), (1, 0)).is_none());
        let (pre, _) = ab_prefix(t.letters(), (-2, 0)).unwrap();
        assert_eq!(pre.len(), 2);
    }

    #[test]
    fn greedy_fixtures() {
        assert!(greedy_contains(&w("(1,0)(-2)"), &w("(1,1)(-2,0)(3,1)(-4)")));
        assert!(!greedy_contains(&w("(1,0)(-2)"), &w("(-3)")));
        let x = w("(-3,-2)(2,0)(-1,-1)(4,3)(-3,-2)(3)");
        assert!(greedy_contains(&x, &x));
        assert!(greedy_contains(&w("1"), &w("1")));
        assert!(!greedy_contains(&w("(2)"), &w("1")));
        // 132 is not inside 2341
        assert!(!greedy_contains(&w("(1,0)(-2)"), &w("(0,-1)(3)")));
    }

    #[test]
    fn greedy_agrees_with_oracle_small() {
        use crate::xclass::enumerate_words;
        let texts: Vec<XWord> = (1..=7).flat_map(enumerate_words).collect();
        let pats: Vec<XWord> = (1..=4).flat_map(enumerate_words).collect();
        for t in &texts {
            let tp = t.decode();
            for p in &pats {
                assert_eq!(
                    greedy_contains(p, t),
                    tp.contains(&p.decode()),
                    "{p} in {t}"
                );
            }
        }
    }
}
