//! Generating functions for containment in the X-class.
//!
//! A text contains a crossed pattern `w₁…w_{n−1}w_n` exactly when it
//! factors as an optional letter of the opposite sign to `w₁`, then one
//! minimal prefix candidate for each pair letter `w_i`, then a tail that
//! contains the monotone pattern `w_n`. Each piece has its own series.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Sign, XLetter, XWord};
use crate::error::{Error, Result};
use crate::series::Series;

/// Which tails the monotone factor counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MVariant {
    /// Every word of `L` containing the monotone pattern.
    AllWords,
    /// Only words whose first letter has the same sign as the monotone
    /// pattern; these are the tails that can follow the last prefix
    /// candidate in an alternating word.
    StartSignRestricted,
}

/// Generating function of the candidate prefixes for the pair `q`: words
/// over pair letters, alternating in sign and starting with the sign of
/// `q`, whose same-sign content reaches `|q|` on the last letter and not
/// before.
pub fn f_series(q: (i32, i32), order: usize) -> Series {
    let (ta, tb) = (q.0.unsigned_abs() as usize, q.1.unsigned_abs() as usize);
    assert!(ta + tb > 0, "pair letter must be nonzero");
    let idx = |ra: usize, rb: usize| ra * (tb + 1) + rb;
    // ways[state][s]: completions of total size s from residual demand
    // `state`, the next letter being of the demanding sign
    let mut ways = vec![vec![BigInt::zero(); order + 1]; (ta + 1) * (tb + 1)];
    for s in 1..=order {
        for ra in 0..=ta {
            for rb in 0..=tb {
                if ra == 0 && rb == 0 {
                    continue;
                }
                let mut total = BigInt::zero();
                for t in 1..=s {
                    for a in 0..=t {
                        let (na, nb) = (ra.saturating_sub(a), rb.saturating_sub(t - a));
                        if na == 0 && nb == 0 {
                            if t == s {
                                total += 1;
                            }
                            continue;
                        }
                        // an opposite-sign letter of size u has u + 1 shapes
                        for u in 1..s.saturating_sub(t) {
                            let rest = &ways[idx(na, nb)][s - t - u];
                            if !rest.is_zero() {
                                total += rest * BigInt::from(u + 1);
                            }
                        }
                    }
                }
                ways[idx(ra, rb)][s] = total;
            }
        }
    }
    Series::from_coeffs(ways[idx(ta, tb)].clone(), order)
}

/// Words of `L` by size that contain the monotone pattern `m`, `|m| ≥ 2`.
pub fn m_series(m: i32, order: usize, variant: MVariant) -> Series {
    assert!(m.abs() >= 2, "monotone letters have size at least two");
    let need = m.unsigned_abs() as usize;
    let favoured = if m > 0 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    let side = |s: Sign| usize::from(s != favoured);
    // tails[side][r][rem]: ways to spend exactly `rem` more size, the next
    // letter having sign `side`, still needing `r` more monotone length
    let mut tails = vec![vec![vec![BigInt::zero(); order + 1]; need + 1]; 2];
    for rem in 2..=order {
        for sign in [Sign::Positive, Sign::Negative] {
            let helps = sign == favoured;
            for r in 0..=need {
                let mono_gain = if helps { rem } else { 1 };
                let mut total = BigInt::from(u8::from(mono_gain >= r));
                for t in 1..rem - 1 {
                    let gain = if helps { t } else { 0 };
                    let next = &tails[side(sign.flip())][r.saturating_sub(gain)][rem - t];
                    if !next.is_zero() {
                        total += next * BigInt::from(t + 1);
                    }
                }
                tails[side(sign)][r][rem] = total;
            }
        }
    }
    let coeffs = (0..=order).map(|s| match variant {
        MVariant::AllWords => &tails[0][need][s] + &tails[1][need][s],
        MVariant::StartSignRestricted => tails[0][need][s].clone(),
    });
    Series::from_coeffs(coeffs, order)
}

/// `1/(1−x)² · ∏_{i<n} F_{w_i} · M_{w_n}`: words of `L` by size whose
/// permutation contains the crossed pattern `w`.
pub fn inv_gf(w: &XWord, order: usize, variant: MVariant) -> Result<Series> {
    let letters = w.letters();
    if !w.is_crossed() {
        return Err(Error::UseMonotoneCensus(w.to_string()));
    }
    let (last, pairs) = letters.split_last().expect("crossed word");
    let XLetter::Mono(m) = *last else {
        unreachable!("validated word")
    };
    let lead = Series::from_coeffs([1, -1], order)
        .pow(2)
        .reciprocal()
        .expect("unit constant term");
    let mut acc = lead.mul(&m_series(m, order, variant));
    for &l in pairs {
        let XLetter::Pair(a, b) = l else {
            unreachable!("validated word")
        };
        acc = acc.mul(&f_series((a, b), order));
    }
    Ok(acc)
}

/// `|X_n|` for `n = 0..=order`, with `|X_0| = 0`: words counted directly
/// by the same alternating-sign composition as [`super::enumerate_words`].
pub fn word_count_series(order: usize) -> Series {
    // starting[rem]: words of size `rem` whose first letter has a fixed sign
    let mut starting = vec![BigInt::zero(); order + 1];
    for rem in 2..=order {
        let mut total = BigInt::from(1);
        for t in 1..rem - 1 {
            total += &starting[rem - t] * BigInt::from(t + 1);
        }
        starting[rem] = total;
    }
    let coeffs = (0..=order).map(|n| match n {
        0 => BigInt::zero(),
        1 => BigInt::from(1),
        _ => &starting[n] * 2,
    });
    Series::from_coeffs(coeffs, order)
}

/// Containment series for any pattern word: `1` is in every word, a lone
/// monotone letter uses the unrestricted monotone series, and a crossed
/// word uses the product formula with `variant`.
pub fn containment_series(w: &XWord, order: usize, variant: MVariant) -> Series {
    match w.letters() {
        [XLetter::One] => word_count_series(order),
        [XLetter::Mono(m)] => m_series(*m, order, MVariant::AllWords),
        _ => inv_gf(w, order, variant).expect("crossed word"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xclass::{enumerate_words, greedy_contains, monotone_contained};

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn w(s: &str) -> XWord {
        s.parse().unwrap()
    }

    #[test]
    fn f_low_terms() {
        let f = f_series((1, 0), 2);
        assert_eq!(ints(&f), vec![0, 1, 2]);
    }

    /// Brute-force count of the candidate-prefix set for `q`.
    fn brute_prefix_counts(q: (i32, i32), order: usize) -> Vec<i64> {
        let sign = XLetter::Pair(q.0, q.1).sign().unwrap();
        let (na, nb) = (q.0.unsigned_abs(), q.1.unsigned_abs());
        let mut counts = vec![0i64; order + 1];
        // words as (size, same-sign content, next sign), grown letter by letter
        let mut frontier = vec![(0usize, (0u32, 0u32), sign)];
        while let Some((size, (a, b), next)) = frontier.pop() {
            for t in 1..=order - size {
                for x in 0..=t as u32 {
                    let y = t as u32 - x;
                    if next == sign {
                        let (ca, cb) = (a + x, b + y);
                        if ca >= na && cb >= nb {
                            counts[size + t] += 1;
                        } else {
                            frontier.push((size + t, (ca, cb), next.flip()));
                        }
                    } else {
                        frontier.push((size + t, (a, b), next.flip()));
                    }
                }
            }
        }
        counts
    }

    #[test]
    fn f_matches_brute_force() {
        for q in [(1, 0), (0, 2), (2, 1), (1, 1), (-1, -2), (3, 0)] {
            assert_eq!(ints(&f_series(q, 8)), brute_prefix_counts(q, 8), "{q:?}");
        }
    }

    #[test]
    fn f_symmetries() {
        for (a, b) in [(1, 0), (2, 1), (3, 1), (2, 2), (0, 3)] {
            let base = f_series((a, b), 8);
            assert_eq!(base, f_series((b, a), 8));
            assert_eq!(base, f_series((-a, -b), 8));
            assert_eq!(base, f_series((-b, -a), 8));
        }
    }

    #[test]
    fn m_matches_enumeration() {
        for m in [2, 3, 4, -2, -3] {
            for variant in [MVariant::AllWords, MVariant::StartSignRestricted] {
                let s = m_series(m, 8, variant);
                for n in 1..=8 {
                    let expect = enumerate_words(n)
                        .iter()
                        .filter(|t| {
                            variant == MVariant::AllWords
                                || t.letters()[0].sign() == XLetter::Mono(m).sign()
                        })
                        .filter(|t| monotone_contained(m, t.letters()))
                        .count();
                    assert_eq!(ints(&s)[n], expect as i64, "m={m} n={n} {variant:?}");
                }
            }
        }
        let m2 = m_series(2, 3, MVariant::AllWords);
        // only "(2)" = 12 has an increasing pair; "(-2)" = 21 does not
        assert_eq!(ints(&m2)[2], 1);
        assert_eq!(ints(&m_series(3, 3, MVariant::AllWords))[2], 0);
        assert_eq!(
            m_series(4, 10, MVariant::AllWords),
            m_series(-4, 10, MVariant::AllWords)
        );
    }

    #[test]
    fn word_counts() {
        assert_eq!(
            ints(&word_count_series(8)),
            vec![0, 1, 2, 6, 20, 68, 232, 792, 2704]
        );
    }

    #[test]
    fn inv_gf_matches_enumeration() {
        let w132 = w("(1,0)(-2)");
        let s = inv_gf(&w132, 7, MVariant::StartSignRestricted).unwrap();
        for n in 0..=7 {
            let direct = if n == 0 {
                0
            } else {
                enumerate_words(n)
                    .iter()
                    .filter(|t| greedy_contains(&w132, t))
                    .count()
            };
            assert_eq!(ints(&s)[n], direct as i64, "n={n}");
        }
        assert!(ints(&s)[..3].iter().all(|&c| c == 0));
    }

    #[test]
    fn inv_gf_rejects_monotone() {
        assert!(matches!(
            inv_gf(&w("(3)"), 5, MVariant::AllWords),
            Err(Error::UseMonotoneCensus(_))
        ));
        assert!(inv_gf(&w("1"), 5, MVariant::AllWords).is_err());
    }
}
