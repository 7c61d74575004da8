//! Property tests against the backtracking oracle and the structural
//! invariants of both word models.

use proptest::prelude::*;
use proptest::sample::select;

use wilf_collapse::census::{avoidance_vectors, rewrite_neighbours, Budget};
use wilf_collapse::perm::{contains_bruteforce, SumMode};
use wilf_collapse::sio::{enumerate_sio, sio_contains, sio_symmetry, CLASS_SYMMETRIES};
use wilf_collapse::xclass::{enumerate_words, greedy_contains, is_member};
use wilf_collapse::{Permutation, SioWord, Symmetry, XWord};

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn x_word(max: usize) -> impl Strategy<Value = XWord> {
    (1..=max).prop_flat_map(|n| select(enumerate_words(n)))
}

fn sio_word(max: usize) -> impl Strategy<Value = SioWord> {
    (1..=max).prop_flat_map(|n| select(enumerate_sio(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn symmetries_compose(p in perm(8), s in select(Symmetry::ALL.to_vec()), t in select(Symmetry::ALL.to_vec())) {
        prop_assert_eq!(p.apply_symmetry(s).apply_symmetry(t), p.apply_symmetry(t.compose(s)));
    }

    #[test]
    fn symmetries_respect_containment(text in perm(6), pattern in perm(4), s in select(Symmetry::ALL.to_vec())) {
        prop_assert_eq!(
            contains_bruteforce(&text, &pattern),
            contains_bruteforce(&text.apply_symmetry(s), &pattern.apply_symmetry(s))
        );
    }

    #[test]
    fn sum_decomposition_round_trips(p in perm(9)) {
        let parts = p.sum_decompose();
        prop_assert!(parts.iter().all(Permutation::is_sum_indecomposable));
        let back = parts.iter().fold(Permutation::empty(), |acc, c| acc.compose(c, SumMode::Sum));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn sums_are_monotone(a in perm(3), b in perm(3), c in perm(3), d in perm(3)) {
        let big = a.direct_sum(&b);
        let small = c.direct_sum(&d);
        if contains_bruteforce(&a, &c) && contains_bruteforce(&b, &d) {
            prop_assert!(contains_bruteforce(&big, &small));
        }
    }

    #[test]
    fn x_encode_decode(p in perm(9)) {
        prop_assume!(!p.is_empty());
        match XWord::encode(&p) {
            Ok(w) => {
                prop_assert!(is_member(&p));
                prop_assert_eq!(w.decode(), p);
            }
            Err(_) => prop_assert!(!is_member(&p)),
        }
    }

    #[test]
    fn x_greedy_matches_oracle(pattern in x_word(6), text in x_word(10)) {
        prop_assert_eq!(
            greedy_contains(&pattern, &text),
            contains_bruteforce(&text.decode(), &pattern.decode())
        );
    }

    #[test]
    fn sio_round_trip(w in sio_word(12)) {
        prop_assert_eq!(SioWord::from_perm(&w.to_perm()).unwrap(), w);
    }

    #[test]
    fn sio_symmetry_faithful(w in sio_word(9), s in select(CLASS_SYMMETRIES.to_vec())) {
        let img = sio_symmetry(&w, s).unwrap();
        prop_assert_eq!(img.to_perm(), w.to_perm().apply_symmetry(s));
    }

    #[test]
    fn sio_packing_matches_oracle(pattern in sio_word(7), text in sio_word(12)) {
        prop_assert_eq!(
            sio_contains(&pattern, &text),
            contains_bruteforce(&text.to_perm(), &pattern.to_perm())
        );
    }
}

/// Words joined by one factor rewrite have identical avoidance vectors.
#[test]
fn rewrites_preserve_vectors() {
    let budget = Budget::unlimited();
    for k in 5..=7 {
        let patterns = enumerate_sio(k);
        let vectors = avoidance_vectors(&patterns, 11, &budget).unwrap();
        let index = |w: &SioWord| patterns.iter().position(|p| p == w).unwrap();
        for (i, w) in patterns.iter().enumerate() {
            for n in rewrite_neighbours(w) {
                assert_eq!(vectors[i].counts, vectors[index(&n)].counts, "{w} vs {n}");
            }
        }
    }
}
