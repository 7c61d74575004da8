//! Exhaustive cross-checks of the structural algorithms against the
//! backtracking oracle, and of the SIO bijections against their contracts.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::perm::{contains_bruteforce, Permutation, Symmetry};
use crate::sio::{
    enumerate_sio, pack_into_letter, sio_contains, LemmaBijection, SioBijection, SioLetter,
    SioWord, SubstitutionBijection, CLASS_SYMMETRIES,
};
use crate::xclass::{enumerate_words, greedy_contains, XWord};

const MAX_EXAMPLES: usize = 8;

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what);
        }
    }

    fn merge(mut self, other: Check) -> Check {
        self.checked += other.checked;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn words_upto<W>(max: usize, gen: impl Fn(usize) -> Vec<W>) -> Vec<W> {
    (1..=max).flat_map(gen).collect()
}

/// Greedy X containment against the oracle on decoded permutations.
pub fn x_greedy_oracle(max_pattern: usize, max_text: usize) -> Check {
    let patterns: Vec<(XWord, Permutation)> = words_upto(max_pattern, enumerate_words)
        .into_iter()
        .map(|w| {
            let p = w.decode();
            (w, p)
        })
        .collect();
    let texts: Vec<(XWord, Permutation)> = words_upto(max_text, enumerate_words)
        .into_iter()
        .map(|w| {
            let p = w.decode();
            (w, p)
        })
        .collect();
    texts
        .par_iter()
        .map(|(t, tp)| {
            let mut c = Check::new("x greedy vs oracle");
            for (p, pp) in &patterns {
                c.checked += 1;
                let greedy = greedy_contains(p, t);
                if greedy != contains_bruteforce(tp, pp) {
                    c.fail(format!("pattern {p} text {t}: greedy says {greedy}"));
                }
            }
            c
        })
        .reduce(|| Check::new("x greedy vs oracle"), Check::merge)
}

/// SIO packing containment against the oracle on word permutations.
pub fn sio_greedy_oracle(max_pattern: usize, max_text: usize) -> Check {
    let prep = |max| -> Vec<(SioWord, Permutation)> {
        words_upto(max, enumerate_sio)
            .into_iter()
            .map(|w| {
                let p = w.to_perm();
                (w, p)
            })
            .collect()
    };
    let patterns = prep(max_pattern);
    let texts = prep(max_text);
    texts
        .par_iter()
        .map(|(t, tp)| {
            let mut c = Check::new("sio packing vs oracle");
            for (p, pp) in &patterns {
                c.checked += 1;
                let greedy = sio_contains(p, t);
                if greedy != contains_bruteforce(tp, pp) {
                    c.fail(format!("pattern {p} text {t}: packing says {greedy}"));
                }
            }
            c
        })
        .reduce(|| Check::new("sio packing vs oracle"), Check::merge)
}

/// Checks that `f` is a size-preserving bijection on `layer` (and
/// type-preserving), carrying containment of `x` to containment of `y`.
fn check_layer<B: SioBijection + Sync>(
    c: &mut Check,
    f: &B,
    x: &SioWord,
    y: &SioWord,
    layer: &[SioWord],
    label: &str,
) {
    let mut seen = HashSet::with_capacity(layer.len());
    for w in layer {
        c.checked += 1;
        let img = f.apply(w);
        if img.size() != w.size() {
            c.fail(format!("{label}: {w} -> {img} changes size"));
            continue;
        }
        if img.type_of() != w.type_of() {
            c.fail(format!("{label}: {w} -> {img} changes type"));
        }
        if sio_contains(x, w) != sio_contains(y, &img) {
            c.fail(format!("{label}: {w} -> {img} breaks avoidance"));
        }
        if !seen.insert(img.clone()) {
            c.fail(format!("{label}: {img} is hit twice"));
        }
    }
}

/// Every pattern of size at most `max_pattern` with defined type, paired
/// with each class symmetry that preserves its type.
pub fn lemma_instances(max_pattern: usize) -> Vec<LemmaBijection> {
    words_upto(max_pattern, enumerate_sio)
        .into_iter()
        .filter(SioWord::has_defined_type)
        .flat_map(|x| {
            CLASS_SYMMETRIES
                .into_iter()
                .filter_map(move |s| LemmaBijection::new(&x, s).ok())
        })
        .collect()
}

pub fn lemma_check(instances: &[LemmaBijection], max_n: usize) -> Check {
    let layers: Vec<Vec<SioWord>> = (0..=max_n).map(enumerate_sio).collect();
    instances
        .par_iter()
        .map(|phi| {
            let mut c = Check::new("symmetry lemma bijection");
            let (x, y) = (phi.pattern().clone(), phi.image_pattern());
            let label = format!("X={x} s={}", phi.symmetry());
            for layer in &layers {
                check_layer(&mut c, phi, &x, &y, layer, &label);
            }
            c
        })
        .reduce(|| Check::new("symmetry lemma bijection"), Check::merge)
}

/// Words of size at most two, including the empty word: the prefixes and
/// suffixes used to exercise the substitution bijection.
pub fn small_contexts() -> Vec<SioWord> {
    (0..=2).flat_map(enumerate_sio).collect()
}

pub fn substitution_check(
    instances: &[LemmaBijection],
    contexts: &[SioWord],
    max_n: usize,
) -> Check {
    let layers: Vec<Vec<SioWord>> = (0..=max_n).map(enumerate_sio).collect();
    let jobs: Vec<(&LemmaBijection, &SioWord, &SioWord)> = instances
        .iter()
        .flat_map(|phi| {
            contexts
                .iter()
                .flat_map(move |p| contexts.iter().map(move |s| (phi, p, s)))
        })
        .collect();
    jobs.par_iter()
        .map(|&(phi, p, s)| {
            let mut c = Check::new("substitution bijection");
            let psi = SubstitutionBijection::new(p.clone(), s.clone(), phi.clone());
            let x = psi.wrap(phi.pattern());
            let y = psi.wrap(&phi.image_pattern());
            let label = format!("P=[{p}] X={} S=[{s}] s={}", phi.pattern(), phi.symmetry());
            for layer in &layers {
                check_layer(&mut c, &psi, &x, &y, layer, &label);
            }
            c
        })
        .reduce(|| Check::new("substitution bijection"), Check::merge)
}

/// Single letters of size at most `max`.
fn letters_upto(max: usize) -> Vec<SioLetter> {
    let mut out = vec![SioLetter::A, SioLetter::B];
    for k in 3..=max {
        out.extend([SioLetter::W(k), SioLetter::M(k)]);
    }
    out.retain(|l| l.size() <= max);
    out
}

/// For indecomposables `π, θ` of size at most `max`, the sum `π ⊕ θ` lies
/// in a single letter of size at most `|π| + |θ| + 2`.
pub fn no_incompatible_pairs(max: usize) -> Check {
    let mut c = Check::new("no incompatible pairs");
    let letters = letters_upto(max);
    for &pi in &letters {
        for &theta in &letters {
            c.checked += 1;
            let pair = SioWord::from_letters(vec![pi, theta]);
            let bound = pi.size() + theta.size() + 2;
            let host = letters_upto(bound)
                .into_iter()
                .find(|&l| pack_into_letter(&pair, l));
            match host {
                Some(l) if contains_bruteforce(&l.to_perm(), &pair.to_perm()) => {}
                Some(l) => c.fail(format!("{pair} packs into {l} but the oracle disagrees")),
                None => c.fail(format!("{pair} fits no letter of size ≤ {bound}")),
            }
        }
    }
    c
}

/// The Lemma at a chosen pattern and symmetry, run over every layer up to
/// `max_n`; fails with the reason if the pattern does not qualify.
pub fn lemma_check_one(x: &SioWord, s: Symmetry, max_n: usize) -> Check {
    match LemmaBijection::new(x, s) {
        Ok(phi) => lemma_check(&[phi], max_n),
        Err(e) => {
            let mut c = Check::new("symmetry lemma bijection");
            c.fail(e.to_string());
            c
        }
    }
}
