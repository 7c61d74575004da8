//! Closure of a size layer under factor rewrites `F → σ(F)`, where `F` is
//! a run of letters with defined Start and Finish and `σ` a class symmetry
//! fixing its type. Each rewrite is one application of the symmetry lemma
//! inside the substitution principle, so a closure class is a set of
//! provably Wilf-equivalent patterns.

use std::collections::HashMap;

use crate::perm::Symmetry;
use crate::sio::{sio_symmetry, type_image, SioWord, CLASS_SYMMETRIES};

/// Distinct words reachable from `w` by one factor rewrite.
pub fn rewrite_neighbours(w: &SioWord) -> Vec<SioWord> {
    let letters = w.letters();
    let mut out = Vec::new();
    for i in 0..letters.len() {
        for j in i + 1..=letters.len() {
            let factor = SioWord::from_letters(letters[i..j].to_vec());
            if !factor.has_defined_type() {
                continue;
            }
            let ty = factor.type_of();
            for s in CLASS_SYMMETRIES {
                if s == Symmetry::IDENTITY || type_image(ty, s).ok() != Some(ty) {
                    continue;
                }
                let image = sio_symmetry(&factor, s).expect("class symmetry");
                if image == factor {
                    continue;
                }
                let mut next = letters[..i].to_vec();
                next.extend_from_slice(image.letters());
                next.extend_from_slice(&letters[j..]);
                let next = SioWord::from_letters(next);
                if !out.contains(&next) {
                    out.push(next);
                }
            }
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Partition of `words` (closed under size) into rewrite-closure classes,
/// in order of first appearance.
pub fn rewrite_classes(words: &[SioWord]) -> Vec<Vec<SioWord>> {
    let index: HashMap<&SioWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (i, w) in words.iter().enumerate() {
        for n in rewrite_neighbours(w) {
            let j = *index.get(&n).expect("rewrites preserve size");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<SioWord>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let root = find(&mut parent, i);
        let g = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(w.clone());
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sio::enumerate_sio;

    fn w(s: &str) -> SioWord {
        s.parse().unwrap()
    }

    #[test]
    fn neighbours() {
        let n = rewrite_neighbours(&w("w3 m4"));
        assert!(n.contains(&w("w4 w3")));
        assert!(!n.contains(&w("w4 m3")));
        // single letters are fixed by every type-preserving symmetry
        assert!(rewrite_neighbours(&w("w5")).is_empty());
        assert!(rewrite_neighbours(&w("a b")).is_empty());
    }

    #[test]
    fn classes_partition_layer() {
        let layer = enumerate_sio(8);
        let classes = rewrite_classes(&layer);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), layer.len());
        assert!(classes.len() < layer.len());
    }
}
