//! Which of `w4 w3` and `w4 m3` behaves like `w3 m4`? The first is the
//! image of `w3 m4` under the vertical mirror and has the same type; the
//! second is not a symmetry image and has a different Finish. Avoidance
//! vectors decide empirically; nothing is presumed.

use serde::Serialize;

use super::{avoidance_vectors, AvoidanceVector, Budget};
use crate::error::Result;
use crate::sio::{sio_symmetry, LemmaBijection, SioWord, TypeMark, CLASS_SYMMETRIES};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub word: String,
    pub start: TypeMark,
    pub finish: TypeMark,
    pub vector: AvoidanceVector,
    pub matches_base: bool,
    pub first_difference: Option<usize>,
    /// Class symmetries carrying the base pattern to this word.
    pub symmetries: Vec<String>,
    pub lemma_verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub horizon: usize,
    pub base: String,
    pub base_vector: AvoidanceVector,
    pub candidates: Vec<Candidate>,
    pub outcome: String,
}

impl DiscrepancyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn lemma_verdict(base: &SioWord, cand: &SioWord) -> (Vec<String>, String) {
    let carrying: Vec<_> = CLASS_SYMMETRIES
        .into_iter()
        .filter(|&s| sio_symmetry(base, s).ok().as_ref() == Some(cand))
        .collect();
    let names = carrying.iter().map(|s| s.to_string()).collect();
    let (bs, bf) = base.type_of();
    let (cs, cf) = cand.type_of();
    if carrying.is_empty() {
        let why = if (bs, bf) == (cs, cf) {
            "same type, but not a class-symmetry image".to_string()
        } else {
            format!("type ({cs}, {cf}) differs from ({bs}, {bf}); not a class-symmetry image")
        };
        return (names, format!("lemma does not apply: {why}"));
    }
    let verdicts: Vec<String> = carrying
        .iter()
        .map(|&s| match LemmaBijection::new(base, s) {
            Ok(_) => format!("lemma applies via {s}"),
            Err(e) => format!("lemma does not apply via {s}: {e}"),
        })
        .collect();
    (names, verdicts.join("; "))
}

pub fn discrepancy_experiment(horizon: usize, budget: &Budget) -> Result<DiscrepancyReport> {
    let parse = |s: &str| -> SioWord { s.parse().expect("valid word") };
    let base = parse("w3 m4");
    let cands = [parse("w4 w3"), parse("w4 m3")];
    let mut words = vec![base.clone()];
    words.extend(cands.iter().cloned());
    let mut vectors = avoidance_vectors(&words, horizon, budget)?.into_iter();
    let base_vector = vectors.next().expect("one vector per word");
    let candidates: Vec<Candidate> = cands
        .iter()
        .zip(vectors)
        .map(|(c, vector)| {
            let first_difference = base_vector.first_difference(&vector);
            let (symmetries, lemma_verdict) = lemma_verdict(&base, c);
            let (start, finish) = c.type_of();
            Candidate {
                word: c.to_string(),
                start,
                finish,
                matches_base: first_difference.is_none(),
                first_difference,
                symmetries,
                lemma_verdict,
                vector,
            }
        })
        .collect();
    let matching: Vec<&str> = candidates
        .iter()
        .filter(|c| c.matches_base)
        .map(|c| c.word.as_str())
        .collect();
    let outcome = match matching.as_slice() {
        [] => format!("neither candidate matches {base} up to n = {horizon}"),
        [one] => format!("{base} matches {one} only, up to n = {horizon}"),
        _ => format!("{base} matches both candidates up to n = {horizon}"),
    };
    Ok(DiscrepancyReport {
        horizon,
        base: base.to_string(),
        base_vector,
        candidates,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let r = discrepancy_experiment(8, &Budget::unlimited()).unwrap();
        assert_eq!(r.candidates[0].symmetries, vec!["rci".to_string()]);
        assert!(r.candidates[0].lemma_verdict.starts_with("lemma applies"));
        assert!(r.candidates[1].symmetries.is_empty());
        assert!(r.candidates[1].lemma_verdict.contains("differs"));
        assert!(r.candidates[0].matches_base);
    }
}
