//! Collapse statistics: how many patterns of each size there are, how many
//! distinct avoidance behaviours they show, and how many classes the
//! structural equivalences of the class already account for.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{avoidance_vectors, rewrite_classes, Budget, ClassTag};
use crate::error::{Error, Result};
use crate::series::Series;
use crate::sio::{enumerate_sio, SioWord};
use crate::xclass::{containment_series, enumerate_words, MVariant, WilfKey};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollapseRow {
    pub n: usize,
    pub class_count: u64,
    /// Distinct avoidance vectors among size-`n` patterns, up to
    /// `vector_horizon`.
    pub w_emp: usize,
    /// Wilf keys (X) or rewrite-closure classes (SIO) at size `n`.
    pub w_thy: usize,
    pub vector_horizon: usize,
    pub emp_ratio: f64,
    pub thy_ratio: f64,
}

impl CollapseRow {
    fn new(
        n: usize,
        class_count: usize,
        w_emp: usize,
        w_thy: usize,
        vector_horizon: usize,
    ) -> Self {
        CollapseRow {
            n,
            class_count: class_count as u64,
            w_emp,
            w_thy,
            vector_horizon,
            emp_ratio: w_emp as f64 / class_count as f64,
            thy_ratio: w_thy as f64 / class_count as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordBound {
    pub word: String,
    pub disjoint: usize,
    pub lower_bound: u64,
    pub class_size: usize,
}

/// Disjoint occurrences of a rewritable factor in every word of one size.
/// Each occurrence can be rewritten independently, so a word with `c`
/// occurrences has a rewrite class of at least `2^c` words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub factor: String,
    pub size: usize,
    /// occurrence count → number of words
    pub histogram: BTreeMap<usize, usize>,
    pub bounds_hold: bool,
    pub words: Vec<WordBound>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollapseStats {
    pub class: ClassTag,
    pub rows: Vec<CollapseRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<FactorReport>,
}

impl CollapseStats {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialise")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "class_count",
            "w_emp",
            "w_thy",
            "vector_horizon",
            "emp_ratio",
            "thy_ratio",
        ])
        .expect("in-memory write");
        for r in &self.rows {
            w.serialize((
                r.n,
                r.class_count,
                r.w_emp,
                r.w_thy,
                r.vector_horizon,
                r.emp_ratio,
                r.thy_ratio,
            ))
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

/// Order of the containment series used to separate X patterns of size `n`.
fn x_vector_horizon(n: usize) -> usize {
    (2 * n).max(10)
}

fn x_rows(max_n: usize, budget: &Budget) -> Result<Vec<CollapseRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        budget.check(n - 1)?;
        let words = enumerate_words(n);
        // equal keys give equal series, so one representative per key
        let mut reps: HashMap<WilfKey, usize> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            reps.entry(w.wilf_key()).or_insert(i);
        }
        let order = x_vector_horizon(n);
        let series: HashSet<Series> = reps
            .values()
            .map(|&i| containment_series(&words[i], order, MVariant::StartSignRestricted))
            .collect();
        rows.push(CollapseRow::new(
            n,
            words.len(),
            series.len(),
            reps.len(),
            order,
        ));
    }
    Ok(rows)
}

fn sio_rows(max_n: usize, horizon: usize, budget: &Budget) -> Result<Vec<CollapseRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        budget.check(n - 1)?;
        let words = enumerate_sio(n);
        let thy = rewrite_classes(&words).len();
        let h = horizon.max(n);
        let vectors = avoidance_vectors(&words, h, budget)
            .map_err(|_| Error::BudgetExceeded { completed: n - 1 })?;
        let emp: HashSet<&[u64]> = vectors.iter().map(|v| v.counts.as_slice()).collect();
        rows.push(CollapseRow::new(n, words.len(), emp.len(), thy, h));
    }
    Ok(rows)
}

pub fn factor_report(factor: &SioWord, size: usize) -> FactorReport {
    let words = enumerate_sio(size);
    let mut class_size = HashMap::new();
    for class in rewrite_classes(&words) {
        for w in &class {
            class_size.insert(w.clone(), class.len());
        }
    }
    let mut histogram = BTreeMap::new();
    let mut bounds_hold = true;
    let mut out: Vec<WordBound> = words
        .iter()
        .map(|w| {
            let disjoint = w.disjoint_factor_count(factor);
            *histogram.entry(disjoint).or_insert(0) += 1;
            let lower_bound = 1u64 << disjoint;
            let class_size = class_size[w];
            bounds_hold &= class_size as u64 >= lower_bound;
            WordBound {
                word: w.to_string(),
                disjoint,
                lower_bound,
                class_size,
            }
        })
        .collect();
    out.sort_by(|a, b| a.word.cmp(&b.word));
    FactorReport {
        factor: factor.to_string(),
        size,
        histogram,
        bounds_hold,
        words: out,
    }
}

/// Collapse table for sizes `1..=max_n`. SIO avoidance vectors run to
/// `horizon` (or `n` if larger), and the SIO report also carries the
/// disjoint-factor bounds for `w3 m4` at size `max_n`.
pub fn collapse_stats(
    class: ClassTag,
    max_n: usize,
    horizon: usize,
    budget: &Budget,
) -> Result<CollapseStats> {
    match class {
        ClassTag::X => Ok(CollapseStats {
            class,
            rows: x_rows(max_n, budget)?,
            factor: None,
        }),
        ClassTag::Sio => {
            let rows = sio_rows(max_n, horizon, budget)?;
            let factor: SioWord = "w3 m4".parse().expect("valid word");
            Ok(CollapseStats {
                class,
                rows,
                factor: Some(factor_report(&factor, max_n)),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_table() {
        let s = collapse_stats(ClassTag::X, 6, 0, &Budget::unlimited()).unwrap();
        let counts: Vec<u64> = s.rows.iter().map(|r| r.class_count).collect();
        assert_eq!(counts, vec![1, 2, 6, 20, 68, 232]);
        let thy: Vec<usize> = s.rows.iter().map(|r| r.w_thy).collect();
        assert_eq!(&thy[1..4], &[1, 2, 5]);
        assert!(s
            .rows
            .iter()
            .all(|r| r.w_emp <= r.w_thy && r.w_thy as u64 <= r.class_count));
    }

    #[test]
    fn sio_table() {
        let s = collapse_stats(ClassTag::Sio, 7, 9, &Budget::unlimited()).unwrap();
        assert!(s
            .rows
            .iter()
            .all(|r| r.w_emp <= r.w_thy && r.w_thy as u64 <= r.class_count));
        let f = s.factor.unwrap();
        assert!(f.bounds_hold);
        assert_eq!(f.histogram.values().sum::<usize>(), 117);
        assert_eq!(
            f.histogram[&1],
            f.words.iter().filter(|w| w.disjoint == 1).count()
        );
    }
}
