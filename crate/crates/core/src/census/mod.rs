//! Avoidance-vector censuses: every pattern of a given size is run against
//! every class member up to a horizon, and patterns are grouped by equal
//! count vectors. Equal vectors are only evidence of Wilf-equivalence up to
//! the horizon, and reports say so.

mod discrepancy;
mod rewrite;
mod stats;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sio::{enumerate_sio, sio_contains, SioWord};
use crate::xclass::{enumerate_words, greedy_contains, XWord};

pub use discrepancy::{discrepancy_experiment, Candidate, DiscrepancyReport};
pub use rewrite::{rewrite_classes, rewrite_neighbours};
pub use stats::{collapse_stats, CollapseRow, CollapseStats, FactorReport, WordBound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassTag {
    X,
    #[serde(rename = "SIO")]
    Sio,
}

impl ClassTag {
    pub fn default_horizon(self) -> usize {
        match self {
            ClassTag::X => 10,
            ClassTag::Sio => 12,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::X => "X",
            ClassTag::Sio => "SIO",
        })
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(ClassTag::X),
            "sio" => Ok(ClassTag::Sio),
            _ => Err(Error::Parse(format!("unknown class {s:?}"))),
        }
    }
}

/// Wall-clock allowance for a long computation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Self {
            deadline: Some(Instant::now() + Duration::from_secs_f64(secs.max(0.0))),
        }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Errors with `completed` as the largest finished size once the
    /// deadline has passed.
    pub fn check(&self, completed: usize) -> Result<()> {
        if self.exhausted() {
            Err(Error::BudgetExceeded { completed })
        } else {
            Ok(())
        }
    }
}

/// The operations a census needs from a class's word model.
pub trait ClassWord:
    Clone + Eq + std::hash::Hash + fmt::Display + FromStr<Err = Error> + Send + Sync
{
    const TAG: ClassTag;
    fn enumerate(n: usize) -> Vec<Self>;
    fn word_size(&self) -> usize;
    fn contained_in(&self, text: &Self) -> bool;
}

impl ClassWord for XWord {
    const TAG: ClassTag = ClassTag::X;

    fn enumerate(n: usize) -> Vec<Self> {
        enumerate_words(n)
    }

    fn word_size(&self) -> usize {
        self.size()
    }

    fn contained_in(&self, text: &Self) -> bool {
        greedy_contains(self, text)
    }
}

impl ClassWord for SioWord {
    const TAG: ClassTag = ClassTag::Sio;

    fn enumerate(n: usize) -> Vec<Self> {
        enumerate_sio(n)
    }

    fn word_size(&self) -> usize {
        self.size()
    }

    fn contained_in(&self, text: &Self) -> bool {
        sio_contains(self, text)
    }
}

/// `counts[i]` is the number of avoiders of size `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidanceVector {
    pub pattern: String,
    pub size: usize,
    pub counts: Vec<u64>,
}

impl AvoidanceVector {
    pub fn horizon(&self) -> usize {
        self.counts.len()
    }

    /// First size at which the two vectors differ.
    pub fn first_difference(&self, other: &AvoidanceVector) -> Option<usize> {
        self.counts
            .iter()
            .zip(&other.counts)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }
}

/// Avoidance vectors of `patterns` up to `horizon`, one class layer at a
/// time. Layers below a pattern's size are counted without testing.
pub fn avoidance_vectors<W: ClassWord>(
    patterns: &[W],
    horizon: usize,
    budget: &Budget,
) -> Result<Vec<AvoidanceVector>> {
    let mut counts = vec![Vec::with_capacity(horizon); patterns.len()];
    for n in 1..=horizon {
        budget.check(n - 1)?;
        let layer = W::enumerate(n);
        let total = layer.len() as u64;
        let layer_counts: Vec<u64> = patterns
            .par_iter()
            .map(|p| {
                if p.word_size() > n {
                    total
                } else {
                    layer.iter().filter(|t| !p.contained_in(t)).count() as u64
                }
            })
            .collect();
        for (c, k) in counts.iter_mut().zip(layer_counts) {
            c.push(k);
        }
    }
    Ok(patterns
        .iter()
        .zip(counts)
        .map(|(p, counts)| AvoidanceVector {
            pattern: p.to_string(),
            size: p.word_size(),
            counts,
        })
        .collect())
}

pub fn avoidance_vector(
    class: ClassTag,
    pattern: &str,
    horizon: usize,
    budget: &Budget,
) -> Result<AvoidanceVector> {
    fn one<W: ClassWord>(
        pattern: &str,
        horizon: usize,
        budget: &Budget,
    ) -> Result<AvoidanceVector> {
        let w: W = pattern.parse()?;
        Ok(avoidance_vectors(&[w], horizon, budget)?.remove(0))
    }
    match class {
        ClassTag::X => one::<XWord>(pattern, horizon, budget),
        ClassTag::Sio => one::<SioWord>(pattern, horizon, budget),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyGroup {
    pub key: String,
    pub patterns: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub class: ClassTag,
    pub pattern_size: usize,
    pub horizon: usize,
    /// How vector groups should be read: equal up to the horizon only.
    pub relation: String,
    pub vectors: Vec<AvoidanceVector>,
    pub groups: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub key_groups: Option<Vec<KeyGroup>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rewrite_groups: Option<Vec<Vec<String>>>,
    /// Whether every structural group lies inside one vector group.
    pub refinement_holds: bool,
}

/// Sorts members and then groups, giving a canonical partition.
fn canonical(mut groups: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for g in &mut groups {
        g.sort();
    }
    groups.sort();
    groups
}

fn vector_groups(vectors: &[AvoidanceVector]) -> Vec<Vec<String>> {
    let mut by_counts: BTreeMap<&[u64], Vec<String>> = BTreeMap::new();
    for v in vectors {
        by_counts
            .entry(&v.counts)
            .or_default()
            .push(v.pattern.clone());
    }
    canonical(by_counts.into_values().collect())
}

fn refines(fine: &[Vec<String>], coarse: &[Vec<String>]) -> bool {
    let mut owner = BTreeMap::new();
    for (i, g) in coarse.iter().enumerate() {
        for p in g {
            owner.insert(p.as_str(), i);
        }
    }
    fine.iter().all(|g| {
        let first = owner.get(g[0].as_str());
        g.iter().all(|p| owner.get(p.as_str()) == first)
    })
}

impl CensusReport {
    fn assemble(
        class: ClassTag,
        k: usize,
        horizon: usize,
        mut vectors: Vec<AvoidanceVector>,
    ) -> Self {
        vectors.sort_by(|a, b| a.pattern.cmp(&b.pattern));
        let groups = vector_groups(&vectors);
        CensusReport {
            class,
            pattern_size: k,
            horizon,
            relation: format!("empirically equivalent ({horizon})"),
            vectors,
            groups,
            key_groups: None,
            rewrite_groups: None,
            refinement_holds: true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["pattern".to_string(), "size".to_string()];
        header.extend((1..=self.horizon).map(|n| format!("n{n}")));
        w.write_record(&header).expect("in-memory write");
        for v in &self.vectors {
            let mut row = vec![v.pattern.clone(), v.size.to_string()];
            row.extend(v.counts.iter().map(u64::to_string));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

/// Census of all X patterns of size `k`, with Wilf-key groups.
pub fn census_x(k: usize, horizon: usize, budget: &Budget) -> Result<CensusReport> {
    let patterns = enumerate_words(k);
    let vectors = avoidance_vectors(&patterns, horizon, budget)?;
    let mut report = CensusReport::assemble(ClassTag::X, k, horizon, vectors);
    let mut by_key: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for p in &patterns {
        by_key
            .entry(p.wilf_key().to_string())
            .or_default()
            .push(p.to_string());
    }
    let key_groups: Vec<KeyGroup> = by_key
        .into_iter()
        .map(|(key, mut patterns)| {
            patterns.sort();
            KeyGroup { key, patterns }
        })
        .collect();
    let plain: Vec<Vec<String>> = key_groups.iter().map(|g| g.patterns.clone()).collect();
    report.refinement_holds = refines(&plain, &report.groups);
    report.key_groups = Some(key_groups);
    Ok(report)
}

/// Census of all SIO patterns of size `k`, with factor-rewrite groups.
pub fn census_sio(k: usize, horizon: usize, budget: &Budget) -> Result<CensusReport> {
    let patterns = enumerate_sio(k);
    let vectors = avoidance_vectors(&patterns, horizon, budget)?;
    let mut report = CensusReport::assemble(ClassTag::Sio, k, horizon, vectors);
    let rewrite = canonical(
        rewrite_classes(&patterns)
            .into_iter()
            .map(|g| g.iter().map(SioWord::to_string).collect())
            .collect(),
    );
    report.refinement_holds = refines(&rewrite, &report.groups);
    report.rewrite_groups = Some(rewrite);
    Ok(report)
}

pub fn census(class: ClassTag, k: usize, horizon: usize, budget: &Budget) -> Result<CensusReport> {
    if k == 0 || k > horizon {
        return Err(Error::Parse(format!(
            "pattern size {k} must be in 1..={horizon}"
        )));
    }
    match class {
        ClassTag::X => census_x(k, horizon, budget),
        ClassTag::Sio => census_sio(k, horizon, budget),
    }
}
