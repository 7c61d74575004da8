//! Permutations in one-line notation, the eight symmetries of the square,
//! direct and skew sums, and the backtracking containment oracle that every
//! greedy matcher in this crate is checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. The empty permutation is
/// allowed and is contained in everything.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { values })
    }

    /// Builds the permutation order-isomorphic to `seq` (distinct keys).
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut values = vec![0u32; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Self { values }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Self {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// Every permutation of size `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation {
                values: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn apply_symmetry(&self, s: Symmetry) -> Permutation {
        let n = self.len() as i64;
        let mut values = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            let x = 2 * (i as i64 + 1) - (n + 1);
            let y = 2 * v as i64 - (n + 1);
            let (x, y) = s.act(x, y);
            values[((x + n + 1) / 2 - 1) as usize] = ((y + n + 1) / 2) as u32;
        }
        Permutation { values }
    }

    /// `self ⊕ other`: `other` placed above and to the right.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u32;
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + shift))
            .collect();
        Permutation { values }
    }

    /// `self ⊖ other`: `self` placed above and to the left.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len() as u32;
        let values = self
            .values
            .iter()
            .map(|&v| v + shift)
            .chain(other.values.iter().copied())
            .collect();
        Permutation { values }
    }

    pub fn compose(&self, other: &Permutation, mode: SumMode) -> Permutation {
        match mode {
            SumMode::Sum => self.direct_sum(other),
            SumMode::Skew => self.skew_sum(other),
        }
    }

    /// Splits into the finest sequence of sum-indecomposable blocks.
    pub fn sum_decompose(&self) -> Vec<Permutation> {
        let mut parts = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                let block = self.values[start..=i]
                    .iter()
                    .map(|&v| v - start as u32)
                    .collect();
                parts.push(Permutation { values: block });
                start = i + 1;
            }
        }
        parts
    }

    pub fn is_sum_indecomposable(&self) -> bool {
        !self.is_empty() && self.sum_decompose().len() == 1
    }

    pub fn inversion_graph(&self) -> InversionGraph {
        let mut edges = BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.values[i] > self.values[j] {
                    edges.insert((i, j));
                }
            }
        }
        InversionGraph {
            n: self.len(),
            edges,
        }
    }

    /// Backtracking search for a subsequence of `self` order-isomorphic to
    /// `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_bruteforce(self, pattern)
    }
}

/// Reports whether `text` contains `pattern`. Positions are matched left to
/// right, pruning a branch once too few text positions remain.
pub fn contains_bruteforce(text: &Permutation, pattern: &Permutation) -> bool {
    fn search(text: &[u32], pat: &[u32], chosen: &mut Vec<usize>, from: usize) -> bool {
        let k = chosen.len();
        if k == pat.len() {
            return true;
        }
        let remaining = pat.len() - k;
        if text.len() < from + remaining {
            return false;
        }
        for pos in from..=text.len() - remaining {
            let v = text[pos];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(l, &p)| (pat[l] < pat[k]) == (text[p] < v));
            if consistent {
                chosen.push(pos);
                if search(text, pat, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > text.len() {
        return false;
    }
    search(
        &text.values,
        &pattern.values,
        &mut Vec::with_capacity(pattern.len()),
        0,
    )
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Whitespace- or comma-separated integers; a bare digit string is read
    /// one digit per entry.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        let values: Result<Vec<u32>> = if separated {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {c:?} in {s:?}")))
                })
                .collect()
        };
        Permutation::new(values?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    Sum,
    Skew,
}

/// Graph on positions (0-based) with an edge `(i, j)`, `i < j`, whenever
/// the pair is an inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl InversionGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Vertex order along the graph when it is a single path (a lone vertex
    /// counts), starting from the endpoint of smaller index.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        if self.n == 1 {
            return Some(vec![0]);
        }
        if self.edges.len() != self.n - 1 {
            return None;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        if adj.iter().any(|a| a.is_empty() || a.len() > 2) {
            return None;
        }
        let start = (0..self.n).find(|&v| adj[v].len() == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&v| v != prev) {
            if order.len() == self.n {
                return None;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }
}

/// One of the eight symmetries of the square acting on permutation
/// diagrams. Internally the action on a centred point is: optionally swap
/// the coordinates (inverse), then optionally negate x (reverse) and y
/// (complement).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    inverse: bool,
    reverse: bool,
    complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::from_flags(false, false, false);
    pub const REVERSE: Symmetry = Symmetry::from_flags(true, false, false);
    pub const COMPLEMENT: Symmetry = Symmetry::from_flags(false, true, false);
    pub const INVERSE: Symmetry = Symmetry::from_flags(false, false, true);
    pub const REVERSE_COMPLEMENT: Symmetry = Symmetry::from_flags(true, true, false);
    pub const REVERSE_INVERSE: Symmetry = Symmetry::from_flags(true, false, true);
    pub const COMPLEMENT_INVERSE: Symmetry = Symmetry::from_flags(false, true, true);
    pub const REVERSE_COMPLEMENT_INVERSE: Symmetry = Symmetry::from_flags(true, true, true);

    pub const ALL: [Symmetry; 8] = [
        Self::IDENTITY,
        Self::REVERSE,
        Self::COMPLEMENT,
        Self::INVERSE,
        Self::REVERSE_COMPLEMENT,
        Self::REVERSE_INVERSE,
        Self::COMPLEMENT_INVERSE,
        Self::REVERSE_COMPLEMENT_INVERSE,
    ];

    /// `reverse ∘ complement ∘ inverse` restricted to the chosen factors.
    pub const fn from_flags(reverse: bool, complement: bool, inverse: bool) -> Self {
        Symmetry {
            inverse,
            reverse,
            complement,
        }
    }

    fn act(self, x: i64, y: i64) -> (i64, i64) {
        let (x, y) = if self.inverse { (y, x) } else { (x, y) };
        (
            if self.reverse { -x } else { x },
            if self.complement { -y } else { y },
        )
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(self, inner: Symmetry) -> Symmetry {
        let (x, y) = inner.act(1, 2);
        let (x, y) = self.act(x, y);
        Symmetry {
            inverse: x.abs() == 2,
            reverse: x < 0,
            complement: y < 0,
        }
    }

    pub fn inverse_element(self) -> Symmetry {
        Self::ALL
            .into_iter()
            .find(|&t| t.compose(self) == Self::IDENTITY)
            .expect("group element has an inverse")
    }

    pub fn name(self) -> &'static str {
        match (self.reverse, self.complement, self.inverse) {
            (false, false, false) => "id",
            (true, false, false) => "r",
            (false, true, false) => "c",
            (false, false, true) => "i",
            (true, true, false) => "rc",
            (true, false, true) => "ri",
            (false, true, true) => "ci",
            (true, true, true) => "rci",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Symmetry::ALL
            .into_iter()
            .find(|sym| sym.name() == key)
            .or(match key.as_str() {
                "identity" => Some(Symmetry::IDENTITY),
                "reverse" => Some(Symmetry::REVERSE),
                "complement" => Some(Symmetry::COMPLEMENT),
                "inverse" => Some(Symmetry::INVERSE),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown symmetry {s:?}")))
    }
}
