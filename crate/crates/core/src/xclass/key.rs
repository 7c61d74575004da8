use std::fmt;

use serde::{Serialize, Serializer};

use super::{XLetter, XWord};

/// Words with equal keys have permuted pair letters that differ only in
/// sign and coordinate order, and terminals equal up to sign; such words
/// are Wilf-equivalent in X. The word `1` has no pairs and terminal `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WilfKey {
    /// Sorted, each normalised to `(min(|a|,|b|), max(|a|,|b|))`.
    pub pairs: Vec<(u32, u32)>,
    pub terminal: u32,
}

impl WilfKey {
    pub fn of(w: &XWord) -> WilfKey {
        let mut pairs = Vec::new();
        let mut terminal = 0;
        for &l in w.letters() {
            match l {
                XLetter::Pair(a, b) => {
                    let (a, b) = (a.unsigned_abs(), b.unsigned_abs());
                    pairs.push((a.min(b), a.max(b)));
                }
                XLetter::Mono(m) => terminal = m.unsigned_abs(),
                XLetter::One => {}
            }
        }
        pairs.sort_unstable();
        WilfKey { pairs, terminal }
    }

    pub fn size(&self) -> u32 {
        if self.terminal == 0 {
            return 1;
        }
        self.terminal + self.pairs.iter().map(|(a, b)| a + b).sum::<u32>()
    }
}

impl fmt::Display for WilfKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}};{}", pairs.join(""), self.terminal)
    }
}

impl Serialize for WilfKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
