//! Semisimple sums of characters `⊕ psi_A^{b_A}` and the straightening relation
//! `e_A e_B = e_{A∪B} e_{A∩B}` of the semigroup of dimension vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::SubsetMask;
use crate::dim_vector::DimVector;
use crate::error::{Error, Result};

/// A nonempty multiset of characters `psi_A`, `A ⊆ {1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterMultiset {
    n: usize,
    mult: BTreeMap<SubsetMask, u32>,
}

impl CharacterMultiset {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (SubsetMask, u32)>) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for (a, k) in entries {
            if a.ground() != n {
                return Err(Error::arg(format!(
                    "character {a} is not over a ground set of size {n}"
                )));
            }
            if k == 0 {
                continue;
            }
            *mult.entry(a).or_insert(0) += k;
        }
        if mult.is_empty() {
            return Err(Error::arg("a character multiset must be nonempty"));
        }
        Ok(CharacterMultiset { n, mult })
    }

    /// Parses `{1,2}^2;{};{3}` style input (multiplicity defaults to 1).
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for (index, raw) in s.split(';').enumerate() {
            let item = raw.trim();
            let err = |reason: &str| Error::Parse {
                index: index + 1,
                item: item.to_string(),
                reason: reason.to_string(),
            };
            let (set, k) = match item.split_once('^') {
                Some((set, k)) => (
                    set.trim(),
                    k.trim()
                        .parse::<u32>()
                        .map_err(|_| err("multiplicity is not an integer"))?,
                ),
                None => (item, 1),
            };
            let inner = set
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| err("expected a set like `{1,2}`"))?;
            let elements = inner
                .split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| {
                    e.parse::<usize>()
                        .map_err(|_| err("element is not an integer"))
                })
                .collect::<Result<Vec<_>>>()?;
            let a = SubsetMask::from_elements(&elements, n).map_err(|e| err(&e.to_string()))?;
            entries.push((a, k));
        }
        Self::new(n, entries)
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, a: SubsetMask) -> u32 {
        self.mult.get(&a).copied().unwrap_or(0)
    }

    /// `(A, b_A)` with `b_A >= 1`, ascending by bitmask.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, u32)> + '_ {
        self.mult.iter().map(|(&a, &k)| (a, k))
    }

    pub fn degree(&self) -> u64 {
        self.mult.values().map(|&k| k as u64).sum()
    }

    /// Pairs of supported characters neither of which contains the other.
    pub fn incomparable_pairs(&self) -> Vec<(SubsetMask, SubsetMask)> {
        let keys: Vec<SubsetMask> = self.mult.keys().copied().collect();
        let mut out = Vec::new();
        for (i, &a) in keys.iter().enumerate() {
            for &b in &keys[i + 1..] {
                if a.is_incomparable(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The support is totally ordered by inclusion.
    pub fn is_chain(&self) -> bool {
        self.incomparable_pairs().is_empty()
    }

    /// Replaces one copy each of `A` and `B` by `A ∪ B` and `A ∩ B`.
    pub fn straighten(&mut self, a: SubsetMask, b: SubsetMask) -> Result<()> {
        self.straighten_times(a, b, 1)
    }

    fn straighten_times(&mut self, a: SubsetMask, b: SubsetMask, times: u32) -> Result<()> {
        if !a.is_incomparable(b) {
            return Err(Error::arg(format!("{a} and {b} are comparable")));
        }
        if self.multiplicity(a) < times || self.multiplicity(b) < times {
            return Err(Error::arg(format!(
                "{a} or {b} does not occur {times} times"
            )));
        }
        for x in [a, b] {
            let e = self.mult.get_mut(&x).expect("checked above");
            *e -= times;
            if *e == 0 {
                self.mult.remove(&x);
            }
        }
        *self.mult.entry(a.union(b)?).or_insert(0) += times;
        *self.mult.entry(a.intersection(b)?).or_insert(0) += times;
        Ok(())
    }
}

impl fmt::Display for CharacterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{a}^{k}")?;
        }
        Ok(())
    }
}

/// Applies the straightening relation until the support is a chain under inclusion.
pub fn canonicalize_characters(c: &CharacterMultiset) -> CharacterMultiset {
    let mut out = c.clone();
    loop {
        let Some(&(a, b)) = out.incomparable_pairs().first() else {
            return out;
        };
        let times = out.multiplicity(a).min(out.multiplicity(b));
        out.straighten_times(a, b, times)
            .expect("pair taken from the current support");
    }
}

/// `Σ b_A α_A`, where `α_A` is `(0,1)` on `A` and `(1,0)` off it.
pub fn dimvector_of_characters(c: &CharacterMultiset) -> DimVector {
    let pairs = (1..=c.n)
        .map(|i| {
            c.iter().fold((0u32, 0u32), |(p, q), (a, k)| {
                if a.contains(i) {
                    (p, q + k)
                } else {
                    (p + k, q)
                }
            })
        })
        .collect();
    DimVector::new(pairs).expect("every character contributes to each pair once")
}

/// The semisimple point `M_α = psi_∅^{a_n^+} ⊕ ⨁_i psi_{i+1..n}^{a_i^+ - a_{i+1}^+} ⊕ psi_N^{a_1^-}`
/// of a dimension vector with `a_1^+ >= ... >= a_n^+ >= a_n^- >= ... >= a_1^-`.
pub fn build_m_alpha(alpha: &DimVector) -> Result<CharacterMultiset> {
    if !alpha.is_sorted_for_semisimple() {
        return Err(Error::arg(format!(
            "{alpha} is not sorted as a_1^+ >= ... >= a_n^+ >= a_n^- >= ... >= a_1^-; canonicalize it first"
        )));
    }
    let n = alpha.n();
    let p = alpha.pairs();
    let mut entries = vec![(SubsetMask::empty(n)?, p[n - 1].0)];
    for i in 1..n {
        // 1-based i: the tail {i+1..n}
        let tail: Vec<usize> = (i + 1..=n).collect();
        entries.push((SubsetMask::from_elements(&tail, n)?, p[i - 1].0 - p[i].0));
    }
    entries.push((SubsetMask::full(n)?, p[0].1));
    CharacterMultiset::new(n, entries)
}
