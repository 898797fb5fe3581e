//! Dimension vectors `(a_i^+, a_i^-)_{i=1..n}` of `Q_n` with constant pair-sum `m`.
//!
//! Text form: pairs separated by `;`, components by `,`, e.g. `2,1;2,1;2,1`. A pair may
//! be repeated with `(a,b)*r`, so `(4,0)*2;(2,2)*2` is `4,0;4,0;2,2;2,2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::SubsetMask;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct DimVector {
    pairs: Vec<(u32, u32)>,
}

impl DimVector {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        let Some(&(p, q)) = pairs.first() else {
            return Err(Error::arg("a dimension vector needs at least one pair"));
        };
        let m = p as u64 + q as u64;
        if let Some(i) = pairs.iter().position(|&(a, b)| a as u64 + b as u64 != m) {
            return Err(Error::arg(format!(
                "pair {} has sum {} but pair 1 has sum {m}",
                i + 1,
                pairs[i].0 as u64 + pairs[i].1 as u64
            )));
        }
        Ok(DimVector { pairs })
    }

    /// `alpha(n, m) = (m - 1, 1)^n`.
    pub fn alpha_nm(n: usize, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::arg("alpha(n, m) needs n >= 1 and m >= 1"));
        }
        Self::new(vec![(m - 1, 1); n])
    }

    /// `alpha(n, m, A)`: `(m - 1, 1)` on the pairs in `A`, `(m, 0)` elsewhere.
    pub fn alpha_nm_on(m: u32, subset: SubsetMask) -> Result<Self> {
        if m == 0 {
            return Err(Error::arg("alpha(n, m, A) needs m >= 1"));
        }
        Self::new(
            (1..=subset.ground())
                .map(|i| {
                    if subset.contains(i) {
                        (m - 1, 1)
                    } else {
                        (m, 0)
                    }
                })
                .collect(),
        )
    }

    /// The generator `alpha_A` of the character `psi_A`: `(0,1)` on `A`, `(1,0)` off it.
    pub fn generator(subset: SubsetMask) -> Self {
        DimVector {
            pairs: (1..=subset.ground())
                .map(|i| if subset.contains(i) { (0, 1) } else { (1, 0) })
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    /// The level `m = a_i^+ + a_i^-`.
    pub fn level(&self) -> u32 {
        self.pairs[0].0 + self.pairs[0].1
    }

    /// Swaps `a_i^+` and `a_i^-` of pair `i` (0-based).
    pub fn flip(&mut self, i: usize) {
        let (a, b) = self.pairs[i];
        self.pairs[i] = (b, a);
    }

    /// Pair `i` of the result is pair `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::arg("not a permutation of the pair indices"));
        }
        Ok(DimVector {
            pairs: perm.iter().map(|&p| self.pairs[p]).collect(),
        })
    }

    /// Orbit representative under independent pair flips and pair permutations.
    pub fn bn_canonical(&self) -> Self {
        let mut pairs: Vec<(u32, u32)> = self
            .pairs
            .iter()
            .map(|&(a, b)| if a >= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_by(|x, y| y.cmp(x));
        DimVector { pairs }
    }

    /// `a_1^+ >= ... >= a_n^+ >= a_n^- >= ... >= a_1^-`.
    pub fn is_sorted_for_semisimple(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].0 >= w[1].0)
            && self.pairs.last().is_some_and(|&(a, b)| a >= b)
    }

    pub fn to_vertex_dims(&self) -> Vec<u32> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

impl TryFrom<Vec<(u32, u32)>> for DimVector {
    type Error = Error;

    fn try_from(pairs: Vec<(u32, u32)>) -> Result<Self> {
        DimVector::new(pairs)
    }
}

impl From<DimVector> for Vec<(u32, u32)> {
    fn from(d: DimVector) -> Self {
        d.pairs
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{a},{b}")?;
        }
        Ok(())
    }
}

impl FromStr for DimVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut sum: Option<u64> = None;
        for (index, raw) in s.split(';').enumerate() {
            let item = raw.trim();
            let parse_err = |reason: &str| Error::Parse {
                index: index + 1,
                item: item.to_string(),
                reason: reason.to_string(),
            };
            let (body, repeat) = match item.strip_prefix('(') {
                Some(rest) => {
                    let (inner, tail) = rest
                        .split_once(')')
                        .ok_or_else(|| parse_err("missing `)`"))?;
                    let tail = tail.trim();
                    let repeat = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('*')
                            .ok_or_else(|| parse_err("expected `*r` after `)`"))?
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| parse_err("repetition count is not an integer"))?
                    };
                    (inner, repeat)
                }
                None => (item, 1),
            };
            if repeat == 0 {
                return Err(parse_err("repetition count must be positive"));
            }
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| parse_err("expected `a+,a-`"))?;
            let a: u32 = a
                .trim()
                .parse()
                .map_err(|_| parse_err("a+ is not a nonnegative integer"))?;
            let b: u32 = b
                .trim()
                .parse()
                .map_err(|_| parse_err("a- is not a nonnegative integer"))?;
            let this = a as u64 + b as u64;
            match sum {
                None => sum = Some(this),
                Some(m) if m != this => {
                    return Err(parse_err(&format!(
                        "pair sum {this} differs from level {m}"
                    )))
                }
                _ => {}
            }
            pairs.extend(std::iter::repeat_n((a, b), repeat));
        }
        DimVector::new(pairs)
    }
}
