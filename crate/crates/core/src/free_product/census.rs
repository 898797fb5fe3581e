//! Two exhaustive censuses: the components of `rep_2 Z2^{*n}`, and the connected tree-like
//! full subquivers of the one quiver.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::build_one_quiver;
use crate::combinatorics::{SubsetMask, MAX_GROUND};
use crate::error::{Error, Result};

/// One component of `rep_2`: pairs in `A` have dimension `(1,1)`, pairs in `B` have
/// `(0,2)`, the rest `(2,0)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Rep2Row {
    pub a: SubsetMask,
    pub b: SubsetMask,
    /// `|A|`
    pub k: usize,
    pub rep_dim: u64,
    pub quot_dim: u64,
    pub singularities: u64,
    /// `r` in the singular local type `1 <=>r 1` (two dimension-1 vertices with `r` arrows
    /// each way), present when there are singularities.
    pub singular_arrows: Option<u32>,
}

impl Rep2Row {
    fn new(a: SubsetMask, b: SubsetMask) -> Self {
        let k = a.len();
        let (quot_dim, singularities, singular_arrows) = match k {
            0 | 1 => (0, 0, None),
            2 => (1, 0, None),
            _ => (2 * k as u64 - 3, 1u64 << (k - 1), Some(k as u32 - 1)),
        };
        Rep2Row {
            a,
            b,
            k,
            rep_dim: 2 * k as u64,
            quot_dim,
            singularities,
            singular_arrows,
        }
    }

    /// `1 <=>r 1`, or `-` for a smooth component.
    pub fn local_type(&self) -> String {
        match self.singular_arrows {
            Some(r) => format!("1 <=>{r} 1"),
            None => "-".to_string(),
        }
    }
}

/// Streams the `3^n` rows: `A` ascending by bitmask, then `B` over the subsets of the
/// complement, ascending.
pub struct Rep2Census {
    n: usize,
    a: u32,
    b: u32,
    done: bool,
}

impl Iterator for Rep2Census {
    type Item = Rep2Row;

    fn next(&mut self) -> Option<Rep2Row> {
        if self.done {
            return None;
        }
        let full = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        let row = Rep2Row::new(
            SubsetMask::from_bits_unchecked(self.a, self.n),
            SubsetMask::from_bits_unchecked(self.b, self.n),
        );
        let comp = full & !self.a;
        // next submask of `comp` in increasing order
        let next_b = ((self.b | !comp).wrapping_add(1)) & comp;
        if next_b != 0 {
            self.b = next_b;
        } else if self.a < full {
            self.a += 1;
            self.b = 0;
        } else {
            self.done = true;
        }
        Some(row)
    }
}

pub fn rep2_census(n: usize) -> Result<Rep2Census> {
    if !(1..=MAX_GROUND).contains(&n) {
        return Err(Error::arg(format!(
            "rep2 census needs 1 <= n <= {MAX_GROUND}, got {n}"
        )));
    }
    Ok(Rep2Census {
        n,
        a: 0,
        b: 0,
        done: false,
    })
}

/// Number of rows per `k = |A|`, index `k`.
pub fn rep2_counts(n: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n + 1];
    for row in rep2_census(n)? {
        counts[row.k] += 1;
    }
    Ok(counts)
}

/// Shapes of connected tree-like full subquivers of the one quiver.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TreeType {
    /// One vertex.
    Single,
    /// Two vertices joined by `k` arrows each way.
    Pair { k: u32 },
    /// A chain of three with multiplicities `k` and `k - 1`.
    Chain3 { k: u32 },
    /// A chain of four with multiplicities `1, 2, 1`.
    Chain4,
}

impl fmt::Display for TreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeType::Single => write!(f, "I"),
            TreeType::Pair { k } => write!(f, "II(k={k})"),
            TreeType::Chain3 { k } => write!(f, "III(k={k})"),
            TreeType::Chain4 => write!(f, "IV"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TreelikeCensus {
    pub n: usize,
    /// Vertex sets (as character lists) per type.
    pub instances: BTreeMap<TreeType, Vec<Vec<SubsetMask>>>,
    /// Tree-like subquivers matching none of the four shapes.
    pub unclassified: Vec<Vec<SubsetMask>>,
}

impl TreelikeCensus {
    pub fn types(&self) -> Vec<TreeType> {
        self.instances.keys().copied().collect()
    }
}

/// Multiplicities along the path if the tree is a path; `None` for branching trees.
fn path_multiplicities(q: &crate::quiver::Quiver) -> Option<Vec<u32>> {
    let v = q.vertex_count();
    let degrees: Vec<usize> = (0..v).map(|i| q.neighbors(i).count()).collect();
    if degrees.iter().any(|&d| d > 2) {
        return None;
    }
    let start = (0..v).find(|&i| degrees[i] <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = q.neighbors(cur).find(|&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order.windows(2).map(|w| q.arrows(w[0], w[1])).collect())
}

fn classify(q: &crate::quiver::Quiver) -> Option<TreeType> {
    let mults = path_multiplicities(q)?;
    match mults.as_slice() {
        [] => Some(TreeType::Single),
        &[k] => Some(TreeType::Pair { k }),
        &[a, b] => {
            let k = a.max(b);
            (k >= 2 && a.min(b) == k - 1).then_some(TreeType::Chain3 { k })
        }
        [1, 2, 1] => Some(TreeType::Chain4),
        _ => None,
    }
}

/// Exhaustive search over all `2^(2^n)` vertex subsets of the one quiver.
pub fn treelike_census(n: usize) -> Result<TreelikeCensus> {
    if !(2..=4).contains(&n) {
        return Err(Error::unsupported(format!(
            "tree-like census is exhaustive over 2^(2^n) subsets and supports 2 <= n <= 4, got {n}"
        )));
    }
    let q = build_one_quiver(n)?;
    let v = 1usize << n;
    let mut census = TreelikeCensus {
        n,
        instances: BTreeMap::new(),
        unclassified: Vec::new(),
    };
    for subset in 1u32..(1u32 << v) {
        let vertices: Vec<usize> = (0..v).filter(|&i| subset >> i & 1 == 1).collect();
        let sub = q.full_subquiver(&vertices);
        if !sub.is_tree_like() {
            continue;
        }
        let chars: Vec<SubsetMask> = vertices
            .iter()
            .map(|&i| SubsetMask::from_bits_unchecked(i as u32, n))
            .collect();
        match classify(&sub) {
            Some(t) => census.instances.entry(t).or_default().push(chars),
            None => census.unclassified.push(chars),
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    #[test]
    fn rep2_counts_small() {
        for n in 1..=8usize {
            let counts = rep2_counts(n).unwrap();
            for (k, &c) in counts.iter().enumerate() {
                assert_eq!(c as u128, (1u128 << (n - k)) * binomial(n as u64, k as u64));
            }
            assert_eq!(counts.iter().sum::<u64>(), 3u64.pow(n as u32));
        }
    }

    #[test]
    fn rep2_rows_are_disjoint_pairs() {
        let rows: Vec<_> = rep2_census(4).unwrap().collect();
        assert_eq!(rows.len(), 81);
        for r in &rows {
            assert_eq!(r.a.bits() & r.b.bits(), 0);
        }
        let mut keys: Vec<_> = rows.iter().map(|r| (r.a.bits(), r.b.bits())).collect();
        keys.dedup();
        assert_eq!(keys.len(), 81);
    }

    #[test]
    fn full_cube_n3() {
        let row = rep2_census(3).unwrap().find(|r| r.k == 3).unwrap();
        assert_eq!((row.rep_dim, row.quot_dim, row.singularities), (6, 3, 4));
        assert_eq!(row.local_type(), "1 <=>2 1");
    }

    #[test]
    fn treelike_n3() {
        let c = treelike_census(3).unwrap();
        assert!(c.unclassified.is_empty());
        assert_eq!(c.types().len(), 5);
        assert_eq!(c.instances[&TreeType::Single].len(), 8);
        assert!(treelike_census(5).is_err());
        assert!(treelike_census(1).is_err());
    }
}
