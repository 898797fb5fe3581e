//! Subsets of `N = {1..n}`, set partitions, Young labels and multiset coefficients.
//!
//! Subsets are bitmasks with ground element `i` stored at bit `i - 1`. The ground set is
//! capped at [`MAX_GROUND`] elements, which keeps `2^n`-vertex enumerations addressable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dim_vector::DimVector;
use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 16;

/// A subset `A` of the ground set `N = {1..n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SubsetMask {
    bits: u32,
    n: u8,
}

impl SubsetMask {
    pub fn new(bits: u32, n: usize) -> Result<Self> {
        check_ground(n)?;
        if bits >> n != 0 {
            return Err(Error::arg(format!(
                "bitmask {bits:#b} has bits outside the ground set of size {n}"
            )));
        }
        Ok(SubsetMask { bits, n: n as u8 })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    pub fn full(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(SubsetMask {
            bits: full_bits(n),
            n: n as u8,
        })
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(elements: &[usize], n: usize) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::arg(format!("element {e} is not in 1..={n}")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask { bits, n: n as u8 })
    }

    /// All `2^n` subsets in ascending bitmask order (`∅` first).
    pub fn all(n: usize) -> Result<impl Iterator<Item = SubsetMask>> {
        check_ground(n)?;
        let n8 = n as u8;
        Ok((0..(1u32 << n)).map(move |bits| SubsetMask { bits, n: n8 }))
    }

    pub(crate) fn from_bits_unchecked(bits: u32, n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND && bits >> n == 0);
        SubsetMask { bits, n: n as u8 }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Vertex index of this subset in `Q'_n`: the bitmask value.
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn ground(self) -> usize {
        self.n as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.ground() && self.bits & (1 << (element - 1)) != 0
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..32).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn complement(self) -> Self {
        SubsetMask {
            bits: !self.bits & full_bits(self.ground()),
            n: self.n,
        }
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    /// `true` when neither set contains the other.
    pub fn is_incomparable(self, other: SubsetMask) -> bool {
        !self.is_subset_of(other) && !other.is_subset_of(self)
    }

    pub fn union(self, other: SubsetMask) -> Result<Self> {
        self.same_ground(other)?;
        Ok(SubsetMask {
            bits: self.bits | other.bits,
            n: self.n,
        })
    }

    pub fn intersection(self, other: SubsetMask) -> Result<Self> {
        self.same_ground(other)?;
        Ok(SubsetMask {
            bits: self.bits & other.bits,
            n: self.n,
        })
    }

    pub fn sym_diff(self, other: SubsetMask) -> Result<Self> {
        sym_diff(self, other)
    }

    fn same_ground(self, other: SubsetMask) -> Result<()> {
        if self.n != other.n {
            return Err(Error::arg(format!(
                "subsets live over ground sets of different sizes ({} and {})",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::arg(format!(
            "ground-set size must be in 1..={MAX_GROUND}, got {n}"
        )));
    }
    Ok(())
}

fn full_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `(A ∪ B) \ (A ∩ B)`.
pub fn sym_diff(a: SubsetMask, b: SubsetMask) -> Result<SubsetMask> {
    a.same_ground(b)?;
    Ok(SubsetMask {
        bits: a.bits ^ b.bits,
        n: a.n,
    })
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The multiset coefficient `((k multichoose n)) = C(k + n - 1, n)`.
pub fn multiset_coeff(k: u64, n: u64) -> u128 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    binomial(k + n - 1, n)
}

/// A partition of `N = {1..n}` into nonempty disjoint blocks, kept in canonical order:
/// block size descending, then smallest element ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<SubsetMask>,
}

impl SetPartition {
    pub fn new(blocks: Vec<SubsetMask>, n: usize) -> Result<Self> {
        check_ground(n)?;
        let mut seen = 0u32;
        for b in &blocks {
            if b.ground() != n {
                return Err(Error::arg("block over a different ground set"));
            }
            if b.is_empty() {
                return Err(Error::arg("set partition blocks must be nonempty"));
            }
            if b.bits & seen != 0 {
                return Err(Error::arg(format!("block {b} overlaps an earlier block")));
            }
            seen |= b.bits;
        }
        if seen != full_bits(n) {
            return Err(Error::arg("blocks do not cover the ground set"));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| block_order_key(*b));
        Ok(SetPartition { n, blocks })
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block sizes in canonical (descending) order: the Young diagram of the partition.
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// `true` when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        self.n == coarser.n
            && self
                .blocks
                .iter()
                .all(|b| coarser.blocks.iter().any(|c| b.is_subset_of(*c)))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

fn block_order_key(b: SubsetMask) -> (std::cmp::Reverse<usize>, usize) {
    (std::cmp::Reverse(b.len()), b.min_element().unwrap_or(0))
}

/// Iterator over all set partitions of `{1..n}`, driven by restricted growth strings.
pub struct SetPartitions {
    n: usize,
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = self.materialize();
        self.advance();
        Some(current)
    }
}

impl SetPartitions {
    fn materialize(&self) -> SetPartition {
        let count = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut bits = vec![0u32; count];
        for (i, &b) in self.rgs.iter().enumerate() {
            bits[b] |= 1 << i;
        }
        let mut blocks: Vec<SubsetMask> = bits
            .into_iter()
            .map(|b| SubsetMask::from_bits_unchecked(b, self.n))
            .collect();
        blocks.sort_by_key(|b| block_order_key(*b));
        SetPartition { n: self.n, blocks }
    }

    fn advance(&mut self) {
        // rgs[i] may grow up to 1 + max(rgs[..i])
        let mut prefix_max = Vec::with_capacity(self.n);
        let mut running = 0;
        for &v in &self.rgs {
            running = running.max(v);
            prefix_max.push(running);
        }
        for i in (1..self.n).rev() {
            if self.rgs[i] <= prefix_max[i - 1] {
                self.rgs[i] += 1;
                for v in &mut self.rgs[i + 1..] {
                    *v = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

/// Every set partition of `{1..n}` exactly once, in canonical form.
pub fn enumerate_set_partitions(n: usize) -> Result<SetPartitions> {
    check_ground(n)?;
    Ok(SetPartitions {
        n,
        rgs: vec![0; n],
        done: false,
    })
}

/// The `B_n`-canonical representative of a dimension vector: each pair flipped so that
/// `a_i^+ >= a_i^-`, then pairs sorted by `a_i^+` descending.
pub fn bn_canonicalize(alpha: &DimVector) -> DimVector {
    alpha.bn_canonical()
}

/// One row class of a Young label: `multiplicity` rows of `length` boxes, with the
/// weakly decreasing `k` values attached to those rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct YoungClass {
    pub length: usize,
    pub ks: Vec<usize>,
}

impl YoungClass {
    pub fn multiplicity(&self) -> usize {
        self.ks.len()
    }
}

/// A Young diagram of `n` decorated with a `k` value per row: the `S_n`-class of a local
/// setting `(A, k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct YoungLabel {
    classes: Vec<YoungClass>,
}

impl YoungLabel {
    /// Validates: lengths strictly decreasing, each class nonempty, `k` values weakly
    /// decreasing within a class and in `1..=length`.
    pub fn new(classes: Vec<YoungClass>) -> Result<Self> {
        for w in classes.windows(2) {
            if w[0].length <= w[1].length {
                return Err(Error::arg("row lengths must be strictly decreasing"));
            }
        }
        for c in &classes {
            if c.length == 0 || c.ks.is_empty() {
                return Err(Error::arg("empty row class"));
            }
            if c.ks.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::arg(
                    "k values must be weakly decreasing within a class",
                ));
            }
            if c.ks.iter().any(|&k| k == 0 || k > c.length) {
                return Err(Error::arg(format!(
                    "k values for rows of length {} must lie in 1..={}",
                    c.length, c.length
                )));
            }
        }
        if classes.is_empty() {
            return Err(Error::arg("a Young label needs at least one row"));
        }
        Ok(YoungLabel { classes })
    }

    /// Groups `(row length, k)` pairs, in any order, into a label.
    pub fn from_rows(rows: &[(usize, usize)]) -> Result<Self> {
        let mut rows = rows.to_vec();
        rows.sort_by(|a, b| b.cmp(a));
        let mut classes: Vec<YoungClass> = Vec::new();
        for (length, k) in rows {
            match classes.last_mut() {
                Some(c) if c.length == length => c.ks.push(k),
                _ => classes.push(YoungClass {
                    length,
                    ks: vec![k],
                }),
            }
        }
        Self::new(classes)
    }

    pub fn classes(&self) -> &[YoungClass] {
        &self.classes
    }

    /// `(λ_i, μ_i)` pairs.
    pub fn diagram(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .map(|c| (c.length, c.multiplicity()))
            .collect()
    }

    /// Row lengths with repetition, longest first.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.classes
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.length, c.multiplicity()))
            .collect()
    }

    /// `k` values aligned with [`row_lengths`](Self::row_lengths).
    pub fn ks(&self) -> Vec<usize> {
        self.classes
            .iter()
            .flat_map(|c| c.ks.iter().copied())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.classes
            .iter()
            .map(|c| c.length * c.multiplicity())
            .sum()
    }

    pub fn k_total(&self) -> usize {
        self.classes.iter().flat_map(|c| c.ks.iter()).sum()
    }

    pub fn row_count(&self) -> usize {
        self.classes.iter().map(|c| c.multiplicity()).sum()
    }
}

impl fmt::Display for YoungLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}),({})", join(self.row_lengths()), join(self.ks()))
    }
}

/// Integer partitions of `n` as `(λ, μ)` lists, in descending lexicographic order of the
/// expanded row lengths: `(n)` first, `(1^n)` last.
pub fn young_diagrams(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .map(|rows| {
            let mut grouped: Vec<(usize, usize)> = Vec::new();
            for r in rows {
                match grouped.last_mut() {
                    Some((len, mult)) if *len == r => *mult += 1,
                    _ => grouped.push((r, 1)),
                }
            }
            grouped
        })
        .collect()
}

/// Weakly decreasing tuples of length `len` with entries in `1..=max`, in descending
/// lexicographic order.
pub fn weakly_decreasing_tuples(max: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(max: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let cap = cur.last().copied().unwrap_or(max);
        for v in (1..=cap).rev() {
            cur.push(v);
            rec(max, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 || max > 0 {
        rec(max, len, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize], n: usize) -> SubsetMask {
        SubsetMask::from_elements(e, n).unwrap()
    }

    #[test]
    fn sym_diff_examples() {
        assert_eq!(
            sym_diff(s(&[1, 2], 3), s(&[2, 3], 3)).unwrap(),
            s(&[1, 3], 3)
        );
        let a = s(&[1, 3], 4);
        assert!(sym_diff(a, a).unwrap().is_empty());
        assert_eq!(sym_diff(a, SubsetMask::empty(4).unwrap()).unwrap(), a);
    }

    #[test]
    fn sym_diff_rejects_mismatched_ground() {
        assert!(matches!(
            sym_diff(s(&[1], 3), s(&[1], 4)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn subset_mask_rejects_out_of_range() {
        assert!(SubsetMask::new(0b1000, 3).is_err());
        assert!(SubsetMask::new(0, 0).is_err());
        assert!(SubsetMask::new(0, MAX_GROUND + 1).is_err());
        assert!(SubsetMask::from_elements(&[4], 3).is_err());
        assert!(SubsetMask::full(MAX_GROUND).is_ok());
    }

    #[test]
    fn sym_diff_laws_exhaustive() {
        for n in 1..=8 {
            let all: Vec<_> = SubsetMask::all(n).unwrap().collect();
            for &a in &all {
                for &b in &all {
                    let ab = sym_diff(a, b).unwrap();
                    assert_eq!(ab, sym_diff(b, a).unwrap());
                    let inter = a.intersection(b).unwrap().len();
                    assert_eq!(ab.len(), a.len() + b.len() - 2 * inter);
                }
            }
            // associativity over a thinned triple loop keeps n = 8 fast
            for &a in all.iter().step_by(3) {
                for &b in all.iter().step_by(5) {
                    for &c in all.iter().step_by(7) {
                        let left = sym_diff(sym_diff(a, b).unwrap(), c).unwrap();
                        let right = sym_diff(a, sym_diff(b, c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn multiset_coeff_examples() {
        assert_eq!(multiset_coeff(2, 3), 4);
        for n in 0..10 {
            assert_eq!(multiset_coeff(1, n), 1);
        }
        for k in 1..10 {
            assert_eq!(multiset_coeff(k, 1), k as u128);
        }
        assert_eq!(multiset_coeff(0, 3), 0);
        assert_eq!(multiset_coeff(0, 0), 1);
        assert_eq!(multiset_coeff(7, 0), 1);
    }

    #[test]
    fn multiset_coeff_counts_weakly_decreasing_tuples() {
        for k in 1..6 {
            for n in 0..6 {
                assert_eq!(
                    weakly_decreasing_tuples(k, n).len() as u128,
                    multiset_coeff(k as u64, n as u64),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn set_partitions_small() {
        let one: Vec<_> = enumerate_set_partitions(1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].blocks(), &[s(&[1], 1)]);
        assert_eq!(enumerate_set_partitions(3).unwrap().count(), 5);
        assert_eq!(enumerate_set_partitions(4).unwrap().count(), 15);
        assert!(enumerate_set_partitions(0).is_err());
    }

    #[test]
    fn set_partition_canonical_order() {
        let p = SetPartition::new(vec![s(&[3], 4), s(&[4], 4), s(&[1, 2], 4)], 4).unwrap();
        assert_eq!(p.blocks(), &[s(&[1, 2], 4), s(&[3], 4), s(&[4], 4)]);
        assert_eq!(p.to_string(), "{{1,2},{3},{4}}");
        assert!(SetPartition::new(vec![s(&[1, 2], 3), s(&[2, 3], 3)], 3).is_err());
        assert!(SetPartition::new(vec![s(&[1, 2], 3)], 3).is_err());
    }

    #[test]
    fn young_diagrams_of_four() {
        let d = young_diagrams(4);
        assert_eq!(
            d,
            vec![
                vec![(4, 1)],
                vec![(3, 1), (1, 1)],
                vec![(2, 2)],
                vec![(2, 1), (1, 2)],
                vec![(1, 4)],
            ]
        );
    }

    #[test]
    fn young_label_validation_and_display() {
        let l = YoungLabel::from_rows(&[(1, 1), (3, 2)]).unwrap();
        assert_eq!(l.to_string(), "(3,1),(2,1)");
        assert_eq!(l.n(), 4);
        assert_eq!(l.k_total(), 3);
        assert!(YoungLabel::from_rows(&[(2, 3)]).is_err());
        assert!(YoungLabel::new(vec![YoungClass {
            length: 3,
            ks: vec![1, 2]
        }])
        .is_err());
    }
}
