//! Everything specific to `Z2^{*n}`: the quiver `Q_n`, the component census of
//! `rep_m`, the one quiver `Q'_n` on the characters `psi_A`, and its Euler matrix.

mod census;
mod semigroup;
mod simple;

pub use census::{
    rep2_census, rep2_counts, treelike_census, Rep2Census, Rep2Row, TreeType, TreelikeCensus,
};
pub use semigroup::{
    build_m_alpha, canonicalize_characters, dimvector_of_characters, CharacterMultiset,
};
pub use simple::{
    is_iss_smooth, is_simple_alpha, is_simple_alpha_oracle, iss_dim, simplicity, SimplicityReason,
    SimplicityVerdict,
};

use crate::combinatorics::{binomial, SubsetMask, MAX_GROUND};
use crate::dim_vector::DimVector;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::Quiver;

/// Vertex index of `i^+` (1-based pair `i`) in `Q_n`; `i^-` follows it.
pub fn qn_vertex(i: usize, plus: bool) -> usize {
    2 * (i - 1) + usize::from(!plus)
}

/// The quiver `Q_n`: vertices `1^+, 1^-, 2^+, 2^-, ..., n^+, n^-`, with one arrow from each
/// of `1^±` to every `i^±`, `i >= 2`.
pub fn build_qn(n: usize) -> Result<Quiver> {
    if !(2..=MAX_GROUND).contains(&n) {
        return Err(Error::arg(format!(
            "Q_n needs 2 <= n <= {MAX_GROUND}, got {n}"
        )));
    }
    Ok(Quiver::from_fn(2 * n, |i, j| (i < 2 && j >= 2) as u32))
}

/// Iterator over every dimension vector of level `m` with `n` pairs.
pub struct Components {
    n: usize,
    m: u32,
    plus: Vec<u32>,
    done: bool,
}

impl Iterator for Components {
    type Item = DimVector;

    fn next(&mut self) -> Option<DimVector> {
        if self.done {
            return None;
        }
        let pairs = self.plus.iter().map(|&a| (a, self.m - a)).collect();
        let item = DimVector::new(pairs).expect("constant level by construction");
        // odometer, last pair fastest
        self.done = true;
        for i in (0..self.n).rev() {
            if self.plus[i] < self.m {
                self.plus[i] += 1;
                self.done = false;
                break;
            }
            self.plus[i] = 0;
        }
        Some(item)
    }
}

/// All `(m+1)^n` dimension vectors `α` with pair-sum `m`.
pub fn components(n: usize, m: u32) -> Result<Components> {
    if n == 0 {
        return Err(Error::arg("need at least one pair"));
    }
    Ok(Components {
        n,
        m,
        plus: vec![0; n],
        done: false,
    })
}

/// Number of components of `rep_m`: `(m+1)^n`.
pub fn component_count(n: usize, m: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::arg("need at least one pair"));
    }
    (m as u128 + 1)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::arg("component count overflows 128 bits"))
}

/// Number of `B_n`-orbits of components: `C(⌊m/2⌋ + n, n)`.
pub fn orbit_count(n: usize, m: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::arg("need at least one pair"));
    }
    let half = m / 2;
    Ok(binomial(half as u64 + n as u64, n as u64))
}

fn check_one_quiver_n(n: usize) -> Result<()> {
    if !(1..=MAX_GROUND).contains(&n) {
        return Err(Error::arg(format!(
            "the one quiver needs 1 <= n <= {MAX_GROUND}, got {n}"
        )));
    }
    Ok(())
}

fn ext_arrows(a: SubsetMask, b: SubsetMask) -> u32 {
    let d = (a.bits() ^ b.bits()).count_ones();
    d.saturating_sub(1)
}

/// The one quiver `Q'_n`: vertex `A` at index `A.bits()`, `|A Δ B| - 1` arrows between
/// `A != B` (none for adjacent cube vertices), no loops.
pub fn build_one_quiver(n: usize) -> Result<Quiver> {
    check_one_quiver_n(n)?;
    let v = 1usize << n;
    Ok(Quiver::from_fn(v, |i, j| {
        ((i ^ j) as u32).count_ones().saturating_sub(1)
    }))
}

/// Full subquiver of `Q'_n` on the given characters, in the given order.
pub fn one_quiver_on(vertices: &[SubsetMask]) -> Quiver {
    Quiver::from_fn(vertices.len(), |i, j| ext_arrows(vertices[i], vertices[j]))
}

/// `(M_n)_{A,B} = 1 - |A Δ B|`.
pub fn one_quiver_euler_closed(n: usize) -> Result<IntMatrix> {
    check_one_quiver_n(n)?;
    let v = 1usize << n;
    Ok(IntMatrix::from_fn(v, v, |i, j| {
        1 - ((i ^ j) as u32).count_ones() as i64
    }))
}

/// `M_0 = [1]`, `M_k = [[M, M - P], [M - P, M]]` with `P` the all-ones block.
pub fn one_quiver_euler_recursive(n: usize) -> Result<IntMatrix> {
    check_one_quiver_n(n)?;
    let mut m = IntMatrix::identity(1);
    for _ in 0..n {
        let h = m.rows();
        m = IntMatrix::from_fn(2 * h, 2 * h, |i, j| {
            let base = m[(i % h, j % h)];
            if (i < h) == (j < h) {
                base
            } else {
                base - 1
            }
        });
    }
    Ok(m)
}
