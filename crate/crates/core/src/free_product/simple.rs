//! Which components of `rep_m Z2^{*n}` contain simple representations, the dimension of
//! their quotients, and which quotients are smooth.

use serde::Serialize;

use super::one_quiver_on;
use super::semigroup::build_m_alpha;
use crate::dim_vector::DimVector;
use crate::error::{Error, Result};
use crate::quiver::is_simple_dimvector;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimplicityReason {
    /// Level 1: every component is a single character.
    Character,
    /// `n <= 2`, decided directly on the one quiver.
    SmallRank,
    /// `Σ max(a_i^+, a_i^-)` against `m(n-1)`.
    Inequality { sum_max: u64, bound: u64 },
    /// The `B_n`-orbit of `(2k,0;...;2k,0;k,k;k,k)` with `k != 1`.
    ExceptionOrbit { k: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub reason: SimplicityReason,
}

fn exception_k(canonical: &DimVector) -> Option<u32> {
    let m = canonical.level();
    let n = canonical.n();
    if n < 3 || !m.is_multiple_of(2) || m == 2 {
        return None;
    }
    let k = m / 2;
    let p = canonical.pairs();
    let head_ok = p[..n - 2].iter().all(|&x| x == (m, 0));
    let tail_ok = p[n - 2..].iter().all(|&x| x == (k, k));
    (head_ok && tail_ok).then_some(k)
}

/// Closed-form simplicity with the reason behind the verdict.
pub fn simplicity(alpha: &DimVector) -> Result<SimplicityVerdict> {
    let m = alpha.level();
    if m == 0 {
        return Err(Error::arg("simplicity is only defined for level m >= 1"));
    }
    if m == 1 {
        return Ok(SimplicityVerdict {
            simple: true,
            reason: SimplicityReason::Character,
        });
    }
    let n = alpha.n();
    if n <= 2 {
        return Ok(SimplicityVerdict {
            simple: is_simple_alpha_oracle(alpha)?,
            reason: SimplicityReason::SmallRank,
        });
    }
    let canonical = alpha.bn_canonical();
    if let Some(k) = exception_k(&canonical) {
        return Ok(SimplicityVerdict {
            simple: false,
            reason: SimplicityReason::ExceptionOrbit { k },
        });
    }
    let sum_max: u64 = alpha.pairs().iter().map(|&(a, b)| a.max(b) as u64).sum();
    let bound = m as u64 * (n as u64 - 1);
    Ok(SimplicityVerdict {
        simple: sum_max <= bound,
        reason: SimplicityReason::Inequality { sum_max, bound },
    })
}

/// `Σ max(a_i^+, a_i^-) <= m(n-1)` outside the exceptional orbit.
pub fn is_simple_alpha(alpha: &DimVector) -> Result<bool> {
    Ok(simplicity(alpha)?.simple)
}

/// Decides simplicity through the local quiver at `M_α`: the multiplicities of
/// `M_{canonical(α)}` form a dimension vector of the one quiver, tested with the general
/// simple-dimension-vector criterion.
pub fn is_simple_alpha_oracle(alpha: &DimVector) -> Result<bool> {
    if alpha.level() == 0 {
        return Err(Error::arg("simplicity is only defined for level m >= 1"));
    }
    let point = build_m_alpha(&alpha.bn_canonical())?;
    let (vertices, beta): (Vec<_>, Vec<u32>) = point.iter().unzip();
    is_simple_dimvector(&one_quiver_on(&vertices), &beta)
}

/// `dim iss_α = 2 Σ a_i^+ a_i^- - (m² - 1)` for simple `α`.
pub fn iss_dim(alpha: &DimVector) -> Result<i64> {
    if !is_simple_alpha(alpha)? {
        return Err(Error::pre(format!(
            "{alpha} is not a simple dimension vector"
        )));
    }
    let m = alpha.level() as i64;
    let mixed: i64 = alpha
        .pairs()
        .iter()
        .map(|&(a, b)| a as i64 * b as i64)
        .sum();
    Ok(2 * mixed - (m * m - 1))
}

/// Smooth quotient iff, up to `B_n`, `α = (a,b;c,d;m,0;...;m,0)`: at most two pairs have
/// both entries nonzero.
pub fn is_iss_smooth(alpha: &DimVector) -> bool {
    alpha
        .pairs()
        .iter()
        .filter(|&&(a, b)| a != 0 && b != 0)
        .count()
        <= 2
}
