//! Exact combinatorics for the representation varieties of the free product
//! `Z2 * Z2 * ... * Z2` (`n` factors).
//!
//! An `m`-dimensional representation is encoded as a representation of the quiver `Q_n`
//! with a dimension vector `(a_i^+, a_i^-)` of constant pair-sum `m`. From there the crate
//! builds:
//!
//! * the one-dimensional characters `psi_A` and the one quiver `Q'_n` on the hypercube `2^N`,
//! * Euler forms and the simple-dimension-vector criterion for arbitrary quivers,
//! * closed-form simplicity, quotient dimensions and smoothness for dimension vectors of `Q_n`,
//! * local quiver settings `(A, k)` for `alpha(n, m) = (m-1, 1)^n`, their degeneration order,
//!   and the Young-labelled degeneration graphs,
//! * DOT / JSON / CSV emitters for all of the above.
//!
//! Everything is integer-exact; nothing allocates floating point.

pub mod combinatorics;
pub mod dim_vector;
mod error;
pub mod export;
pub mod free_product;
pub mod local;
pub mod matrix;
pub mod quiver;

pub use combinatorics::{SetPartition, SubsetMask, YoungLabel};
pub use dim_vector::DimVector;
pub use error::{Error, Result};
pub use local::{DegenerationGraph, LocalSetting};
pub use matrix::IntMatrix;
pub use quiver::{Quiver, QuiverSetting};
