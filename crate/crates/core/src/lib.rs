//! Substitution boxes from Mordell elliptic curves over prime fields.
//!
//! The curve `y² ≡ x³ + b (mod p)` with `p ≡ 2 (mod 3)` has exactly one
//! affine point per y-coordinate in `[0, p-1]`. Sorting the 256 points with
//! `y ∈ [0, 255]` under one of three total orders and reading off the
//! y-coordinates yields a bijective 8-bit S-box. This crate implements the
//! construction together with the standard strength metrics (nonlinearity,
//! linear/differential approximation probability, SAC, BIC, algebraic
//! complexity), a correlation/statistics suite, and file formats for
//! exchanging tables.

pub mod analysis;
pub mod curve;
pub mod fixtures;
pub mod formats;
pub mod gf256;
pub mod modmath;
pub mod ordering;
pub mod report;
pub mod sbox;
pub mod stats;

pub use curve::{AffinePoint, CurveParams};
pub use modmath::FieldPrime;
pub use ordering::{OrderingKind, TieBreak};
pub use report::AnalysisReport;
pub use sbox::{Provenance, SBox};

/// Errors for parameter validation and table handling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is too small, the field prime must be at least 5")]
    TooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 2 modulo 3")]
    WrongResidueClass(u64),
    #[error("prime {0} is below 257, too small to select 256 points")]
    PrimeTooSmall(u64),
    #[error("coefficient b = {b} is outside [0, {max}]")]
    BOutOfRange { b: u64, max: u64 },
    #[error("points belong to different curves")]
    MixedCurves,
    #[error("table is not a bijection on 0..=255")]
    NotBijective,
}
