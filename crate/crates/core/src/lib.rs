//! Exact Chern numbers of orbifold surfaces and the twisted-sector
//! Riemann–Roch terms of du Val points.
//!
//! Everything is computed without rounding: rationals, `Q(sqrt 2)`,
//! `Q(sqrt 5)` and cyclotomic fields carry the group traces and every sum.

pub mod ade_data;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod invariants;
pub mod quaternion_groups;
pub mod todd;

pub use error::{Error, Result};

/// Rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = exact_arith::Rational;
/// `Q(sqrt 2)`, coefficients of the binary octahedral group.
pub type QSqrt2 = exact_arith::Quad<2>;
/// `Q(sqrt 5)`, coefficients of the binary icosahedral group.
pub type QSqrt5 = exact_arith::Quad<5>;

/// Quaternions over the exact coefficient fields, and over floats for numeric checks.
pub type RationalQuaternion = quaternion_groups::Quaternion<Rational>;
pub type Sqrt2Quaternion = quaternion_groups::Quaternion<QSqrt2>;
pub type Sqrt5Quaternion = quaternion_groups::Quaternion<QSqrt5>;
pub type Quaternion64 = quaternion_groups::Quaternion<f64>;
pub type Quaternion32 = quaternion_groups::Quaternion<f32>;

pub use ade_data::{AdeKind, AdeLabel, AdeResolutionData};
pub use exact_arith::{CycloScalar, FieldScalar};
pub use invariants::{InvariantReport, IsolatedPointsDescription, SncPairDescription, Verdict};
pub use quaternion_groups::{FiniteSubgroup, GroupElement};
