//! Exact scalars: Q, Q(sqrt 2), Q(sqrt 5) and Q(zeta_m).

pub mod cyclo;
mod modular;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod scalar;

pub use cyclo::{CycloField, CycloScalar};
pub use poly::{cyclotomic_polynomial, totient, IntPoly};
pub use quad::Quad;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use scalar::{ExactField, FieldScalar, Ring};
