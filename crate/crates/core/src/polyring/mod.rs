//! Exact sparse multivariate polynomials over `F2` and `Q`.
//!
//! Polynomials live in `K[T1, ..., Tl]` and are stored as a map from
//! [`Monomial`] to nonzero coefficient, so equality is structural. A
//! [`TriangularSystem`] presents the quotient ring used throughout the crate;
//! [`TriangularSystem::reduce`] computes the unique normal form against it.

mod field;
mod monomial;
mod poly;
mod text;
mod triangular;

pub use field::{Field, FieldTag, Rational, F2};
pub use monomial::Monomial;
pub use poly::Poly;
pub use triangular::{Membership, TriangularSystem};
