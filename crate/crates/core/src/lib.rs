//! Exact symbolic tools for equivariant Borsuk-Ulam obstruction theory.
//!
//! The crate computes Euler classes of representations of elementary
//! abelian 2-groups `E = (Z/2)^l` (over `F2`) and of tori of rank `l`
//! (over `Q`), reduces them in the quotient rings
//! `S*(E*) / (e(U_1), ..., e(U_l))` presented by triangular systems, builds
//! the flags those computations need, and turns nonvanishing certificates
//! into lower bounds on the covering dimension of zero-sets of equivariant
//! maps.
//!
//! Module map:
//!
//! * [`polyring`]: sparse polynomials over `F2` and `Q`, triangular systems,
//!   normal forms and the text format.
//! * [`repmod`]: characters, weights, representation tables, flags,
//!   subgroups, decomposition and Euler polynomials.
//! * [`flagsearch`]: flag construction and the maximal fixed
//!   subgroup search.
//! * [`cohomology`]: quotient presentations, nonvanishing checks and the
//!   flag-manifold rings.
//! * [`bounds`]: certified zero-set dimension bounds.
//! * [`sympow`]: symmetric power character tables and embedding sizes.
//! * [`torusmaps`]: rational-line decomposition, joins and the explicit
//!   circle example.

pub mod bounds;
pub mod cohomology;
mod error;
pub mod flagsearch;
pub(crate) mod linalg;
pub mod polyring;
pub mod repmod;
pub mod report;
pub mod sympow;
pub mod torusmaps;

pub use error::{Error, Result};
pub use polyring::{Field, FieldTag, Monomial, Poly, Rational, TriangularSystem, F2};

pub use repmod::{
    CharF2, Decomposition, FlagE, RationalFlag, RepE, RepT, RepTable, Representation, Subgroup, Weight,
};
