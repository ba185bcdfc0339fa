//! Exact topological entropy of continuous endomorphisms of connected Lie groups.
//!
//! A group is presented as `G = G̃/Γ̃` by the structure constants of its Lie
//! algebra together with log-coordinates of the central lattice generators.
//! The entropy of an endomorphism is reduced to the entropy of its restriction
//! to the maximal central torus of the eventual image, where it is the
//! logarithmic Mahler measure of an integer characteristic polynomial.
//!
//! Module map:
//! - [`linalg`]: exact rational/integer linear algebra, polynomials, lattices,
//!   cyclotomic detection and certified log-Mahler measure.
//! - [`lie_algebra`]: structure-constant Lie algebras, Killing form, radicals.
//! - [`torus`]: torus endomorphisms given by integer matrices.
//! - [`group`]: presented groups, endomorphisms and the entropy pipeline.
//! - [`estimator`]: numerical Bowen–Dinaburg counts and Li-Yorke pair search.
//! - [`input`], [`catalog`], [`report`]: JSON documents, built-in examples and
//!   the analysis report emitted by the command line tool.

pub mod catalog;
pub mod error;
pub mod estimator;
pub mod group;
pub mod input;
pub mod lie_algebra;
pub mod linalg;
pub mod report;
pub mod torus;

pub use error::{Error, Result};
pub use linalg::{
    EntropyValue, IntPolynomial, LatticeBasis, MatrixQ, MatrixZ, RatPolynomial, Rational,
    SubspaceBasis,
};

/// Default absolute error budget for entropy values.
pub const DEFAULT_TOL: f64 = 1e-9;
