//! Exact linear algebra over the rationals and integers.

mod cyclotomic;
mod lattice;
mod mahler;
mod matrix;
mod poly;
mod rational;
mod subspace;

pub use cyclotomic::{
    cyclotomic_part, cyclotomic_polynomial, cyclotomic_split, euler_phi, strip_t_power,
    CyclotomicSplit,
};
pub use lattice::{hnf_lattice, hnf_rows, lattice_intersect_subspace, LatticeBasis};
pub use mahler::{log_mahler, EntropyValue};
pub use matrix::{Matrix, MatrixQ, MatrixZ};
pub use poly::{IntPolynomial, RatPolynomial};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use subspace::SubspaceBasis;
pub(crate) use subspace::combine as subspace_combine;
