//! Exact rational arithmetic, homogeneous forms, the apolarity contraction
//! and rational linear algebra.

pub mod matrix;
pub mod monomial;
pub mod polynomial;
pub mod rational;
pub mod samples;

pub use matrix::{echelon_basis, ExactMatrix};
pub use monomial::{basis_len, binomial, monomial_basis, Monomial};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational};
