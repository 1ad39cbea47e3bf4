//! Exact arithmetic: rationals, truncated power series and dense linear
//! algebra over the rationals.

pub mod matrix;
pub mod rational;
pub mod series;

pub use matrix::{kernel_basis, rank, rref, solve_affine, span_basis, Echelon, Matrix, Vector};
pub use rational::Rational;
pub use series::TruncSeries;
