//! Exact rationals, sparse polynomials, dense matrices and identity testing.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod zero_test;

pub use matrix::{rank_of_vectors, Mat, Matrix, PolyMat, Ring};
pub use poly::{Monomial, MultiPoly};
pub use scalar::{s, Scalar};
pub use zero_test::{
    decide_vanish, poly_is_zero, polys_vanish, sampled_vanish, CheckConfig, CheckMode, Identity, ZeroMode, ZeroVerdict,
};
