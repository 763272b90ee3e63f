//! Exact linear algebra over the Gaussian rationals ℚ(i).
//!
//! Every lattice and ray-set computation in this crate reduces to questions
//! about spans, kernels and orthogonality in ℂ^d. Answering those questions
//! with floating point would turn lattice equality into a tolerance game;
//! answering them over ℚ(i) makes every comparison exact and decidable.
//! Floating point exists only in [`crate::bell`], where trigonometry forces it.

mod matrix;
mod scalar;
mod vector;

pub use matrix::{orth_complement_basis, Matrix};
pub use scalar::{ComplexRational, LiteralError};
pub use vector::{inner_product, Vector};
