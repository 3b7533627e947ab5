//! Numerical toolkit for finite-dimensional operator-valued frames (g-frames).
//!
//! A g-frame for `C^n` is a finite family of matrices `L_i` (`k_i x n`) whose
//! frame operator `S = sum_i L_i* L_i` is positive definite. The crate builds
//! frame operators, canonical Parseval frames `{L_i S^{-1/2}}` and canonical
//! duals `{L_i S^{-1}}` through a Jacobi eigensolver, and evaluates the
//! Frobenius-norm identities and proximity bounds that relate a frame to its
//! nearest Parseval frame and to its alternate duals.

pub mod duals;
pub mod error;
pub mod frame;
pub mod generators;
pub mod identities;
pub mod interchange;
pub mod numeric;
pub mod random;

pub use duals::{DualCertificate, ProximityBound};
pub use error::{Error, Result};
pub use frame::{validate_frame, FrameBounds, FrameOperator, GFrame};
pub use numeric::{hermitian_eig, matrix_power, Complex, ComplexMatrix, HermitianEigen};
