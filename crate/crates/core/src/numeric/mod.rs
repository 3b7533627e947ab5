//! Dense complex linear algebra: scalars, matrices, vectors and the Hermitian
//! eigensolver behind fractional matrix powers.

mod complex;
mod eigen;
mod matrix;
pub mod vector;

pub use complex::Complex;
pub use eigen::{
    hermitian_eig, matrix_power, HermitianEigen, HERMITIAN_CHECK_TOL, JACOBI_MAX_SWEEPS,
    JACOBI_OFF_DIAGONAL_TOL, RANK_TOLERANCE,
};
pub use matrix::ComplexMatrix;
