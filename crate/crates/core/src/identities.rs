//! Frobenius-norm identities for finite g-frames.
//!
//! Each operation returns every term it computes rather than a verdict; the
//! caller applies the tolerance. Where a closed form in the eigenvalues of
//! `S` exists it is exposed separately so the two routes can be compared.

use crate::duals::require_alternate_dual;
use crate::error::{Error, Result};
use crate::frame::{FrameOperator, GFrame};
use crate::numeric::{vector, Complex, ComplexMatrix};

/// Both sides of `sum_i ||L_i S^a||_F^2 = Tr(S^{2a+1})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTrace {
    pub lhs: f64,
    pub rhs: f64,
}

impl PowerTrace {
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// `total = sum ||L_i - G_i||^2`, `canonical_gap = sum ||L_i - L_i S^{-1/2}||^2`,
/// `cross_term = sum ||G_i S^{1/4} - L_i S^{-1/4}||^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalDecomposition {
    pub total: f64,
    pub canonical_gap: f64,
    pub cross_term: f64,
}

impl ParsevalDecomposition {
    pub fn residual(&self) -> f64 {
        (self.total - self.canonical_gap - self.cross_term).abs()
    }
}

/// `total = sum ||L_i - G_i||^2`, `canonical = sum ||L_i - L_i S^{-1}||^2`,
/// `residual = sum ||L_i S^{-1} - G_i||^2`, either pointwise at a vector or
/// in Frobenius norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualDecomposition {
    pub total: f64,
    pub canonical: f64,
    pub residual: f64,
}

impl DualDecomposition {
    /// `|total - canonical - residual|`
    pub fn identity_residual(&self) -> f64 {
        (self.total - self.canonical - self.residual).abs()
    }
}

/// `sum_i ||L G_i*||_F^2` for a Parseval frame `{G_i}` and any `L` with
/// `n` columns. The value does not depend on the frame: it is `||L||_F^2`.
pub fn parseval_weighted_energy(l: &ComplexMatrix, g: &GFrame) -> Result<f64> {
    if l.cols() != g.dim() {
        return Err(Error::DimensionMismatch {
            op: "parseval_weighted_energy",
            expected: format!("L with {} columns", g.dim()),
            found: format!("{}x{}", l.rows(), l.cols()),
        });
    }
    g.require_parseval()?;
    g.operators()
        .iter()
        .map(|op| Ok(l.matmul(&op.adjoint())?.frobenius_norm_sq()))
        .sum()
}

/// `sum_i ||G_i||_F^2` of a Parseval frame, which equals `n`.
pub fn parseval_frobenius_budget(g: &GFrame) -> Result<f64> {
    g.require_parseval()?;
    Ok(g.frobenius_energy())
}

/// `lhs` is summed operator by operator from `S^a`; `rhs` is the trace of
/// `S^{2a+1}` taken from its own spectral evaluation.
pub fn power_trace_identity(g: &GFrame, a: f64) -> Result<PowerTrace> {
    let s = g.certified_operator()?;
    let s_a = s.power(a)?;
    let lhs = g
        .operators()
        .iter()
        .map(|op| Ok(op.matmul(&s_a)?.frobenius_norm_sq()))
        .sum::<Result<f64>>()?;
    let rhs = s.power(2.0 * a + 1.0)?.trace()?.re;
    Ok(PowerTrace { lhs, rhs })
}

pub fn parseval_approx_decomposition(lam: &GFrame, gam: &GFrame) -> Result<ParsevalDecomposition> {
    let s = lam.certified_operator()?;
    lam.check_same_shape(gam)?;
    gam.require_parseval()?;

    let inv_sqrt = s.power(-0.5)?;
    let quarter = s.power(0.25)?;
    let inv_quarter = s.power(-0.25)?;

    let total = lam.distance_sq(gam)?;
    let canonical_gap = lam.distance_sq(&lam.right_multiply(&inv_sqrt)?)?;
    let cross_term = gam
        .right_multiply(&quarter)?
        .distance_sq(&lam.right_multiply(&inv_quarter)?)?;
    Ok(ParsevalDecomposition {
        total,
        canonical_gap,
        cross_term,
    })
}

/// `sum_i ||L_i - L_i S^{-1/2}||_F^2`, the minimum distance from `{L_i}` to
/// any Parseval frame of the same shape.
pub fn najati_gap(lam: &GFrame) -> Result<f64> {
    let s = lam.certified_operator()?;
    lam.distance_sq(&lam.right_multiply(&s.power(-0.5)?)?)
}

/// `sum_k (sqrt(lambda_k) - 1)^2`
pub fn najati_gap_closed_form(s: &FrameOperator) -> f64 {
    s.eig
        .eigenvalues
        .iter()
        .map(|&l| (l.sqrt() - 1.0).powi(2))
        .sum()
}

/// `sum_k (lambda_k - 1)^2 / lambda_k`
pub fn dual_gap_closed_form(s: &FrameOperator) -> f64 {
    s.eig
        .eigenvalues
        .iter()
        .map(|&l| (l - 1.0).powi(2) / l)
        .sum()
}

pub fn pointwise_dual_decomposition(
    lam: &GFrame,
    gam: &GFrame,
    x: &[Complex],
) -> Result<DualDecomposition> {
    let s = lam.certified_operator()?;
    require_alternate_dual(lam, gam)?;
    let lam_x = lam.analysis(x)?;
    let gam_x = gam.analysis(x)?;
    let lam_s_inv_x = lam.analysis(&s.power(-1.0)?.mul_vec(x)?)?;

    let sum_dist = |a: &[Vec<Complex>], b: &[Vec<Complex>]| -> f64 {
        a.iter().zip(b).map(|(u, v)| vector::distance_sqr(u, v)).sum()
    };
    Ok(DualDecomposition {
        total: sum_dist(&lam_x, &gam_x),
        canonical: sum_dist(&lam_x, &lam_s_inv_x),
        residual: sum_dist(&lam_s_inv_x, &gam_x),
    })
}

pub fn frobenius_dual_decomposition(lam: &GFrame, gam: &GFrame) -> Result<DualDecomposition> {
    let s = lam.certified_operator()?;
    lam.check_same_shape(gam)?;
    require_alternate_dual(lam, gam)?;
    let canonical_dual = lam.right_multiply(&s.power(-1.0)?)?;
    Ok(DualDecomposition {
        total: lam.distance_sq(gam)?,
        canonical: lam.distance_sq(&canonical_dual)?,
        residual: canonical_dual.distance_sq(gam)?,
    })
}
