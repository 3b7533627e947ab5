//! Alternate duals and the two optimal proximity bounds for nearly-Parseval
//! frames.

use crate::error::{Error, Result};
use crate::frame::GFrame;
use crate::identities;
use crate::numeric::ComplexMatrix;
use crate::random::GaussianStream;

/// Default dual-equation tolerance, relative to `n`.
pub const DUAL_TOLERANCE: f64 = 1e-8;

/// Outcome of checking `sum_i L_i* G_i = I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualCertificate {
    /// `||sum_i L_i* G_i - I||_F`
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// A proximity gap together with its closed-form upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProximityBound {
    pub gap: f64,
    pub bound: f64,
    pub epsilon: f64,
}

impl ProximityBound {
    /// Additive slack `1e-9 * n`; gaps may be exactly zero.
    pub fn holds(&self, n: usize) -> bool {
        self.gap <= self.bound + 1e-9 * n as f64
    }
}

/// `sum_i L_i* G_i`
pub fn mixed_frame_operator(lam: &GFrame, gam: &GFrame) -> Result<ComplexMatrix> {
    lam.check_same_shape(gam)?;
    let n = lam.dim();
    let mut acc = ComplexMatrix::zeros(n, n);
    for (l, g) in lam.operators().iter().zip(gam.operators()) {
        acc = acc.add(&l.adjoint().matmul(g)?)?;
    }
    Ok(acc)
}

pub fn verify_alternate_dual(lam: &GFrame, gam: &GFrame) -> Result<DualCertificate> {
    verify_alternate_dual_with_tolerance(lam, gam, DUAL_TOLERANCE * lam.dim() as f64)
}

pub fn verify_alternate_dual_with_tolerance(
    lam: &GFrame,
    gam: &GFrame,
    tolerance: f64,
) -> Result<DualCertificate> {
    let residual = mixed_frame_operator(lam, gam)?
        .sub(&ComplexMatrix::identity(lam.dim()))?
        .frobenius_norm();
    Ok(DualCertificate {
        residual,
        tolerance,
        passed: residual <= tolerance,
    })
}

/// Errors with `NotADual` unless `gam` passes [`verify_alternate_dual`].
pub fn require_alternate_dual(lam: &GFrame, gam: &GFrame) -> Result<DualCertificate> {
    let cert = verify_alternate_dual(lam, gam)?;
    if !cert.passed {
        return Err(Error::NotADual {
            residual: cert.residual,
            tolerance: cert.tolerance,
        });
    }
    Ok(cert)
}

/// A non-canonical alternate dual `G_i = L_i S^{-1} + T_i`.
///
/// `T_i = D_i - L_i S^{-1} (sum_j L_j* D_j)` for Gaussian `D_i` rescaled to
/// `||D_i||_F = magnitude`; then `sum_i L_i* T_i = 0`, so `{G_i}` is a dual.
/// Every alternate dual differs from the canonical one by such a family.
pub fn random_alternate_dual(lam: &GFrame, magnitude: f64, seed: u64) -> Result<GFrame> {
    if !(magnitude >= 0.0 && magnitude.is_finite()) {
        return Err(Error::Infeasible(format!(
            "magnitude must be finite and non-negative, got {magnitude}"
        )));
    }
    let canonical = lam.canonical_dual()?;
    if magnitude == 0.0 {
        return Ok(canonical);
    }
    let n = lam.dim();
    let mut stream = GaussianStream::new(seed);
    let deltas: Vec<ComplexMatrix> = lam
        .operators()
        .iter()
        .map(|op| {
            let d = stream.matrix(op.rows(), n);
            let norm = d.frobenius_norm();
            d.scale(magnitude / norm)
        })
        .collect();

    let mut mixed = ComplexMatrix::zeros(n, n);
    for (op, d) in lam.operators().iter().zip(&deltas) {
        mixed = mixed.add(&op.adjoint().matmul(d)?)?;
    }
    let operators = canonical
        .operators()
        .iter()
        .zip(&deltas)
        .map(|(c, d)| {
            // G_i = C_i + D_i - C_i M, with C_i = L_i S^{-1}.
            c.add(d)?.sub(&c.matmul(&mixed)?)
        })
        .collect::<Result<Vec<_>>>()?;
    GFrame::new(n, operators)
}

fn nearly_parseval_epsilon(g: &GFrame) -> Result<f64> {
    let bounds = g.validate()?;
    let epsilon = bounds.epsilon.expect("certified frames have epsilon");
    if epsilon >= 1.0 {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    Ok(epsilon)
}

/// `(sum_i ||L_i - L_i S^{-1/2}||_F^2, n (1 - sqrt(1 - e))^2)`.
pub fn parseval_proximity_bound(g: &GFrame) -> Result<ProximityBound> {
    let epsilon = nearly_parseval_epsilon(g)?;
    let lower_side = 1.0 - (1.0 - epsilon).sqrt();
    let upper_side = (1.0 + epsilon).sqrt() - 1.0;
    // sqrt(1 - e) + sqrt(1 + e) <= 2 makes the lower side the binding one.
    debug_assert!(upper_side <= lower_side + 1e-15);
    let gap = identities::najati_gap(g)?;
    Ok(ProximityBound {
        gap,
        bound: g.dim() as f64 * lower_side * lower_side,
        epsilon,
    })
}

/// `(sum_i ||L_i - L_i S^{-1}||_F^2, n e^2 / (1 - e))`, witnessed by the
/// canonical dual.
pub fn dual_proximity_bound(g: &GFrame) -> Result<ProximityBound> {
    let epsilon = nearly_parseval_epsilon(g)?;
    let dual = g.canonical_dual()?;
    let gap = identities::frobenius_dual_decomposition(g, &dual)?.canonical;
    Ok(ProximityBound {
        gap,
        bound: g.dim() as f64 * epsilon * epsilon / (1.0 - epsilon),
        epsilon,
    })
}

/// `n` single-row operators `sqrt(1 - e) u_k^*` over the standard basis; its
/// frame operator is `(1 - e) I` and it attains both proximity bounds.
pub fn extremal_frame(n: usize, epsilon: f64) -> Result<GFrame> {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if n == 0 {
        return Err(Error::Infeasible("n must be at least 1".into()));
    }
    let scale = (1.0 - epsilon).sqrt();
    let ops = (0..n)
        .map(|k| {
            let mut row = ComplexMatrix::zeros(1, n);
            row[(0, k)] = scale.into();
            row
        })
        .collect();
    GFrame::new(n, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{nearly_parseval_gframe, random_gframe, random_parseval_gframe};

    #[test]
    fn canonical_dual_certifies() {
        let f = random_gframe(4, &[2, 2, 2], 1).unwrap();
        let cert = verify_alternate_dual(&f, &f.canonical_dual().unwrap()).unwrap();
        assert!(cert.passed);
        assert_eq!(cert.tolerance, 4e-8);
    }

    #[test]
    fn parseval_frame_is_its_own_dual() {
        let p = random_parseval_gframe(5, &[2, 3, 1], 2).unwrap();
        assert!(verify_alternate_dual(&p, &p).unwrap().passed);
    }

    #[test]
    fn canonical_parseval_is_not_a_dual() {
        // sum L_i* L_i S^{-1/2} = S^{1/2}
        let f = random_gframe(3, &[2, 2], 5).unwrap();
        let cert = verify_alternate_dual(&f, &f.canonical_parseval().unwrap()).unwrap();
        assert!(!cert.passed);
        let s = f.frame_operator().unwrap();
        let expected = s
            .power(0.5)
            .unwrap()
            .sub(&ComplexMatrix::identity(3))
            .unwrap()
            .frobenius_norm();
        assert!((cert.residual - expected).abs() <= 1e-8);
        assert!(matches!(
            require_alternate_dual(&f, &f.canonical_parseval().unwrap()),
            Err(Error::NotADual { .. })
        ));
    }

    #[test]
    fn shape_mismatch() {
        let a = random_gframe(3, &[2, 2], 5).unwrap();
        let b = random_gframe(3, &[3, 1], 5).unwrap();
        assert!(matches!(verify_alternate_dual(&a, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn random_dual_examples() {
        let f = random_gframe(5, &[2, 2, 3], 8).unwrap();
        assert_eq!(random_alternate_dual(&f, 0.0, 1).unwrap(), f.canonical_dual().unwrap());
        for m in [0.1, 1.0, 10.0, 100.0] {
            let g = random_alternate_dual(&f, m, 3).unwrap();
            let cert = verify_alternate_dual(&f, &g).unwrap();
            assert!(cert.residual <= 1e-8 * 5.0, "{m}: {}", cert.residual);
            assert!(g.distance_sq(&f.canonical_dual().unwrap()).unwrap() > 0.0);
        }
        assert_eq!(
            random_alternate_dual(&f, 1.0, 3).unwrap(),
            random_alternate_dual(&f, 1.0, 3).unwrap()
        );
        assert!(random_alternate_dual(&f, -1.0, 3).is_err());
    }

    #[test]
    fn parseval_bounds_are_zero() {
        let p = random_parseval_gframe(4, &[3, 3], 0).unwrap();
        let b7 = parseval_proximity_bound(&p).unwrap();
        assert!(b7.gap.abs() <= 1e-12 && b7.bound.abs() <= 1e-12);
        let b11 = dual_proximity_bound(&p).unwrap();
        assert!(b11.gap.abs() <= 1e-12 && b11.bound.abs() <= 1e-12);
    }

    #[test]
    fn extremal_spot_values() {
        // n (1 - sqrt(1 - 0.19))^2 = 2 (1 - 0.9)^2 = 0.02
        let f = extremal_frame(2, 0.19).unwrap();
        let b = parseval_proximity_bound(&f).unwrap();
        assert!((b.bound - 0.02).abs() <= 1e-9 && (b.gap - 0.02).abs() <= 1e-9);
        // n e^2 / (1 - e) = 2 * 0.25 / 0.5 = 1
        let f = extremal_frame(2, 0.5).unwrap();
        let b = dual_proximity_bound(&f).unwrap();
        assert!((b.bound - 1.0).abs() <= 1e-9 && (b.gap - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn extremal_frame_shape() {
        let f = extremal_frame(3, 0.19).unwrap();
        let s = f.frame_operator().unwrap().matrix;
        let expected = ComplexMatrix::identity(3).scale(0.81);
        assert!(s.sub(&expected).unwrap().frobenius_norm() <= 1e-15);
        let eps = f.validate().unwrap().epsilon.unwrap();
        assert!((eps - 0.19).abs() <= 1e-12);
        let p = extremal_frame(3, 0.0).unwrap();
        assert_eq!(p.frame_operator().unwrap().matrix, ComplexMatrix::identity(3));
        assert!(matches!(extremal_frame(2, 1.0), Err(Error::EpsilonOutOfRange(_))));
    }

    #[test]
    fn random_nearly_parseval_respects_bounds() {
        let f = nearly_parseval_gframe(4, &[2, 2, 2], 0.3, 17).unwrap();
        let b = parseval_proximity_bound(&f).unwrap();
        assert!(b.holds(4));
        assert!((b.bound - 4.0 * (1.0 - 0.7f64.sqrt()).powi(2)).abs() <= 1e-9);
        let f = nearly_parseval_gframe(8, &[4, 4, 4], 0.4, 18).unwrap();
        let b = dual_proximity_bound(&f).unwrap();
        assert!(b.holds(8));
        assert!((b.bound - 8.0 * 0.16 / 0.6).abs() <= 1e-9);
    }

    #[test]
    fn epsilon_out_of_range() {
        let f = random_gframe(3, &[3, 3, 3], 0).unwrap();
        let eps = f.validate().unwrap().epsilon.unwrap();
        assert!(eps >= 1.0);
        assert!(matches!(parseval_proximity_bound(&f), Err(Error::EpsilonOutOfRange(_))));
        assert!(matches!(dual_proximity_bound(&f), Err(Error::EpsilonOutOfRange(_))));
    }
}
