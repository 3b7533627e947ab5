//! Finite operator-valued frames `{L_i : C^n -> C^{k_i}}`.
//!
//! A [`GFrame`] is only a structurally valid family of operators. Whether it
//! is actually a frame (its frame operator is positive definite) is decided by
//! [`GFrame::validate`], which reports the optimal bounds or a
//! [`Error::NotAFrame`] diagnostic.

use crate::error::{Error, Result};
use crate::numeric::{hermitian_eig, vector, Complex, ComplexMatrix, HermitianEigen, RANK_TOLERANCE};

/// Maximum `||S - I||_F / n` accepted as Parseval by operations that require it.
pub const PARSEVAL_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct GFrame {
    dim_h: usize,
    operators: Vec<ComplexMatrix>,
}

/// `S = sum_i L_i* L_i` together with its cached eigendecomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameOperator {
    pub matrix: ComplexMatrix,
    pub eig: HermitianEigen,
}

/// Optimal frame bounds `A = lambda_min(S)`, `B = lambda_max(S)` and the
/// nearly-Parseval rating `max(1 - A, B - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
    pub epsilon: Option<f64>,
}

impl FrameBounds {
    pub fn from_extremes(lower: f64, upper: f64) -> Self {
        let epsilon = (lower > 0.0).then(|| (1.0 - lower).max(upper - 1.0));
        Self {
            lower,
            upper,
            epsilon,
        }
    }

    /// True when `epsilon < 1`, i.e. the spectrum lies in `[1 - e, 1 + e]` for some `e < 1`.
    pub fn is_nearly_parseval(&self) -> bool {
        self.epsilon.is_some_and(|e| e < 1.0)
    }
}

impl FrameOperator {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn lambda_min(&self) -> f64 {
        self.eig.lambda_min()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eig.lambda_max()
    }

    /// Optimal bounds, or `NotAFrame` when `lambda_min <= RANK_TOLERANCE * lambda_max`.
    pub fn bounds(&self) -> Result<FrameBounds> {
        let (lo, hi) = (self.lambda_min(), self.lambda_max());
        if !(hi > 0.0 && lo > RANK_TOLERANCE * hi) {
            return Err(Error::NotAFrame {
                lambda_min: lo,
                lambda_max: hi,
            });
        }
        Ok(FrameBounds::from_extremes(lo, hi))
    }

    /// `S^a`. Maps a failed positive-definiteness gate to `NotAFrame`.
    pub fn power(&self, a: f64) -> Result<ComplexMatrix> {
        self.bounds()?;
        self.eig.power(a)
    }

    /// `||S - I||_F`
    pub fn parseval_deviation(&self) -> f64 {
        self.matrix
            .sub(&ComplexMatrix::identity(self.dim()))
            .expect("frame operator is square")
            .frobenius_norm()
    }
}

impl GFrame {
    /// Requires a non-empty family whose operators all have `dim_h` columns.
    pub fn new(dim_h: usize, operators: Vec<ComplexMatrix>) -> Result<Self> {
        if dim_h == 0 {
            return Err(Error::InvalidShape("dim_h must be positive".into()));
        }
        if operators.is_empty() {
            return Err(Error::InvalidShape("a frame needs at least one operator".into()));
        }
        if let Some((i, op)) = operators.iter().enumerate().find(|(_, op)| op.cols() != dim_h) {
            return Err(Error::InvalidShape(format!(
                "operator {i} is {}x{}, expected {dim_h} columns",
                op.rows(),
                op.cols()
            )));
        }
        Ok(Self { dim_h, operators })
    }

    pub fn dim(&self) -> usize {
        self.dim_h
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn into_operators(self) -> Vec<ComplexMatrix> {
        self.operators
    }

    /// Output dimensions `k_i`.
    pub fn counts(&self) -> Vec<usize> {
        self.operators.iter().map(ComplexMatrix::rows).collect()
    }

    /// `S = sum_i L_i* L_i`, accumulated on the upper triangle and mirrored so
    /// that it is exactly Hermitian.
    pub fn frame_operator(&self) -> Result<FrameOperator> {
        let n = self.dim_h;
        let mut s = ComplexMatrix::zeros(n, n);
        for op in &self.operators {
            for r in 0..op.rows() {
                let row = op.row(r);
                for j in 0..n {
                    let a = row[j].conj();
                    for l in j..n {
                        s[(j, l)] += a * row[l];
                    }
                }
            }
        }
        for j in 0..n {
            s[(j, j)] = Complex::real(s[(j, j)].re);
            for l in (j + 1)..n {
                s[(l, j)] = s[(j, l)].conj();
            }
        }
        let eig = hermitian_eig(&s)?;
        Ok(FrameOperator { matrix: s, eig })
    }

    /// Certifies the family as a frame and returns its optimal bounds.
    pub fn validate(&self) -> Result<FrameBounds> {
        self.frame_operator()?.bounds()
    }

    /// Frame operator of a certified frame.
    pub fn certified_operator(&self) -> Result<FrameOperator> {
        let s = self.frame_operator()?;
        s.bounds()?;
        Ok(s)
    }

    /// `||S - I||_F`, rejecting the family unless it is within
    /// `PARSEVAL_TOLERANCE * n` of a Parseval frame.
    pub fn require_parseval(&self) -> Result<FrameOperator> {
        let s = self.frame_operator()?;
        let deviation = s.parseval_deviation();
        let tolerance = PARSEVAL_TOLERANCE * self.dim_h as f64;
        if deviation > tolerance {
            return Err(Error::NotParseval {
                deviation,
                tolerance,
            });
        }
        Ok(s)
    }

    fn check_vector(&self, x: &[Complex], op: &'static str) -> Result<()> {
        if x.len() != self.dim_h {
            return Err(Error::DimensionMismatch {
                op,
                expected: format!("vector of length {}", self.dim_h),
                found: format!("length {}", x.len()),
            });
        }
        Ok(())
    }

    /// Analysis operator: `x -> (L_i x)_i`.
    pub fn analysis(&self, x: &[Complex]) -> Result<Vec<Vec<Complex>>> {
        self.check_vector(x, "analysis")?;
        self.operators.iter().map(|op| op.mul_vec(x)).collect()
    }

    /// Synthesis operator: `(y_i)_i -> sum_i L_i* y_i`.
    pub fn synthesis(&self, y: &[Vec<Complex>]) -> Result<Vec<Complex>> {
        if y.len() != self.operators.len() {
            return Err(Error::DimensionMismatch {
                op: "synthesis",
                expected: format!("{} coefficient blocks", self.operators.len()),
                found: format!("{}", y.len()),
            });
        }
        let mut out = vec![Complex::ZERO; self.dim_h];
        for (i, (op, yi)) in self.operators.iter().zip(y).enumerate() {
            if yi.len() != op.rows() {
                return Err(Error::DimensionMismatch {
                    op: "synthesis",
                    expected: format!("block {i} of length {}", op.rows()),
                    found: format!("length {}", yi.len()),
                });
            }
            for (r, coeff) in yi.iter().enumerate() {
                for (acc, a) in out.iter_mut().zip(op.row(r)) {
                    *acc += a.conj() * *coeff;
                }
            }
        }
        Ok(out)
    }

    /// `sum_i ||L_i x||^2`
    pub fn energy_at(&self, x: &[Complex]) -> Result<f64> {
        Ok(self.analysis(x)?.iter().map(|v| vector::norm_sqr(v)).sum())
    }

    /// `{L_i M}` for an `n x n` matrix `M`.
    pub fn right_multiply(&self, m: &ComplexMatrix) -> Result<GFrame> {
        if m.rows() != self.dim_h || m.cols() != self.dim_h {
            return Err(Error::DimensionMismatch {
                op: "right_multiply",
                expected: format!("{0}x{0}", self.dim_h),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        let operators = self
            .operators
            .iter()
            .map(|op| op.matmul(m))
            .collect::<Result<_>>()?;
        Ok(GFrame {
            dim_h: self.dim_h,
            operators,
        })
    }

    /// `{L_i S^{-1/2}}`, the Parseval frame nearest to `self`.
    pub fn canonical_parseval(&self) -> Result<GFrame> {
        let s = self.certified_operator()?;
        self.right_multiply(&s.power(-0.5)?)
    }

    /// `{L_i S^{-1}}`
    pub fn canonical_dual(&self) -> Result<GFrame> {
        let s = self.certified_operator()?;
        self.right_multiply(&s.power(-1.0)?)
    }

    /// `sum_i S^{-1} L_i* L_i x`, which recovers `x` for a frame.
    pub fn reconstruct(&self, x: &[Complex]) -> Result<Vec<Complex>> {
        self.check_vector(x, "reconstruct")?;
        let s_inv = self.certified_operator()?.power(-1.0)?;
        let mut out = vec![Complex::ZERO; self.dim_h];
        for op in &self.operators {
            let back = op.adjoint().mul_vec(&op.mul_vec(x)?)?;
            for (acc, v) in out.iter_mut().zip(s_inv.mul_vec(&back)?) {
                *acc += v;
            }
        }
        Ok(out)
    }

    /// `sum_i ||L_i||_F^2`
    pub fn frobenius_energy(&self) -> f64 {
        self.operators.iter().map(ComplexMatrix::frobenius_norm_sq).sum()
    }

    /// Same `n`, same number of operators and the same `k_i` sequence.
    pub fn check_same_shape(&self, other: &GFrame) -> Result<()> {
        if self.dim_h != other.dim_h {
            return Err(Error::ShapeMismatch(format!(
                "dim_h {} vs {}",
                self.dim_h, other.dim_h
            )));
        }
        if self.counts() != other.counts() {
            return Err(Error::ShapeMismatch(format!(
                "output dimensions {:?} vs {:?}",
                self.counts(),
                other.counts()
            )));
        }
        Ok(())
    }

    /// `sum_i ||L_i - G_i||_F^2`
    pub fn distance_sq(&self, other: &GFrame) -> Result<f64> {
        self.check_same_shape(other)?;
        self.operators
            .iter()
            .zip(&other.operators)
            .map(|(a, b)| a.frobenius_distance_sq(b))
            .sum()
    }
}

/// Free-function form of [`GFrame::validate`].
pub fn validate_frame(f: &GFrame) -> Result<FrameBounds> {
    f.validate()
}
