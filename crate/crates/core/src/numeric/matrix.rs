//! Dense row-major complex matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::Complex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries. Rejects empty shapes, a length
    /// mismatch, and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape(format!(
                "{rows}x{cols}: both dimensions must be positive"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidShape(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if !data.iter().all(|z| z.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested real and (optional) imaginary rows.
    pub fn from_parts(re: &[Vec<f64>], im: Option<&[Vec<f64>]>) -> Result<Self> {
        let rows = re.len();
        let cols = re.first().map_or(0, Vec::len);
        if let Some(im) = im {
            if im.len() != rows {
                return Err(Error::InvalidShape(format!(
                    "real part has {rows} rows, imaginary part has {}",
                    im.len()
                )));
            }
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in re.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidShape(format!(
                    "ragged real part: row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            match im {
                Some(im) => {
                    let im_row = &im[i];
                    if im_row.len() != cols {
                        return Err(Error::InvalidShape(format!(
                            "ragged imaginary part: row {i} has {} entries, expected {cols}",
                            im_row.len()
                        )));
                    }
                    data.extend(row.iter().zip(im_row).map(|(&r, &c)| Complex::new(r, c)));
                }
                None => data.extend(row.iter().map(|&r| Complex::real(r))),
            }
        }
        Self::new(rows, cols, data)
    }

    /// Real matrix from a row-major slice.
    pub fn from_real(rows: usize, cols: usize, values: &[f64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&v| Complex::real(v)).collect())
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::ONE;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::real(d);
        }
        m
    }

    /// Single-row matrix holding `values`.
    pub fn row_vector(values: &[Complex]) -> Result<Self> {
        Self::new(1, values.len(), values.to_vec())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Textbook product: `c_ij = sum_k a_ik b_kj`, accumulated in `k` order.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                expected: format!("rhs with {} rows", self.cols),
                found: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let a_row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = Complex::ZERO;
                for (k, a) in a_row.iter().enumerate() {
                    acc += *a * rhs.data[k * rhs.cols + j];
                }
                out.push(acc);
            }
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    pub fn mul_vec(&self, x: &[Complex]) -> Result<Vec<Complex>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                expected: format!("vector of length {}", self.cols),
                found: format!("length {}", x.len()),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| *a * *b).sum())
            .collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].conj());
            }
        }
        ComplexMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn check_same_shape(&self, other: &ComplexMatrix, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op,
                expected: format!("{}x{}", self.rows, self.cols),
                found: format!("{}x{}", other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &ComplexMatrix, f: impl Fn(Complex, Complex) -> Complex) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.scale(s)).collect(),
        }
    }

    /// `sum |m_ij|^2`
    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    /// `||self - other||_F^2`
    pub fn frobenius_distance_sq(&self, other: &ComplexMatrix) -> Result<f64> {
        self.check_same_shape(other, "frobenius_distance_sq")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm_sqr())
            .sum())
    }

    pub fn trace(&self) -> Result<Complex> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self[(i, i)]).sum())
    }

    /// `(M + M*) / 2`. Panics on non-square input; callers check shape first.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut out = self.clone();
        for i in 0..n {
            out[(i, i)] = Complex::real(self[(i, i)].re);
            for j in (i + 1)..n {
                let avg = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
                out[(i, j)] = avg;
                out[(j, i)] = avg.conj();
            }
        }
        out
    }

    /// `||M - M*||_F`
    pub fn hermitian_defect(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        Ok(acc.sqrt())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.is_finite())
    }

    /// Real and imaginary parts as nested rows.
    pub fn to_parts(&self) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let re = (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.re).collect())
            .collect();
        let im = (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.im).collect())
            .collect();
        (re, im)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Complex::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::vector;

    fn lcg_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
        let mut state = seed;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let data = (0..rows * cols)
            .map(|_| Complex::new(next(), next()))
            .collect();
        ComplexMatrix::new(rows, cols, data).unwrap()
    }

    // Independent oracle: explicit index triple loop over a 2-D copy.
    fn naive_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<Vec<Complex>> {
        let mut c = vec![vec![Complex::ZERO; b.cols()]; a.rows()];
        for (i, c_row) in c.iter_mut().enumerate() {
            for (j, c_ij) in c_row.iter_mut().enumerate() {
                for k in 0..a.cols() {
                    let (x, y) = (a[(i, k)], b[(k, j)]);
                    c_ij.re += x.re * y.re - x.im * y.im;
                    c_ij.im += x.re * y.im + x.im * y.re;
                }
            }
        }
        c
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            ComplexMatrix::new(0, 2, vec![]),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            ComplexMatrix::new(2, 2, vec![Complex::ZERO; 3]),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            ComplexMatrix::new(1, 1, vec![Complex::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite(_))
        ));
        let ragged = vec![vec![1.0, 2.0], vec![3.0]];
        assert!(ComplexMatrix::from_parts(&ragged, None).is_err());
    }

    #[test]
    fn identity_times_m_is_m() {
        let m = lcg_matrix(2, 2, 1);
        assert_eq!(ComplexMatrix::identity(2).matmul(&m).unwrap(), m);
    }

    #[test]
    fn swap_is_an_involution() {
        let p = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        assert_eq!(p.matmul(&p).unwrap(), ComplexMatrix::identity(2));
    }

    #[test]
    fn matmul_matches_triple_loop() {
        let a = lcg_matrix(3, 3, 11);
        let b = lcg_matrix(3, 3, 12);
        let c = a.matmul(&b).unwrap();
        let oracle = naive_product(&a, &b);
        for i in 0..3 {
            for j in 0..3 {
                assert!((c[(i, j)] - oracle[i][j]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn matmul_dimension_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            a.matmul(&a),
            Err(Error::DimensionMismatch { op: "matmul", .. })
        ));
    }

    #[test]
    fn adjoint_of_real_symmetric_is_itself() {
        let m = ComplexMatrix::from_real(2, 2, &[1.0, 2.0, 2.0, 5.0]).unwrap();
        assert_eq!(m.adjoint(), m);
    }

    #[test]
    fn adjoint_by_hand() {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![Complex::ZERO, Complex::I, Complex::ZERO, Complex::ZERO],
        )
        .unwrap();
        let expected = ComplexMatrix::new(
            2,
            2,
            vec![Complex::ZERO, Complex::ZERO, -Complex::I, Complex::ZERO],
        )
        .unwrap();
        assert_eq!(m.adjoint(), expected);
    }

    #[test]
    fn adjoint_satisfies_inner_product_relation() {
        let m = lcg_matrix(4, 3, 5);
        let x = lcg_matrix(3, 1, 6).as_slice().to_vec();
        let y = lcg_matrix(4, 1, 7).as_slice().to_vec();
        let lhs = vector::inner(&m.mul_vec(&x).unwrap(), &y);
        let rhs = vector::inner(&x, &m.adjoint().mul_vec(&y).unwrap());
        assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn frobenius_cases() {
        assert_eq!(ComplexMatrix::identity(3).frobenius_norm_sq(), 3.0);
        assert_eq!(ComplexMatrix::zeros(2, 4).frobenius_norm_sq(), 0.0);
        // Column-sum oracle: sum_k ||M e_k||^2.
        let m = lcg_matrix(3, 4, 9);
        let by_columns: f64 = (0..4)
            .map(|k| vector::norm_sqr(&m.mul_vec(&vector::basis(4, k)).unwrap()))
            .sum();
        assert!((m.frobenius_norm_sq() - by_columns).abs() <= 1e-12);
    }

    #[test]
    fn trace_cases() {
        assert_eq!(ComplexMatrix::identity(4).trace().unwrap(), Complex::real(4.0));
        assert_eq!(
            ComplexMatrix::from_real_diagonal(&[1.0, 2.0, 3.0]).trace().unwrap(),
            Complex::real(6.0)
        );
        assert!(matches!(
            ComplexMatrix::zeros(2, 3).trace(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        let a = lcg_matrix(3, 3, 21);
        let b = lcg_matrix(3, 3, 22);
        let ab = a.matmul(&b).unwrap().trace().unwrap();
        let ba = b.matmul(&a).unwrap().trace().unwrap();
        assert!((ab - ba).abs() <= 1e-12);
    }

    #[test]
    fn hermitian_part_is_hermitian() {
        let m = lcg_matrix(5, 5, 3);
        let h = m.hermitian_part();
        assert_eq!(h.hermitian_defect().unwrap(), 0.0);
        assert_eq!(h, h.adjoint());
    }
}
