//! Helpers for complex vectors represented as plain slices.

use super::Complex;

/// `<x, y>`, linear in the first argument and conjugate-linear in the second.
pub fn inner(x: &[Complex], y: &[Complex]) -> Complex {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| *a * b.conj()).sum()
}

pub fn norm_sqr(x: &[Complex]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

pub fn norm(x: &[Complex]) -> f64 {
    norm_sqr(x).sqrt()
}

pub fn sub(x: &[Complex], y: &[Complex]) -> Vec<Complex> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| *a - *b).collect()
}

/// `||x - y||^2`
pub fn distance_sqr(x: &[Complex], y: &[Complex]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (*a - *b).norm_sqr()).sum()
}

pub fn from_real(values: &[f64]) -> Vec<Complex> {
    values.iter().map(|&v| Complex::real(v)).collect()
}

/// Standard basis vector `e_index` of length `dim`.
pub fn basis(dim: usize, index: usize) -> Vec<Complex> {
    let mut e = vec![Complex::ZERO; dim];
    e[index] = Complex::ONE;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_is_conjugate_linear_in_second_slot() {
        let x = vec![Complex::ONE];
        let y = vec![Complex::I];
        assert_eq!(inner(&x, &y), Complex::new(0.0, -1.0));
        assert_eq!(inner(&y, &x), Complex::I);
    }

    #[test]
    fn distance_matches_norm_of_difference() {
        let x = from_real(&[1.0, 2.0, 3.0]);
        let y = vec![Complex::new(0.0, 1.0), Complex::ZERO, Complex::real(3.0)];
        assert_eq!(distance_sqr(&x, &y), norm_sqr(&sub(&x, &y)));
    }
}
