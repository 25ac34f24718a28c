//! Minimal 2x2 complex matrix algebra.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Self = Self([[ONE, ZERO], [ZERO, ONE]]);
    pub const SIGMA1: Self = Self([[ZERO, ONE], [ONE, ZERO]]);
    pub const SIGMA2: Self = Self([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]]);
    pub const SIGMA3: Self = Self([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self([[a, b], [c, d]])
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self([[a, ZERO], [ZERO, d]])
    }

    pub fn from_columns(c1: [Complex64; 2], c2: [Complex64; 2]) -> Self {
        Self([[c1[0], c2[0]], [c1[1], c2[1]]])
    }

    pub fn lower(c: Complex64) -> Self {
        Self([[ONE, ZERO], [c, ONE]])
    }

    pub fn upper(b: Complex64) -> Self {
        Self([[ONE, b], [ZERO, ONE]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn inv(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return None;
        }
        let m = &self.0;
        Some(Self([[m[1][1] / det, -m[0][1] / det], [-m[1][0] / det, m[0][0] / det]]))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let m = &self.0;
        Self([[m[0][0] * c, m[0][1] * c], [m[1][0] * c, m[1][1] * c]])
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }
}

impl Mul for Matrix2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Add for Matrix2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        Self([[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]])
    }
}

impl Sub for Matrix2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Matrix2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_relations() {
        let (s1, s2, s3) = (Matrix2::SIGMA1, Matrix2::SIGMA2, Matrix2::SIGMA3);
        assert_eq!(s1 * s1, Matrix2::IDENTITY);
        assert_eq!(s2 * s2, Matrix2::IDENTITY);
        assert_eq!(s1 * s2, s3.scale(I));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix2::new(Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.1), Complex64::new(3.0, 0.0), Complex64::new(0.2, -1.0));
        let r = m * m.inv().unwrap() - Matrix2::IDENTITY;
        assert!(r.frobenius() < 1e-15);
        assert!(Matrix2::diag(ONE, ZERO).inv().is_none());
    }
}
