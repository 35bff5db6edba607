use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;

/// A vector of `C³`, treated as `R⁶` with the real inner product
/// `⟨v, w⟩ = Re Σ vₖ·conj(wₖ)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AmbientVector(pub [Complex64; 3]);

impl AmbientVector {
    pub const ZERO: Self = AmbientVector([Complex64::new(0.0, 0.0); 3]);

    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        AmbientVector([c1, c2, c3])
    }

    pub fn from_real(re: [f64; 6]) -> Self {
        AmbientVector([
            Complex64::new(re[0], re[1]),
            Complex64::new(re[2], re[3]),
            Complex64::new(re[4], re[5]),
        ])
    }

    /// Real coordinates `(Re c1, Im c1, Re c2, Im c2, Re c3, Im c3)`.
    pub fn to_real(&self) -> [f64; 6] {
        let [a, b, c] = self.0;
        [a.re, a.im, b.re, b.im, c.re, c.im]
    }

    /// Standard basis vector of `R⁶` in the ordering of [`Self::to_real`].
    pub fn unit(k: usize) -> Self {
        let mut re = [0.0; 6];
        re[k] = 1.0;
        Self::from_real(re)
    }

    pub fn hermitian(&self, other: &Self) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.re * b.re + a.im * b.im)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplication by the imaginary unit; the complex structure of `C³`.
    pub fn mul_i(&self) -> Self {
        let [a, b, c] = self.0;
        AmbientVector([
            Complex64::new(-a.im, a.re),
            Complex64::new(-b.im, b.re),
            Complex64::new(-c.im, c.re),
        ])
    }

    pub fn scale(&self, s: f64) -> Self {
        let [a, b, c] = self.0;
        AmbientVector([a * s, b * s, c * s])
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        let [a, b, c] = self.0;
        AmbientVector([a * s, b * s, c * s])
    }

    /// `self + s·other`.
    pub fn axpy(&self, s: f64, other: &Self) -> Self {
        *self + other.scale(s)
    }

    pub fn normalized(&self) -> Self {
        self.scale(1.0 / self.norm())
    }

    /// Largest absolute difference over the six real coordinates.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.to_real();
        let b = other.to_real();
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for AmbientVector {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.0[k]
    }
}

impl Add for AmbientVector {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        AmbientVector([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for AmbientVector {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        AmbientVector([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for AmbientVector {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul<AmbientVector> for f64 {
    type Output = AmbientVector;

    fn mul(self, rhs: AmbientVector) -> AmbientVector {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vec6() -> impl Strategy<Value = AmbientVector> {
        proptest::array::uniform6(-2.0f64..2.0).prop_map(AmbientVector::from_real)
    }

    proptest! {
        #[test]
        fn real_product_is_real_part_of_hermitian(v in vec6(), w in vec6()) {
            prop_assert!((v.dot(&w) - v.hermitian(&w).re).abs() < 1e-15 * (1.0 + v.norm() * w.norm()));
        }

        #[test]
        fn complex_structure_is_an_isometry(v in vec6(), w in vec6()) {
            prop_assert!((v.mul_i().dot(&w.mul_i()) - v.dot(&w)).abs() < 1e-14);
            prop_assert!(v.mul_i().mul_i().max_abs_diff(&-v) == 0.0);
            // i·v is orthogonal to v
            prop_assert!(v.mul_i().dot(&v).abs() < 1e-14);
        }
    }

    #[test]
    fn real_coordinates_round_trip() {
        let re = [1.0, -2.0, 3.5, 0.25, -1.0, 7.0];
        assert_eq!(AmbientVector::from_real(re).to_real(), re);
    }
}
