//! Complex polynomials in one formal variable, ascending coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial over `Complex64`. The zero polynomial has an empty
/// coefficient list; otherwise the trailing coefficient is nonzero.
///
/// Degree comparisons in the fission-graph rule rely on exact
/// cancellation of equal input coefficients, so trimming only removes
/// coefficients that are exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialC {
    coeffs: Vec<Complex64>,
}

impl PolynomialC {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the `i`-th power (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeff(0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl Serialize for PolynomialC {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolynomialC {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<[f64; 2]> = Vec::deserialize(deserializer)?;
        Ok(Self::new(pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = PolynomialC::new(vec![c(1.0), c(0.0), c(0.0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(PolynomialC::new(vec![c(0.0)]).is_zero());
    }

    #[test]
    fn subtraction_cancels_leading_terms_exactly() {
        let p = PolynomialC::new(vec![c(1.0), c(2.0)]);
        let q = PolynomialC::new(vec![c(3.0), c(2.0)]);
        assert_eq!(p.sub(&q).degree(), Some(0));
        assert!(p.sub(&p).is_zero());
    }
}
