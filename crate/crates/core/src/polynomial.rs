//! Complex polynomials in ascending coefficient order.
//!
//! [`GeneralPolynomial`] holds `c_0 + c_1 z + ... + c_n z^n` with an arbitrary
//! nonzero leading coefficient. [`MonicPolynomial`] stores `a_0..a_{n-1}` of
//! `z^n + a_{n-1} z^{n-1} + ... + a_0` with the leading one implicit; it is
//! the input type of every bound formula.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub mod format;

/// A complex coefficient or evaluation point.
pub type ComplexScalar = Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_finite(coeffs: &[Complex64]) -> Result<()> {
    match coeffs
        .iter()
        .position(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// Polynomial `c_0 + c_1 z + ... + c_n z^n` with `c_n != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralPolynomial {
    coeffs: Vec<Complex64>,
}

impl GeneralPolynomial {
    /// Builds a polynomial from ascending coefficients `c_0..c_n`.
    ///
    /// Requires at least two coefficients, all finite, and a nonzero leading
    /// coefficient.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::TooFewCoefficients {
                required: 2,
                found: coeffs.len(),
            });
        }
        check_finite(&coeffs)?;
        if coeffs[coeffs.len() - 1] == ZERO {
            return Err(Error::LeadingCoefficientZero);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor for real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Divides through by the leading coefficient. The zeros are unchanged.
    ///
    /// Fails only for the degree-zero remainder that [`Self::deflate_zero_roots`]
    /// can produce.
    pub fn normalize(&self) -> Result<MonicPolynomial> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeTooSmall {
                required: 1,
                found: 0,
            });
        }
        let lead = self.leading();
        MonicPolynomial::new(self.coeffs[..n].iter().map(|c| c / lead).collect())
    }

    /// Strips the largest power `z^m` dividing the polynomial.
    ///
    /// Returns `m` and the quotient, whose constant term is nonzero. The
    /// quotient may be a nonzero constant when the input is `c z^n`.
    pub fn deflate_zero_roots(&self) -> (usize, GeneralPolynomial) {
        // the leading coefficient is nonzero, so this always finds something
        let m = self.coeffs.iter().position(|c| *c != ZERO).unwrap_or(0);
        (
            m,
            GeneralPolynomial {
                coeffs: self.coeffs[m..].to_vec(),
            },
        )
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }
}

/// Monic polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0`.
///
/// Only `a_0..a_{n-1}` are stored. The bound formulas additionally need
/// `n >= 3` and `a_0 != 0`; those are checked where the formulas are
/// evaluated, not here.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<Complex64>,
}

impl MonicPolynomial {
    /// Builds `z^n + ...` from the `n` lower coefficients in ascending order.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TooFewCoefficients {
                required: 1,
                found: 0,
            });
        }
        check_finite(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Monic polynomial with the given zeros, expanded in double precision.
    pub fn from_roots(roots: &[Complex64]) -> Result<Self> {
        // full ascending coefficients, starting from the constant 1
        let mut full = vec![ONE];
        for &r in roots {
            let mut next = vec![ZERO; full.len() + 1];
            for (k, &c) in full.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            full = next;
        }
        full.pop();
        Self::new(full)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0..a_{n-1}`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `a_j` with the conventions `a_j = 0` for `j < 0` or `j > n` and
    /// `a_n = 1`, so formulas may index past either end.
    pub fn coeff(&self, j: isize) -> Complex64 {
        let n = self.degree() as isize;
        if j < 0 || j > n {
            ZERO
        } else if j == n {
            ONE
        } else {
            self.coeffs[j as usize]
        }
    }

    /// `|a_j|` under the same indexing conventions as [`Self::coeff`].
    pub fn abs_coeff(&self, j: isize) -> f64 {
        self.coeff(j).norm()
    }

    /// `sum_{j=lo}^{hi} |a_j|^2` over in-range indices; empty when `hi < lo`.
    pub fn sum_sq(&self, lo: isize, hi: isize) -> f64 {
        (lo..=hi).map(|j| self.coeff(j).norm_sqr()).sum()
    }

    /// Ascending coefficients including the leading one.
    pub fn full_coeffs(&self) -> Vec<Complex64> {
        let mut full = self.coeffs.clone();
        full.push(ONE);
        full
    }

    pub fn to_general(&self) -> GeneralPolynomial {
        GeneralPolynomial {
            coeffs: self.full_coeffs(),
        }
    }

    /// `p(z)` by Horner's scheme.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ONE, |acc, c| acc * z + c)
    }

    /// `(p(z), p'(z))` in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = ONE;
        let mut dp = ZERO;
        for c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `sum |a_j| r^j` including the leading term; scales the rounding error
    /// of [`Self::evaluate`] at any point of modulus `r`.
    pub fn evaluate_abs(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(1.0, |acc, c| acc * r + c.norm())
    }

    /// The reciprocal polynomial `(z^n / a_0) p(1/z)`.
    ///
    /// Its coefficients are `d_j = a_{n-j} / a_0` with `a_n = 1`, and its zeros
    /// are the reciprocals of the zeros of `p`.
    pub fn reciprocal(&self) -> Result<MonicPolynomial> {
        let a0 = self.coeffs[0];
        if a0 == ZERO {
            return Err(Error::ConstantTermZero);
        }
        let n = self.degree() as isize;
        Self::new((0..n).map(|j| self.coeff(n - j) / a0).collect())
    }

    /// `q(z) = (z - a_{n-1}) p(z)`, together with its `b` sequence.
    ///
    /// `q(z) = z^{n+1} - b_{n-1} z^{n-1} - ... - b_0` where
    /// `b_j = a_{n-1} a_j - a_{j-1}` and `a_{-1} = 0`.
    pub fn extended(&self) -> Result<ExtendedTransform> {
        let n = self.degree();
        if n < 3 {
            return Err(Error::DegreeTooSmall {
                required: 3,
                found: n,
            });
        }
        let top = self.coeff(n as isize - 1);
        let b: Vec<Complex64> = (0..n as isize)
            .map(|j| top * self.coeff(j) - self.coeff(j - 1))
            .collect();
        let mut q = Vec::with_capacity(n + 1);
        q.extend(b.iter().map(|bj| -bj));
        q.push(ZERO);
        Ok(ExtendedTransform {
            b,
            q: MonicPolynomial::new(q)?,
        })
    }
}

/// Output of [`MonicPolynomial::extended`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedTransform {
    /// `b_0..b_{n-1}`.
    pub b: Vec<Complex64>,
    /// The degree `n + 1` polynomial `(z - a_{n-1}) p(z)`.
    pub q: MonicPolynomial,
}

impl ExtendedTransform {
    /// `b_j`, zero outside `0..n`.
    pub fn b(&self, j: isize) -> Complex64 {
        if j < 0 || j as usize >= self.b.len() {
            ZERO
        } else {
            self.b[j as usize]
        }
    }

    pub fn abs_b(&self, j: isize) -> f64 {
        self.b(j).norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(coeffs: &[f64]) -> MonicPolynomial {
        MonicPolynomial::from_real(coeffs).unwrap()
    }

    #[test]
    fn normalize_divides_by_leading() {
        let m = GeneralPolynomial::from_real(&[2.0, 0.0, 0.0, 2.0])
            .unwrap()
            .normalize()
            .unwrap();
        assert_eq!(m, real(&[1.0, 0.0, 0.0]));

        let m = GeneralPolynomial::from_real(&[1.0, 1.0, 1.0, 1.0])
            .unwrap()
            .normalize()
            .unwrap();
        assert_eq!(m, real(&[1.0, 1.0, 1.0]));

        let m = GeneralPolynomial::from_real(&[-24.0, 26.0, -9.0, 1.0])
            .unwrap()
            .normalize()
            .unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m, real(&[-24.0, 26.0, -9.0]));
        for r in [2.0, 3.0, 4.0] {
            assert_eq!(m.evaluate(c(r, 0.0)), c(0.0, 0.0));
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            GeneralPolynomial::from_real(&[1.0, 0.0]),
            Err(Error::LeadingCoefficientZero)
        );
        assert_eq!(
            GeneralPolynomial::from_real(&[1.0]),
            Err(Error::TooFewCoefficients {
                required: 2,
                found: 1
            })
        );
        assert_eq!(
            GeneralPolynomial::from_real(&[1.0, f64::NAN, 1.0]),
            Err(Error::NonFinite { index: 1 })
        );
        assert_eq!(
            MonicPolynomial::from_real(&[f64::INFINITY]),
            Err(Error::NonFinite { index: 0 })
        );
        assert!(MonicPolynomial::new(vec![]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p = real(&[1.0, 0.0, 0.0]);
        assert_eq!(p.evaluate(c(-1.0, 0.0)), c(0.0, 0.0));
        assert_eq!(p.evaluate(c(0.0, 0.0)), c(1.0, 0.0));
        assert_eq!(real(&[2.0, 0.0, 1.0]).evaluate(c(1.0, 0.0)), c(4.0, 0.0));
    }

    #[test]
    fn derivative_matches_power_rule() {
        // p = z^3 + z^2 + 2, p' = 3z^2 + 2z
        let p = real(&[2.0, 0.0, 1.0]);
        let z = c(0.3, -1.2);
        let (v, dv) = p.evaluate_with_derivative(z);
        assert_relative_eq!(v.re, p.evaluate(z).re, epsilon = 1e-14);
        assert_relative_eq!(v.im, p.evaluate(z).im, epsilon = 1e-14);
        let expected = 3.0 * z * z + 2.0 * z;
        assert_relative_eq!(dv.re, expected.re, epsilon = 1e-14);
        assert_relative_eq!(dv.im, expected.im, epsilon = 1e-14);
    }

    #[test]
    fn safe_index_convention() {
        let p = real(&[2.0, 0.0, 1.0]);
        assert_eq!(p.coeff(-1), c(0.0, 0.0));
        assert_eq!(p.coeff(3), c(1.0, 0.0));
        assert_eq!(p.coeff(4), c(0.0, 0.0));
        assert_eq!(p.sum_sq(0, 2), 5.0);
        assert_eq!(p.sum_sq(0, -1), 0.0);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            real(&[1.0, 0.0, 0.0]).reciprocal().unwrap(),
            real(&[1.0, 0.0, 0.0])
        );
        assert_eq!(
            real(&[1.0, 1.0, 1.0]).reciprocal().unwrap(),
            real(&[1.0, 1.0, 1.0])
        );
        // d_0 = 1/a_0, d_1 = a_2/a_0, d_2 = a_1/a_0
        assert_eq!(
            real(&[2.0, 0.0, 1.0]).reciprocal().unwrap(),
            real(&[0.5, 0.5, 0.0])
        );
        assert_eq!(
            real(&[0.0, 1.0, 1.0]).reciprocal(),
            Err(Error::ConstantTermZero)
        );
    }

    #[test]
    fn extended_examples() {
        // b_0 = a_2 a_0 = 0, b_1 = a_2 a_1 - a_0 = -1, b_2 = a_2^2 - a_1 = 0
        let ext = real(&[1.0, 0.0, 0.0]).extended().unwrap();
        assert_eq!(ext.b, vec![c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
        // q = z^4 + z: ascending (-b_0, -b_1, -b_2, 0) = (0, 1, 0, 0)
        assert_eq!(ext.q, real(&[0.0, 1.0, 0.0, 0.0]));

        // (z - 1)(z^3 + z^2 + z + 1) = z^4 - 1
        let ext = real(&[1.0, 1.0, 1.0]).extended().unwrap();
        assert_eq!(ext.b, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(ext.q, real(&[-1.0, 0.0, 0.0, 0.0]));

        assert_eq!(
            real(&[1.0, 1.0]).extended(),
            Err(Error::DegreeTooSmall {
                required: 3,
                found: 2
            })
        );
    }

    #[test]
    fn extended_with_vanishing_top_is_a_shift() {
        let p = MonicPolynomial::new(vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.25, 0.0), c(0.0, 0.0)])
            .unwrap();
        let ext = p.extended().unwrap();
        for j in 0..4 {
            assert_eq!(ext.b(j), -p.coeff(j - 1));
        }
    }

    #[test]
    fn deflation_examples() {
        let g = GeneralPolynomial::from_real(&[0.0, 0.0, 1.0, 1.0]).unwrap();
        let (m, reduced) = g.deflate_zero_roots();
        assert_eq!(m, 2);
        assert_eq!(reduced, GeneralPolynomial::from_real(&[1.0, 1.0]).unwrap());

        let g = GeneralPolynomial::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(g.deflate_zero_roots(), (0, g.clone()));

        let g = GeneralPolynomial::from_real(&[0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        let (m, reduced) = g.deflate_zero_roots();
        assert_eq!(m, 1);
        assert_eq!(
            reduced,
            GeneralPolynomial::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap()
        );

        let (m, reduced) = GeneralPolynomial::from_real(&[0.0, 0.0, 3.0])
            .unwrap()
            .deflate_zero_roots();
        assert_eq!(m, 2);
        assert_eq!(reduced.degree(), 0);
        assert!(reduced.normalize().is_err());
    }

    #[test]
    fn from_roots_expands() {
        let p = MonicPolynomial::from_roots(&[c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]).unwrap();
        assert_eq!(p, real(&[-24.0, 26.0, -9.0]));
    }
}
