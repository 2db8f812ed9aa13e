//! Exact-order truncated power-series arithmetic over complex coefficients.
//!
//! A [`TruncatedSeries`] holds the coefficients `c_0..c_N` of an analytic
//! germ at the origin. All binary operations truncate to the minimum order
//! of the operands; nothing is ever extended silently. Dense storage is
//! deliberate: every function in this problem domain has a dense expansion.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Constant-term cutoff for division; one order below accumulated
/// convolution noise at the default working order.
pub const ZERO_TOL: f64 = 1e-14;
/// Tolerance for the `c_0 = 1` precondition of [`TruncatedSeries::log_unit`].
pub const UNIT_TOL: f64 = 1e-12;

/// Finite sequence of complex coefficients `c_0..c_N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::default(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^deg`, truncated at `order`.
    pub fn monomial(c: Complex64, deg: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if deg <= order {
            s.coeffs[deg] = c;
        }
        s
    }

    /// `1/(1 - q z) = sum q^n z^n`.
    pub fn geometric_ratio(q: Complex64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..=order {
            coeffs.push(p);
            p *= q;
        }
        Self { coeffs }
    }

    /// The geometric series `1/(1 - z)`.
    pub fn geometric(order: usize) -> Self {
        Self::geometric_ratio(Complex64::new(1.0, 0.0), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `c_n`; zero beyond the retained order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn conj_coeffs(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| c * s).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    /// Coefficientwise sum to order `min(N_a, N_b)`.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|i| self.coeffs[i] + other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|i| self.coeffs[i] - other.coeffs[i]).collect(),
        }
    }

    /// Cauchy product to order `min(N_a, N_b)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Complex64::default(); n + 1];
        for (i, &a) in self.coeffs.iter().take(n + 1).enumerate() {
            for (j, &b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Long-division by back-substitution normalized on `c_0`.
    ///
    /// Fails with [`Error::ZeroConstantTerm`] when `|b.c_0| <= 1e-14`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0.norm() <= ZERO_TOL {
            return Err(Error::ZeroConstantTerm(b0.norm()));
        }
        let n = self.order().min(other.order());
        let mut q = vec![Complex64::default(); n + 1];
        for i in 0..=n {
            let mut s = self.coeffs[i];
            for j in 1..=i {
                s -= other.coeffs[j] * q[i - j];
            }
            q[i] = s / b0;
        }
        Ok(Self { coeffs: q })
    }

    /// Termwise derivative; the order drops by one (a constant stays order 0).
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..=self.order())
                .map(|i| self.coeffs[i] * i as f64)
                .collect(),
        }
    }

    /// Termwise antiderivative with constant term 0; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 2);
        coeffs.push(Complex64::default());
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / (i as f64 + 1.0));
        }
        Self { coeffs }
    }

    /// Series logarithm of a germ with `c_0 = 1`, via `L = ∫ a'/a`.
    pub fn log_unit(&self) -> Result<Self> {
        let d = (self.coeffs[0] - Complex64::new(1.0, 0.0)).norm();
        if d > UNIT_TOL {
            return Err(Error::NonUnitConstantTerm(d));
        }
        Ok(self.differentiate().div(self)?.integrate())
    }

    /// Horner evaluation of the partial sum at `z`.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Crude tail estimate `|c_N| r^{N+1} / (1 - r)` for evaluation at `|z| = r < 1`.
    pub fn truncation_error_bound(&self, r: f64) -> f64 {
        debug_assert!(r < 1.0);
        let n = self.order();
        self.coeffs[n].norm() * r.powi(n as i32 + 1) / (1.0 - r)
    }

    /// Partial-sum value together with the documented tail estimate.
    pub fn evaluate_with_error(&self, z: Complex64) -> (Complex64, f64) {
        (self.evaluate(z), self.truncation_error_bound(z.norm()))
    }
}
