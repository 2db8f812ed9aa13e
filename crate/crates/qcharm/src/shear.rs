//! Clunie–Sheil-Small shearing: build a harmonic map `f = h + conj(g)`
//! with prescribed dilatation `omega = g'/h'` from a conformal map `phi`
//! by solving `h - g = phi` (difference mode) or `h + g = phi` (sum mode).

use num_complex::Complex64;

use crate::harmonic::HarmonicMap;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Which linear combination of `h` and `g` the conformal map prescribes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShearMode {
    /// `h + g = phi`, so `h' = phi'/(1 + omega)`.
    Sum,
    /// `h - g = phi`, so `h' = phi'/(1 - omega)`.
    Diff,
}

/// Input data for a shearing construction.
#[derive(Debug, Clone)]
pub struct ShearProblem {
    pub phi: TruncatedSeries,
    pub omega: TruncatedSeries,
    pub mode: ShearMode,
    pub label: String,
}

impl ShearProblem {
    pub fn new(
        phi: TruncatedSeries,
        omega: TruncatedSeries,
        mode: ShearMode,
        label: impl Into<String>,
    ) -> Self {
        Self { phi, omega, mode, label: label.into() }
    }
}

/// Solves the shear problem to the common truncation order, normalizing
/// `h(0) = g(0) = 0`.
pub fn shear(problem: &ShearProblem) -> Result<HarmonicMap> {
    let order = problem.phi.order().min(problem.omega.order());
    let phi = problem.phi.truncate(order);
    let omega = problem.omega.truncate(order);

    let one = TruncatedSeries::one(order.saturating_sub(1));
    let omega_trunc = omega.truncate(order.saturating_sub(1));
    let (denom, sign) = match problem.mode {
        ShearMode::Sum => (one.add(&omega_trunc), '+'),
        ShearMode::Diff => (one.sub(&omega_trunc), '-'),
    };
    if denom.coeff(0).norm() <= 1e-14 {
        return Err(Error::DegenerateDenominator(sign));
    }

    let h_prime = phi.differentiate().div(&denom)?;
    let g_prime = omega_trunc.mul(&h_prime);
    let h = h_prime.integrate().truncate(order);
    let g = g_prime.integrate().truncate(order);
    Ok(HarmonicMap::new(h, g, problem.label.clone()))
}

/// The half-plane shear `P_alpha(k)`: `phi(z) = z/(1-z)` sheared in sum
/// mode with `omega(z) = k e^{i alpha} z`.
pub fn construct_p_alpha(k: f64, alpha: f64, order: usize) -> HarmonicMap {
    assert!((0.0..1.0).contains(&k), "need 0 <= k < 1");
    let w = k * Complex64::new(0.0, alpha).exp();
    // z/(1-z) = z + z^2 + ...
    let phi = TruncatedSeries::geometric(order)
        .mul(&TruncatedSeries::monomial(Complex64::new(1.0, 0.0), 1, order));
    let omega = TruncatedSeries::monomial(w, 1, order);
    let problem =
        ShearProblem::new(phi, omega, ShearMode::Sum, format!("palpha:{k}:{alpha}"));
    shear(&problem).expect("1 + k e^{i alpha} z is a unit at the origin")
}
