//! The `f = h + conj(g)` data model: dilatation, Jacobian, affine
//! combination, the starlike-to-convex transform, and sampled
//! consistency residuals.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Realness cutoff used by [`HarmonicMap::typically_real_residual`].
pub const REAL_TOL: f64 = 1e-10;

/// Planar harmonic mapping `f = h + conj(g)` with both parts truncated
/// at the same order. `label` carries construction provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    h: TruncatedSeries,
    g: TruncatedSeries,
    label: String,
}

/// Serialized form of a [`HarmonicMap`]: versioned, coefficients as
/// `(re, im)` pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct MapRecord {
    pub version: u32,
    pub label: String,
    pub order: usize,
    pub h_coeffs: Vec<(f64, f64)>,
    pub g_coeffs: Vec<(f64, f64)>,
}

impl HarmonicMap {
    /// Pair `h`, `g` into a map; both parts are truncated to the common order.
    pub fn new(h: TruncatedSeries, g: TruncatedSeries, label: impl Into<String>) -> Self {
        let n = h.order().min(g.order());
        Self { h: h.truncate(n), g: g.truncate(n), label: label.into() }
    }

    /// The identity map `z` at the given order.
    pub fn identity(order: usize) -> Self {
        Self::new(
            TruncatedSeries::monomial(Complex64::new(1.0, 0.0), 1, order),
            TruncatedSeries::zero(order),
            "identity",
        )
    }

    pub fn h(&self) -> &TruncatedSeries {
        &self.h
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// `a_n`: coefficient of `z^n` in `h`.
    pub fn a(&self, n: usize) -> Complex64 {
        self.h.coeff(n)
    }

    /// `b_n`: coefficient of `z^n` in `g`.
    pub fn b(&self, n: usize) -> Complex64 {
        self.g.coeff(n)
    }

    /// S_H-style normalization: `h(0) = 0`, `h'(0) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.h.coeff(0).norm() < 1e-12 && (self.h.coeff(1) - Complex64::new(1.0, 0.0)).norm() < 1e-12
    }

    /// Value `f(z) = h(z) + conj(g(z))` from the partial sums.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.h.evaluate(z) + self.g.evaluate(z).conj()
    }

    /// The dilatation series `omega = g'/h'`.
    pub fn dilatation(&self) -> Result<TruncatedSeries> {
        let hp = self.h.differentiate();
        let h0 = hp.coeff(0).norm();
        if h0 <= 1e-14 {
            return Err(Error::DegenerateAnalyticPart(h0));
        }
        self.g.differentiate().div(&hp)
    }

    /// `J_f(z) = |h'(z)|^2 - |g'(z)|^2` from the partial sums.
    pub fn jacobian_at(&self, z: Complex64) -> f64 {
        let hp = self.h.differentiate().evaluate(z);
        let gp = self.g.differentiate().evaluate(z);
        hp.norm_sqr() - gp.norm_sqr()
    }

    /// Max over sampled circles of `|omega(z)| - k`. Nonpositive values are
    /// consistent with K-quasiregularity on the sampled set; the maximum
    /// modulus principle makes the outermost circle the binding one.
    pub fn quasiregular_excess(&self, k: f64, radii: &[f64], samples: usize) -> Result<f64> {
        let omega = self.dilatation()?;
        let mut worst = f64::NEG_INFINITY;
        for &r in radii {
            for i in 0..samples {
                let t = 2.0 * PI * i as f64 / samples as f64;
                let z = Complex64::from_polar(r, t);
                worst = worst.max(omega.evaluate(z).norm() - k);
            }
        }
        Ok(worst)
    }

    /// The affine shift `f -> f_0 + conj(b1 f_0)`: analytic part
    /// `h + conj(b1) g`, co-analytic part `g + b1 h`.
    pub fn affine_combine(&self, b1: Complex64) -> Result<Self> {
        if b1.norm() >= 1.0 {
            return Err(Error::AffineDegenerate(b1.norm()));
        }
        let h = self.h.add(&self.g.scale(b1.conj()));
        let g = self.g.add(&self.h.scale(b1));
        Ok(Self::new(h, g, format!("{}+affine(b1={})", self.label, b1)))
    }

    /// The starlike-to-convex transform `zH' = h`, `zG' = -g`:
    /// `a_n -> a_n/n`, `b_n -> -b_n/n`, `H(0) = G(0) = 0`.
    pub fn star_to_convex(&self) -> Self {
        let n = self.order();
        let mut hc = vec![Complex64::default(); n + 1];
        let mut gc = vec![Complex64::default(); n + 1];
        for i in 1..=n {
            hc[i] = self.h.coeff(i) / i as f64;
            gc[i] = -self.g.coeff(i) / i as f64;
        }
        Self::new(
            TruncatedSeries::new(hc),
            TruncatedSeries::new(gc),
            format!("star_to_convex({})", self.label),
        )
    }

    /// Sampled sign-condition residual for typical reality on a polar grid
    /// with radius cap 0.95.
    ///
    /// Per sample the violation `max(0, -sign(Im z) Im f(z))` is counted only
    /// beyond the certified truncation tail of the partial sums; a truncated
    /// series cannot witness the sign condition closer to the boundary than
    /// its own tail allows. This is a sufficient check, not a proof.
    pub fn typically_real_residual(&self, samples: usize) -> Result<f64> {
        let im_max = self.h.max_imag_abs().max(self.g.max_imag_abs());
        if im_max >= REAL_TOL {
            return Err(Error::NonRealCoefficients(im_max));
        }
        let rings = ((samples as f64).sqrt().ceil() as usize).max(4);
        let angles = samples.div_ceil(rings).max(8);
        let mut worst: f64 = 0.0;
        for ir in 1..=rings {
            let r = 0.95 * ir as f64 / rings as f64;
            let tail = self.h.truncation_error_bound(r) + self.g.truncation_error_bound(r);
            for ia in 0..angles {
                let t = 2.0 * PI * (ia as f64 + 0.5) / angles as f64;
                let z = Complex64::from_polar(r, t);
                if z.im.abs() < 1e-12 {
                    continue;
                }
                let v = -z.im.signum() * self.evaluate(z).im;
                worst = worst.max((v - tail).max(0.0));
            }
        }
        Ok(worst)
    }

    pub fn to_record(&self) -> MapRecord {
        MapRecord {
            version: 1,
            label: self.label.clone(),
            order: self.order(),
            h_coeffs: self.h.coeffs().iter().map(|c| (c.re, c.im)).collect(),
            g_coeffs: self.g.coeffs().iter().map(|c| (c.re, c.im)).collect(),
        }
    }

    pub fn from_record(rec: &MapRecord) -> Self {
        let to_series = |cs: &[(f64, f64)]| {
            TruncatedSeries::new(cs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
        };
        Self::new(to_series(&rec.h_coeffs), to_series(&rec.g_coeffs), rec.label.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("record serializes")
    }
}

/// Description of an admissible dilatation with bound `k`; the realized
/// `omega` satisfies `sup |omega| <= k` by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum DilatationSpec {
    /// `omega(z) = k e^{i alpha} z`.
    Linear { k: f64, alpha: f64 },
    /// `omega(z) = k e^{i rot} B(z)` with `B` a finite Blaschke product,
    /// optionally with an extra factor `z` (`vanishing`) so `omega(0) = 0`.
    Blaschke { k: f64, zeros: Vec<Complex64>, rotation: f64, vanishing: bool },
}

impl DilatationSpec {
    pub fn linear(k: f64, alpha: f64) -> Self {
        assert!((0.0..1.0).contains(&k), "k must lie in [0,1)");
        Self::Linear { k, alpha }
    }

    pub fn blaschke(k: f64, zeros: Vec<Complex64>, rotation: f64, vanishing: bool) -> Self {
        assert!((0.0..1.0).contains(&k), "k must lie in [0,1)");
        assert!(zeros.iter().all(|a| a.norm() < 1.0), "Blaschke zeros must lie in the open disk");
        Self::Blaschke { k, zeros, rotation, vanishing }
    }

    pub fn k(&self) -> f64 {
        match self {
            Self::Linear { k, .. } | Self::Blaschke { k, .. } => *k,
        }
    }

    /// Closed-form value of the realized dilatation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Self::Linear { k, alpha } => Complex64::from_polar(*k, *alpha) * z,
            Self::Blaschke { k, zeros, rotation, vanishing } => {
                let mut w = Complex64::from_polar(*k, *rotation);
                if *vanishing {
                    w *= z;
                }
                for a in zeros {
                    w *= (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
                }
                w
            }
        }
    }

    /// Truncated series of the realized dilatation.
    pub fn realize(&self, order: usize) -> TruncatedSeries {
        match self {
            Self::Linear { k, alpha } => {
                TruncatedSeries::monomial(Complex64::from_polar(*k, *alpha), 1, order)
            }
            Self::Blaschke { k, zeros, rotation, vanishing } => {
                let mut w = TruncatedSeries::constant(
                    Complex64::from_polar(*k, *rotation),
                    order,
                );
                if *vanishing {
                    w = w.mul(&TruncatedSeries::monomial(Complex64::new(1.0, 0.0), 1, order));
                }
                let one = Complex64::new(1.0, 0.0);
                for a in zeros {
                    // (z - a) / (1 - conj(a) z) = (z - a) * sum conj(a)^n z^n
                    let num = TruncatedSeries::monomial(one, 1, order)
                        .sub(&TruncatedSeries::constant(*a, order));
                    let inv = TruncatedSeries::geometric_ratio(a.conj(), order);
                    w = w.mul(&num).mul(&inv);
                }
                w
            }
        }
    }

    /// Max of `|omega| - k` over a sampled circle, from the closed form.
    pub fn sup_excess_on_circle(&self, r: f64, samples: usize) -> f64 {
        let k = self.k();
        (0..samples)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / samples as f64;
                self.eval(Complex64::from_polar(r, t)).norm() - k
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
