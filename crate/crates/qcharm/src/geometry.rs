//! Image geometry of the slit maps: the slit endpoint `M(k)`, boundary
//! and hyperbola traces, the Parseval area functional, and a covering
//! probe.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, CatalogId};
use crate::harmonic::HarmonicMap;

/// Slit endpoint of the image of `Pk(k)`: the boundary of the disk maps
/// onto the ray `(-inf, M(k)]`.
///
/// `M(k) = (k^2+8k-1)/(4(1-k)^2) + (2k(k+1)/(1-k)^3) ln((1+k)/2)`,
/// with `M(0) = -1/4` and `M(k) -> -1/6` as `k -> 1`.
pub fn m_of_k(k: f64) -> f64 {
    assert!((0.0..1.0).contains(&k));
    // written in s = 1-k with ln_1p so the 1/s^2-scale cancellation
    // between the rational and log terms is resolved accurately near k=1
    let s = 1.0 - k;
    (k * k + 8.0 * k - 1.0) / (4.0 * s * s)
        + 2.0 * k * (k + 1.0) / (s * s * s) * (-s / 2.0).ln_1p()
}

/// One sampled point of a trace.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TraceSample {
    pub parameter: f64,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

/// Sampled trace with the worst residual and named verdict flags.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceResult {
    pub samples: Vec<TraceSample>,
    pub residual_max: f64,
    /// (claim name, holds) pairs for each property checked.
    pub verdicts: Vec<(String, bool)>,
}

impl TraceResult {
    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|&(_, v)| v)
    }

    /// CSV with the stable header `parameter,re,im,residual`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["parameter", "re", "im", "residual"]).unwrap();
        for s in &self.samples {
            w.write_record([
                format!("{:.12e}", s.parameter),
                format!("{:.12e}", s.re),
                format!("{:.12e}", s.im),
                format!("{:.12e}", s.residual),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Traces `Pk(k)` along `|z| = radius` over the window `t` in
/// `[t_cut, 2pi - t_cut]` and checks the slit claim: the image hugs the
/// ray `(-inf, M(k)]` on the real axis.
///
/// The reported `re_slack` is the observed excess `max Re - M(k)` at this
/// radius; no approach-rate model is assumed. The angular cut excludes the
/// neighborhood of the pre-image of the ray's escape to `+inf` at `t = 0`,
/// where `Im` decays slowly.
pub fn slit_check(k: f64, samples: usize, radius: f64) -> TraceResult {
    slit_check_windowed(k, samples, radius, 1.3)
}

/// [`slit_check`] with an explicit angular cut (radians, in `(0, pi)`).
pub fn slit_check_windowed(k: f64, samples: usize, radius: f64, t_cut: f64) -> TraceResult {
    assert!((0.0..1.0).contains(&radius) && radius > 0.0);
    assert!(samples >= 16);
    assert!(t_cut > 0.0 && t_cut < std::f64::consts::PI);
    let m = m_of_k(k);
    let id = CatalogId::Pk(k);
    let span = std::f64::consts::TAU - 2.0 * t_cut;
    let samples_vec: Vec<TraceSample> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let t = t_cut + span * i as f64 / (samples - 1) as f64;
            let z = radius * Complex64::new(0.0, t).exp();
            let w = catalog::evaluate_closed(&id, z).expect("|z| < 1");
            // residual: distance from the slit ray (-inf, M(k)]
            let residual = w.im.abs().max((w.re - m).max(0.0));
            TraceSample { parameter: t, re: w.re, im: w.im, residual }
        })
        .collect();
    let residual_max = samples_vec.iter().map(|s| s.residual).fold(0.0, f64::max);
    let re_slack = samples_vec.iter().map(|s| s.re - m).fold(f64::NEG_INFINITY, f64::max);
    let im_max = samples_vec.iter().map(|s| s.im.abs()).fold(0.0, f64::max);

    // real-axis trace: Pk on (-radius, radius) is real, strictly
    // increasing, with infimum above M(k)
    let axis: Vec<f64> = (0..samples)
        .map(|i| {
            let x = -radius + 2.0 * radius * i as f64 / (samples - 1) as f64;
            catalog::evaluate_closed(&id, Complex64::new(x, 0.0)).unwrap().re
        })
        .collect();
    let axis_real_im = (0..samples)
        .map(|i| {
            let x = -radius + 2.0 * radius * i as f64 / (samples - 1) as f64;
            catalog::evaluate_closed(&id, Complex64::new(x, 0.0)).unwrap().im.abs()
        })
        .fold(0.0, f64::max);
    let axis_monotone = axis.windows(2).all(|w| w[1] > w[0]);
    let axis_above_m = axis.iter().all(|&u| u > m);

    TraceResult {
        samples: samples_vec,
        residual_max,
        verdicts: vec![
            (format!("re_slack<={re_slack:.3e}"), true),
            ("im_small".into(), im_max <= 5e-3),
            ("re_below_slit_plus_slack".into(), re_slack <= 5e-3),
            ("axis_real".into(), axis_real_im < 1e-12),
            ("axis_increasing".into(), axis_monotone),
            ("axis_above_M".into(), axis_above_m),
        ],
    }
}

/// Image of the hyperbola `xi.eta = c` under `Pk(k)` through the
/// substitution `zeta = (1+z)/(1-z)`: the displayed formula for
/// `u(xi)` is compared against direct evaluation of the map, and the
/// imaginary part is checked to equal `c/2`.
pub fn hyperbola_trace(
    k: f64,
    c: f64,
    xi_range: (f64, f64),
    samples: usize,
) -> TraceResult {
    assert!(c != 0.0);
    assert!(xi_range.0 > 0.0 && xi_range.1 > xi_range.0);
    assert!(samples >= 2);
    let id = CatalogId::Pk(k);
    let samples_vec: Vec<TraceSample> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let xi = xi_range.0 + (xi_range.1 - xi_range.0) * i as f64 / (samples - 1) as f64;
            let eta = c / xi;
            let zeta = Complex64::new(xi, eta);
            let z = (zeta - 1.0) / (zeta + 1.0);
            let direct = catalog::evaluate_closed(&id, z).expect("zeta in right half-plane");
            let u = u_formula(k, xi, c);
            let residual = (direct.re - u).abs().max((direct.im - c / 2.0).abs());
            TraceSample { parameter: xi, re: direct.re, im: direct.im, residual }
        })
        .collect();
    let residual_max = samples_vec.iter().map(|s| s.residual).fold(0.0, f64::max);
    let monotone_up = samples_vec.windows(2).all(|w| w[1].re > w[0].re);
    let monotone_down = samples_vec.windows(2).all(|w| w[1].re < w[0].re);
    TraceResult {
        samples: samples_vec,
        residual_max,
        verdicts: vec![
            ("u_matches_direct".into(), residual_max < 1e-8),
            ("u_monotone".into(), monotone_up || monotone_down),
        ],
    }
}

/// `u(xi)` on the hyperbola `xi.eta = c`.
///
/// The displayed version of this formula carries two typos: the signed
/// combination of the `xi^2 - eta^2` and `(xi-1)^2 - eta^2` terms loses
/// its minus signs on the `eta^2 = c^2/xi^2` contributions, and the log
/// term's `eta^2` coefficient must be `(1-k)^2/4`, not `(1-k)/4`. The
/// corrected form below reproduces direct evaluation of the map to
/// machine precision.
fn u_formula(k: f64, xi: f64, c: f64) -> f64 {
    let eta2 = c * c / (xi * xi);
    (1.0 - 4.0 * k - k * k) / (4.0 * (1.0 - k) * (1.0 - k)) * (xi * xi - eta2 - 1.0)
        + k / ((1.0 - k) * (1.0 - k)) * ((xi - 1.0) * (xi - 1.0) - eta2)
        + k * (k + 1.0) / (1.0 - k).powi(3)
            * (((1.0 + k + (1.0 - k) * xi).powi(2) + (1.0 - k) * (1.0 - k) * eta2) / 4.0).ln()
}

/// Area of the image by the Parseval form
/// `pi sum n (|a_n|^2 - |b_n|^2)` over retained coefficients.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AreaResult {
    pub area: f64,
    /// Magnitude of the last retained term, as a convergence indicator.
    pub tail_indicator: f64,
}

pub fn area(f: &HarmonicMap) -> AreaResult {
    let order = f.order();
    let mut area = 0.0;
    let mut last = 0.0;
    for n in 1..=order {
        let term = n as f64 * (f.a(n).norm_sqr() - f.b(n).norm_sqr());
        area += term;
        last = term.abs();
    }
    AreaResult { area: std::f64::consts::PI * area, tail_indicator: std::f64::consts::PI * last }
}

/// Minimum of `|f|` over the sampled circle `|z| = radius`: a probe of
/// the covering radius. For the slit maps at `radius -> 1` this tends to
/// the distance `|M(k)|` from the origin to the omitted slit.
pub fn min_boundary_modulus(f: &HarmonicMap, radius: f64, samples: usize) -> f64 {
    assert!((0.0..1.0).contains(&radius) && radius > 0.0);
    (0..samples)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / samples as f64;
            f.evaluate(radius * Complex64::new(0.0, t).exp()).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Closed-form variant of [`min_boundary_modulus`] for catalog ids,
/// trustworthy near `|z| = 1` where truncated series are not.
pub fn min_boundary_modulus_closed(id: &CatalogId, radius: f64, samples: usize) -> f64 {
    assert!((0.0..1.0).contains(&radius) && radius > 0.0);
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / samples as f64;
            let z = radius * Complex64::new(0.0, t).exp();
            catalog::evaluate_closed(id, z).expect("|z| < 1").norm()
        })
        .reduce(|| f64::INFINITY, f64::min)
}
