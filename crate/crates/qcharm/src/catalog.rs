//! Named extremal maps: closed-form coefficient laws, closed-form point
//! evaluators, and the CLI identifier grammar `name[:param[:param]]`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::bounds;
use crate::harmonic::HarmonicMap;
use crate::series::TruncatedSeries;
use crate::shear::{self, ShearMode, ShearProblem};
use crate::{Error, Result};

const TAU: f64 = std::f64::consts::TAU;

/// Identifier for one of the named maps.
///
/// All `k` parameters must lie in `[0,1)`; angles are stored reduced to
/// `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogId {
    /// Harmonic Koebe map: `a_n = (n+1)(2n+1)/6`, `b_n = (n-1)(2n-1)/6`.
    HarmonicKoebe,
    /// K-quasiconformal harmonic Koebe map with dilatation `kz`:
    /// `a_n = A(n,k)`, `b_n = B(n,k)`.
    Pk(f64),
    /// Half-plane shear with dilatation `k e^{i alpha} z`.
    PAlpha(f64, f64),
    /// Convex half-plane map with dilatation `-kz`:
    /// `a_n = a(n,k)`, `b_n = -b(n,k)`.
    P(f64),
    /// Affine extension `P(k0) + k conj(P(k0))`, `k0 = 2k/(1+k^2)`.
    Q(f64),
    /// Affine extension `Pk(k0) + k conj(Pk(k0))`.
    Qk(f64),
    /// Half-plane map attaining the bounds (n+1)/2, (n-1)/2 in modulus.
    L,
    /// Area minimizer `z + (k/2) conj(z)^2`.
    F0(f64),
}

fn check_k(k: f64) -> Result<f64> {
    if (0.0..1.0).contains(&k) {
        Ok(k)
    } else {
        Err(Error::ParseError(format!(
            "parameter k = {k} outside [0,1): quasiconformality requires k < 1"
        )))
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let params: Vec<&str> = parts.collect();
        let parse_f = |t: &str| -> Result<f64> {
            t.parse::<f64>()
                .map_err(|_| Error::ParseError(format!("bad numeric parameter {t:?} in {s:?}")))
        };
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::ParseError(format!(
                    "{name:?} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match name {
            "koebe-h" => {
                arity(0)?;
                Ok(Self::HarmonicKoebe)
            }
            "l" => {
                arity(0)?;
                Ok(Self::L)
            }
            "pk" => {
                arity(1)?;
                Ok(Self::Pk(check_k(parse_f(params[0])?)?))
            }
            "p" => {
                arity(1)?;
                Ok(Self::P(check_k(parse_f(params[0])?)?))
            }
            "q" => {
                arity(1)?;
                Ok(Self::Q(check_k(parse_f(params[0])?)?))
            }
            "qk" => {
                arity(1)?;
                Ok(Self::Qk(check_k(parse_f(params[0])?)?))
            }
            "f0" => {
                arity(1)?;
                Ok(Self::F0(check_k(parse_f(params[0])?)?))
            }
            "palpha" => {
                arity(2)?;
                let k = check_k(parse_f(params[0])?)?;
                let alpha = parse_f(params[1])?.rem_euclid(TAU);
                Ok(Self::PAlpha(k, alpha))
            }
            _ => Err(Error::ParseError(format!("unknown catalog id {s:?}"))),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HarmonicKoebe => write!(f, "koebe-h"),
            Self::Pk(k) => write!(f, "pk:{k}"),
            Self::PAlpha(k, a) => write!(f, "palpha:{k}:{a}"),
            Self::P(k) => write!(f, "p:{k}"),
            Self::Q(k) => write!(f, "q:{k}"),
            Self::Qk(k) => write!(f, "qk:{k}"),
            Self::L => write!(f, "l"),
            Self::F0(k) => write!(f, "f0:{k}"),
        }
    }
}

/// P_alpha coefficient pair (a_n, b_n-of-the-formula); the map's
/// co-analytic coefficient is `-b`.
fn p_alpha_coeff(n: usize, w: Complex64) -> (Complex64, Complex64) {
    let nf = n as f64;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let denom = nf * (Complex64::new(1.0, 0.0) + w).powu(2);
    let a = (Complex64::new(nf, 0.0) + (nf + 1.0) * w - sign * w.powu(n as u32 + 1)) / denom;
    let b = -((nf - 1.0) * w + nf * w * w + sign * w.powu(n as u32 + 1)) / denom;
    (a, b)
}

/// Exact closed-form coefficients of the named map, truncated at `order`.
pub fn coefficients(id: &CatalogId, order: usize) -> HarmonicMap {
    assert!(order >= 1, "need order >= 1");
    let real = |a: fn(usize) -> f64, b: fn(usize) -> f64, order: usize| {
        let h: Vec<f64> = (0..=order).map(|n| if n == 0 { 0.0 } else { a(n) }).collect();
        let g: Vec<f64> = (0..=order).map(|n| if n == 0 { 0.0 } else { b(n) }).collect();
        (TruncatedSeries::from_real(&h), TruncatedSeries::from_real(&g))
    };
    let (h, g) = match *id {
        CatalogId::HarmonicKoebe => real(
            |n| ((n + 1) * (2 * n + 1)) as f64 / 6.0,
            |n| ((n - 1) * (2 * n - 1)) as f64 / 6.0,
            order,
        ),
        CatalogId::Pk(k) => {
            let h: Vec<f64> =
                (0..=order).map(|n| if n == 0 { 0.0 } else { bounds::a_big(n, k) }).collect();
            let g: Vec<f64> =
                (0..=order).map(|n| if n == 0 { 0.0 } else { bounds::b_big(n, k) }).collect();
            (TruncatedSeries::from_real(&h), TruncatedSeries::from_real(&g))
        }
        CatalogId::PAlpha(k, alpha) => {
            let w = k * Complex64::new(0.0, alpha).exp();
            let mut h = vec![Complex64::new(0.0, 0.0); order + 1];
            let mut g = vec![Complex64::new(0.0, 0.0); order + 1];
            for n in 1..=order {
                let (a, b) = p_alpha_coeff(n, w);
                h[n] = a;
                g[n] = -b;
            }
            (TruncatedSeries::new(h), TruncatedSeries::new(g))
        }
        CatalogId::P(k) => {
            let h: Vec<f64> =
                (0..=order).map(|n| if n == 0 { 0.0 } else { bounds::a_small(n, k) }).collect();
            let g: Vec<f64> =
                (0..=order).map(|n| if n == 0 { 0.0 } else { -bounds::b_small(n, k) }).collect();
            (TruncatedSeries::from_real(&h), TruncatedSeries::from_real(&g))
        }
        CatalogId::Q(k) => {
            let k0 = bounds::k0_of_k(k);
            let base = coefficients(&CatalogId::P(k0), order);
            return base
                .affine_combine(Complex64::new(k, 0.0))
                .expect("k < 1")
                .with_label(id.to_string());
        }
        CatalogId::Qk(k) => {
            let k0 = bounds::k0_of_k(k);
            let base = coefficients(&CatalogId::Pk(k0), order);
            return base
                .affine_combine(Complex64::new(k, 0.0))
                .expect("k < 1")
                .with_label(id.to_string());
        }
        CatalogId::L => real(|n| (n + 1) as f64 / 2.0, |n| -((n as f64 - 1.0) / 2.0), order),
        CatalogId::F0(k) => {
            let mut g = vec![0.0; order + 1];
            if order >= 2 {
                g[2] = k / 2.0;
            }
            let mut h = vec![0.0; order + 1];
            h[1] = 1.0;
            (TruncatedSeries::from_real(&h), TruncatedSeries::from_real(&g))
        }
    };
    HarmonicMap::new(h, g, id.to_string())
}

/// Principal-branch log; safe here because every argument used below has
/// positive real part when `|z| < 1` and `k < 1`.
fn ln(z: Complex64) -> Complex64 {
    z.ln()
}

/// Value of the named map from its displayed rational+log closed form.
///
/// Errors with [`Error::BranchAmbiguity`] when `|z| >= 1`, where the
/// principal-branch evaluation is no longer certified.
pub fn evaluate_closed(id: &CatalogId, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::BranchAmbiguity(z.norm()));
    }
    let one = Complex64::new(1.0, 0.0);
    let value = match *id {
        CatalogId::HarmonicKoebe => {
            let d = (one - z).powu(3);
            let h = (z - z * z / 2.0 + z * z * z / 6.0) / d;
            let g = (z * z / 2.0 + z * z * z / 6.0) / d;
            h + g.conj()
        }
        CatalogId::Pk(k) => {
            let km1_3 = (k - 1.0) * (k - 1.0) * (k - 1.0);
            let lg = ln((one - z) / (one - k * z));
            let rat = (one - z) * (one - z);
            let h = ((k - 1.0) * (one - 3.0 * k + 2.0 * k * z) * z / rat + k * (k + 1.0) * lg)
                / km1_3;
            let g = (k / km1_3)
                * ((1.0 - k) * (one + k - 2.0 * z) * z / rat + (k + 1.0) * lg);
            h + g.conj()
        }
        CatalogId::PAlpha(k, alpha) => {
            let w = k * Complex64::new(0.0, alpha).exp();
            let l1 = z / ((one + w) * (one - z));
            let l2 = w / (one + w).powu(2) * ln((one + w * z) / (one - z));
            let h = l1 + l2;
            let g = w * l1 - l2;
            h + g.conj()
        }
        CatalogId::P(k) => {
            let lg = ln((one - k * z) / (one - z));
            let h = z / ((1.0 - k) * (one - z)) - k / ((1.0 - k) * (1.0 - k)) * lg;
            let g = -k * z / ((1.0 - k) * (one - z)) + k / ((1.0 - k) * (1.0 - k)) * lg;
            h + g.conj()
        }
        CatalogId::Q(k) => {
            let base = evaluate_closed(&CatalogId::P(bounds::k0_of_k(k)), z)?;
            base + k * base.conj()
        }
        CatalogId::Qk(k) => {
            let base = evaluate_closed(&CatalogId::Pk(bounds::k0_of_k(k)), z)?;
            base + k * base.conj()
        }
        CatalogId::L => {
            let half = z / (one - z) / 2.0;
            let half2 = z / (one - z).powu(2) / 2.0;
            (half + half2) + (half - half2).conj()
        }
        CatalogId::F0(k) => z + k / 2.0 * (z * z).conj(),
    };
    Ok(value)
}

/// Affine extension `base + conj(b1 . base)` as a coefficient object;
/// equals the named Q maps when `base` is P or Pk at `k0` and `b1 = k`.
pub fn build_general_q(base: &HarmonicMap, b1: Complex64) -> Result<HarmonicMap> {
    base.affine_combine(b1)
}

/// `Pk(k)` built independently via the difference-mode shear of the
/// analytic Koebe function with dilatation `kz`, for cross-validation
/// against [`coefficients`].
pub fn pk_via_shear(k: f64, order: usize) -> HarmonicMap {
    assert!((0.0..1.0).contains(&k));
    let phi = TruncatedSeries::from_real(
        &(0..=order).map(|n| n as f64).collect::<Vec<_>>(),
    );
    let omega = TruncatedSeries::monomial(Complex64::new(k, 0.0), 1, order);
    let problem = ShearProblem::new(phi, omega, ShearMode::Diff, format!("pk:{k}"));
    shear::shear(&problem).expect("1 - kz is a unit at the origin")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shear::construct_p_alpha;

    #[test]
    fn parse_roundtrip_and_rejects() {
        let ids = ["koebe-h", "pk:0.5", "palpha:0.5:3.14159", "p:0.5", "q:0.5", "qk:0.5", "l",
            "f0:0.5"];
        for s in ids {
            let id: CatalogId = s.parse().unwrap();
            let rt: CatalogId = id.to_string().parse().unwrap();
            assert_eq!(id, rt, "{s}");
        }
        assert!("pk:1.0".parse::<CatalogId>().is_err());
        assert!("pk:-0.1".parse::<CatalogId>().is_err());
        assert!("pk".parse::<CatalogId>().is_err());
        assert!("pk:0.5:1".parse::<CatalogId>().is_err());
        assert!("nope".parse::<CatalogId>().is_err());
        assert!("f0:abc".parse::<CatalogId>().is_err());
        match "pk:1.5".parse::<CatalogId>() {
            Err(Error::ParseError(msg)) => assert!(msg.contains("k < 1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn koebe_h_and_l_coefficients() {
        let f = coefficients(&CatalogId::HarmonicKoebe, 8);
        assert_eq!(f.a(2).re, 2.5);
        assert_eq!(f.b(2).re, 0.5);
        let l = coefficients(&CatalogId::L, 8);
        assert_eq!(l.a(3).re, 2.0);
        assert_eq!(l.b(3).re, -1.0);
        assert!(l.is_normalized());
    }

    #[test]
    fn pk_zero_is_analytic_koebe() {
        let f = coefficients(&CatalogId::Pk(0.0), 12);
        for n in 1..=12 {
            assert_eq!(f.a(n).re, n as f64);
            assert_eq!(f.b(n), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn pk_coefficients_match_shear_to_order_64() {
        for k in [0.1, 0.5, 0.9] {
            let direct = coefficients(&CatalogId::Pk(k), 64);
            let sheared = pk_via_shear(k, 64);
            for n in 1..=64 {
                assert!((direct.a(n) - sheared.a(n)).norm() < 1e-9, "a_{n}, k={k}");
                assert!((direct.b(n) - sheared.b(n)).norm() < 1e-9, "b_{n}, k={k}");
            }
        }
    }

    #[test]
    fn p_coefficients_match_sum_shear_at_pi() {
        for k in [0.2, 0.5, 0.8] {
            let direct = coefficients(&CatalogId::P(k), 64);
            let sheared = construct_p_alpha(k, std::f64::consts::PI, 64);
            for n in 1..=64 {
                assert!((direct.a(n) - sheared.a(n)).norm() < 1e-9, "a_{n}, k={k}");
                assert!((direct.b(n) - sheared.b(n)).norm() < 1e-9, "b_{n}, k={k}");
            }
        }
    }

    #[test]
    fn coefficient_gaps() {
        for n in 2..=32 {
            for i in 0..20 {
                let k = i as f64 / 20.0;
                let pk = coefficients(&CatalogId::Pk(k), n);
                assert!((pk.a(n).re - pk.b(n).re - n as f64).abs() < 1e-11);
                let p = coefficients(&CatalogId::P(k), n);
                assert!((p.a(n).re + p.b(n).re - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pk_coefficients_increase_toward_koebe_h() {
        let koebe = coefficients(&CatalogId::HarmonicKoebe, 10);
        let mut prev = coefficients(&CatalogId::Pk(0.0), 10);
        for i in 1..=20 {
            let k = i as f64 / 21.0;
            let cur = coefficients(&CatalogId::Pk(k), 10);
            for n in 2..=10 {
                assert!(cur.a(n).re > prev.a(n).re + 1e-12, "a_{n} at k={k}");
                assert!(cur.b(n).re > prev.b(n).re + 1e-12, "b_{n} at k={k}");
                assert!(cur.a(n).re < koebe.a(n).re);
                assert!(cur.b(n).re < koebe.b(n).re);
            }
            prev = cur;
        }
    }

    #[test]
    fn q_and_qk_affine_laws() {
        // base = PK(0.8), b1 = 0.5: a_2 = A(2,0.8) + 0.5 B(2,0.8) = 2.6 = E_2(0.5)
        let qk = coefficients(&CatalogId::Qk(0.5), 6);
        assert!((qk.a(2).re - 2.6).abs() < 1e-12);
        assert!((qk.a(2).re - bounds::e_n(2, 0.5)).abs() < 1e-12);
        assert!((qk.b(2).re - bounds::f_n(2, 0.5)).abs() < 1e-12);
        assert!((qk.b(1).re - 0.5).abs() < 1e-15);
        for n in 2..=6 {
            assert!((qk.a(n).re - bounds::e_n(n, 0.5)).abs() < 1e-11);
            assert!((qk.b(n).re - bounds::f_n(n, 0.5)).abs() < 1e-11);
        }
        // literal Q: analytic part attains a(n,k0) - k b(n,k0) < C_n(k)
        let q = coefficients(&CatalogId::Q(0.5), 6);
        assert!((q.a(2).re - 1.2).abs() < 1e-12);
        assert!(q.a(2).re < bounds::c_n(2, 0.5));
        // aligned variant via general Q recovers C_n exactly
        let base = coefficients(&CatalogId::P(bounds::k0_of_k(0.5)), 6);
        let mirrored = HarmonicMap::new(base.h().clone(), base.g().neg(), "p-mirror");
        let aligned = build_general_q(&mirrored, Complex64::new(0.5, 0.0)).unwrap();
        for n in 2..=6 {
            assert!((aligned.a(n).re - bounds::c_n(n, 0.5)).abs() < 1e-12, "C_{n}");
            assert!((aligned.b(n).re - bounds::d_n(n, 0.5)).abs() < 1e-12, "D_{n}");
        }
    }

    #[test]
    fn general_q_identity_and_degenerate() {
        let base = coefficients(&CatalogId::Pk(0.3), 8);
        let same = build_general_q(&base, Complex64::new(0.0, 0.0)).unwrap();
        for n in 0..=8 {
            assert_eq!(base.a(n), same.a(n));
            assert_eq!(base.b(n), same.b(n));
        }
        assert!(matches!(
            build_general_q(&base, Complex64::new(1.0, 0.0)),
            Err(Error::AffineDegenerate(_))
        ));
    }

    #[test]
    fn closed_forms_match_series() {
        let pts = [
            Complex64::new(0.3, 0.0),
            Complex64::new(-0.25, 0.4),
            Complex64::new(0.1, -0.55),
        ];
        let ids = [
            CatalogId::HarmonicKoebe,
            CatalogId::Pk(0.5),
            CatalogId::PAlpha(0.5, 1.2),
            CatalogId::P(0.5),
            CatalogId::Q(0.4),
            CatalogId::Qk(0.4),
            CatalogId::L,
            CatalogId::F0(0.7),
        ];
        for id in ids {
            let f = coefficients(&id, 128);
            for z in pts {
                let closed = evaluate_closed(&id, z).unwrap();
                let series = f.evaluate(z);
                assert!((closed - series).norm() < 1e-9, "{id} at {z}");
            }
            assert_eq!(evaluate_closed(&id, Complex64::new(0.0, 0.0)).unwrap().norm(), 0.0);
        }
    }

    #[test]
    fn p_maps_to_right_half_plane() {
        // Re P(it) -> -1/2 as t -> 1
        let id = CatalogId::P(0.5);
        let mut prev_gap = f64::INFINITY;
        for t in [0.9, 0.99, 0.999, 0.9999] {
            let v = evaluate_closed(&id, Complex64::new(0.0, t)).unwrap();
            let gap = (v.re + 0.5).abs();
            assert!(v.re > -0.5);
            assert!(gap < prev_gap);
            prev_gap = gap;
        }
        assert!(prev_gap < 1e-3);
    }

    #[test]
    fn branch_guard() {
        assert!(matches!(
            evaluate_closed(&CatalogId::Pk(0.5), Complex64::new(1.0, 0.3)),
            Err(Error::BranchAmbiguity(_))
        ));
    }
}
