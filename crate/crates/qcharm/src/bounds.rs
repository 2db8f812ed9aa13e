//! Closed-form sharp coefficient bounds, parameter conversions, limit
//! values, and the auxiliary lemma polynomials with monotonicity scans.
//!
//! Naming: `a_big`/`b_big` are the bounds A(n,k), B(n,k) for the full
//! K-quasiconformal class with vanishing co-analytic derivative at 0;
//! `a_small`/`b_small` are the convex-class bounds a(n,k), b(n,k);
//! `c_n`/`d_n` and `e_n`/`f_n` are their affine extensions to the
//! unnormalized classes via the parameter doubling `k0 = 2k/(1+k^2)`.

use serde::{Deserialize, Serialize};

/// Beyond this value of `k` the rational forms lose digits to the
/// `(1-k)^3` denominator; the partial-sum forms are used instead.
const SUM_FORM_CROSSOVER: f64 = 0.999;

/// A(n,k): sharp bound on |a_n|. Displayed rational form below the
/// crossover, exact partial-sum form `n + (1/n) sum k^m (n-m)^2` above it.
pub fn a_big(n: usize, k: f64) -> f64 {
    if k > SUM_FORM_CROSSOVER {
        n as f64 + b_big_sum(n, k)
    } else {
        a_big_displayed(n, k)
    }
}

/// B(n,k): sharp bound on |b_n|.
pub fn b_big(n: usize, k: f64) -> f64 {
    if k > SUM_FORM_CROSSOVER {
        b_big_sum(n, k)
    } else {
        b_big_displayed(n, k)
    }
}

/// A(n,k) in the form with the `n(1-k)^2` denominator.
pub fn a_big_displayed(n: usize, k: f64) -> f64 {
    let nf = n as f64;
    if k == 0.0 {
        return nf;
    }
    let geo: f64 = (0..n).map(|m| k.powi(m as i32)).sum();
    ((1.0 - k) * nf * nf - 2.0 * k * nf + k * (k + 1.0) * geo) / (nf * (1.0 - k) * (1.0 - k))
}

/// A(n,k) in the simplified form with the `n(1-k)^3` denominator.
pub fn a_big_simplified(n: usize, k: f64) -> f64 {
    let nf = n as f64;
    if k == 0.0 {
        return nf;
    }
    (nf * nf + (-2.0 * nf * nf - 2.0 * nf + 1.0) * k + (nf + 1.0) * (nf + 1.0) * k * k
        - k.powi(n as i32 + 1)
        - k.powi(n as i32 + 2))
        / (nf * (1.0 - k).powi(3))
}

/// B(n,k) in the form with the `n(1-k)^2` denominator.
pub fn b_big_displayed(n: usize, k: f64) -> f64 {
    let nf = n as f64;
    if k == 0.0 {
        return 0.0;
    }
    let geo: f64 = (0..n).map(|m| k.powi(m as i32)).sum();
    (k * (1.0 - k) * nf * nf - 2.0 * k * nf + k * (k + 1.0) * geo) / (nf * (1.0 - k) * (1.0 - k))
}

/// B(n,k) in the simplified form with the `n(1-k)^3` denominator.
pub fn b_big_simplified(n: usize, k: f64) -> f64 {
    let nf = n as f64;
    if k == 0.0 {
        return 0.0;
    }
    k * ((nf - 1.0) * (nf - 1.0) + (-2.0 * nf * nf + 2.0 * nf + 1.0) * k + nf * nf * k * k
        - k.powi(n as i32)
        - k.powi(n as i32 + 1))
        / (nf * (1.0 - k).powi(3))
}

/// Coefficient-domination partial sum `(1/n) sum_{m=1}^{n-1} k^m (n-m)^2`,
/// which equals B(n,k) exactly.
pub fn b_big_sum(n: usize, k: f64) -> f64 {
    (1..n).map(|m| k.powi(m as i32) * ((n - m) * (n - m)) as f64).sum::<f64>() / n as f64
}

/// Coefficient-domination partial sum `(1/n) sum_{m=1}^{n-1} k^m (n-m)`,
/// which equals b(n,k) exactly.
pub fn b_small_sum(n: usize, k: f64) -> f64 {
    (1..n).map(|m| k.powi(m as i32) * (n - m) as f64).sum::<f64>() / n as f64
}

/// a(n,k): sharp bound on |a_n| over the convex class.
pub fn a_small(n: usize, k: f64) -> f64 {
    if k > SUM_FORM_CROSSOVER {
        1.0 + b_small_sum(n, k)
    } else {
        let nf = n as f64;
        (nf - k * (nf + 1.0) + k.powi(n as i32 + 1)) / (nf * (1.0 - k) * (1.0 - k))
    }
}

/// b(n,k): sharp bound on |b_n| over the convex class.
pub fn b_small(n: usize, k: f64) -> f64 {
    if k > SUM_FORM_CROSSOVER {
        b_small_sum(n, k)
    } else {
        let nf = n as f64;
        k * (nf - 1.0 - nf * k + k.powi(n as i32)) / (nf * (1.0 - k) * (1.0 - k))
    }
}

/// `k0 = 2k/(1+k^2)`: the dilatation bound after stripping `b_1`.
pub fn k0_of_k(k: f64) -> f64 {
    2.0 * k / (1.0 + k * k)
}

/// Inverse conversion `k = (1 - sqrt(1-k0^2))/k0`, continued by 0 at `k0 = 0`.
pub fn k_of_k0(k0: f64) -> f64 {
    if k0 == 0.0 {
        return 0.0;
    }
    // algebraically equal to (1 - sqrt(1-k0^2))/k0 but stable near 0
    k0 / (1.0 + (1.0 - k0 * k0).sqrt())
}

/// C_n(k) = a(n,k0) + k b(n,k0): analytic bound for the convex class
/// without the `b_1 = 0` normalization.
pub fn c_n(n: usize, k: f64) -> f64 {
    let k0 = k0_of_k(k);
    a_small(n, k0) + k_of_k0(k0) * b_small(n, k0)
}

/// D_n(k) = b(n,k0) + k a(n,k0).
pub fn d_n(n: usize, k: f64) -> f64 {
    let k0 = k0_of_k(k);
    b_small(n, k0) + k_of_k0(k0) * a_small(n, k0)
}

/// E_n(k) = A(n,k0) + k B(n,k0): analytic bound for the unnormalized
/// starlike / close-to-convex / typically real classes.
pub fn e_n(n: usize, k: f64) -> f64 {
    let k0 = k0_of_k(k);
    a_big(n, k0) + k_of_k0(k0) * b_big(n, k0)
}

/// F_n(k) = B(n,k0) + k A(n,k0).
pub fn f_n(n: usize, k: f64) -> f64 {
    let k0 = k0_of_k(k);
    b_big(n, k0) + k_of_k0(k0) * a_big(n, k0)
}

/// The `k -> 1^-` limit values of the bound families at index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitValues {
    /// lim A(n,k) = (n+1)(2n+1)/6
    pub a_big: f64,
    /// lim B(n,k) = (n-1)(2n-1)/6
    pub b_big: f64,
    /// lim a(n,k) = (n+1)/2
    pub a_small: f64,
    /// lim b(n,k) = (n-1)/2
    pub b_small: f64,
    /// lim C_n(k) = lim D_n(k) = n
    pub convex: f64,
    /// lim E_n(k) = lim F_n(k) = (2n^2+1)/3
    pub full: f64,
}

pub fn limit_values(n: usize) -> LimitValues {
    let nf = n as f64;
    LimitValues {
        a_big: (nf + 1.0) * (2.0 * nf + 1.0) / 6.0,
        b_big: (nf - 1.0) * (2.0 * nf - 1.0) / 6.0,
        a_small: (nf + 1.0) / 2.0,
        b_small: (nf - 1.0) / 2.0,
        convex: nf,
        full: (2.0 * nf * nf + 1.0) / 3.0,
    }
}

/// Auxiliary functions from the two monotonicity lemmas, evaluable on [0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaPoly {
    /// `M_n(x) = n^2 + (-2n^2-2n+1)x + (n+1)^2 x^2 - x^{n+1} - x^{n+2}`
    M(usize),
    /// `D_n(x) = (1-x) M_n'(x) + 3 M_n(x)`; `D_n(0) = (n-1)^2`, `D_n(1) = 0`
    D(usize),
    /// `E_n(x) = x D_{n-1}(x) + (1-x) M_{n-1}(x)`; `E_2(x) = (1-x)^4`
    E(usize),
    /// `L_n(x) = n - (n+1)x + x^{n+1}`
    L(usize),
    /// `F_n(x) = (1-x) L_n'(x) + 2 L_n(x)`
    F(usize),
    /// `J_n(x) = (1-x)[x L_{n-1}'(x) + L_{n-1}(x)] + 2x L_{n-1}(x)`, n >= 3
    J(usize),
    /// `phi_n(x) = M_n(x)/(1-x)^3 = n A(n,x)`
    Phi(usize),
    /// `psi_n(x) = x M_{n-1}(x)/(1-x)^3 = n B(n,x)`
    Psi(usize),
    /// `G_n(x) = L_n(x)/(1-x)^2 = n a(n,x)`
    G(usize),
    /// `H_n(x) = x L_{n-1}(x)/(1-x)^2 = n b(n,x)`
    H(usize),
}

fn m_poly(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    nf * nf + (-2.0 * nf * nf - 2.0 * nf + 1.0) * x + (nf + 1.0) * (nf + 1.0) * x * x
        - x.powi(n as i32 + 1)
        - x.powi(n as i32 + 2)
}

fn m_poly_prime(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    (-2.0 * nf * nf - 2.0 * nf + 1.0) + 2.0 * (nf + 1.0) * (nf + 1.0) * x
        - (nf + 1.0) * x.powi(n as i32)
        - (nf + 2.0) * x.powi(n as i32 + 1)
}

fn d_poly(n: usize, x: f64) -> f64 {
    (1.0 - x) * m_poly_prime(n, x) + 3.0 * m_poly(n, x)
}

fn l_poly(n: usize, x: f64) -> f64 {
    n as f64 - (n as f64 + 1.0) * x + x.powi(n as i32 + 1)
}

fn l_poly_prime(n: usize, x: f64) -> f64 {
    -(n as f64 + 1.0) + (n as f64 + 1.0) * x.powi(n as i32)
}

impl LemmaPoly {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Self::M(n) => m_poly(n, x),
            Self::D(n) => d_poly(n, x),
            Self::E(n) => x * d_poly(n - 1, x) + (1.0 - x) * m_poly(n - 1, x),
            Self::L(n) => l_poly(n, x),
            Self::F(n) => (1.0 - x) * l_poly_prime(n, x) + 2.0 * l_poly(n, x),
            Self::J(n) => {
                (1.0 - x) * (x * l_poly_prime(n - 1, x) + l_poly(n - 1, x))
                    + 2.0 * x * l_poly(n - 1, x)
            }
            Self::Phi(n) => m_poly(n, x) / (1.0 - x).powi(3),
            Self::Psi(n) => x * m_poly(n - 1, x) / (1.0 - x).powi(3),
            Self::G(n) => l_poly(n, x) / (1.0 - x).powi(2),
            Self::H(n) => x * l_poly(n - 1, x) / (1.0 - x).powi(2),
        }
    }
}

/// Outcome of a strict-increase grid scan on `[0, 1-1e-6]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanReport {
    pub grid: usize,
    pub min_forward_diff: f64,
    pub violations: usize,
    /// Location of the first non-increasing step, if any.
    pub first_violation_at: Option<f64>,
}

impl ScanReport {
    pub fn strictly_increasing(&self) -> bool {
        self.violations == 0
    }
}

/// Checks strict increase of `f` across consecutive points of a uniform
/// grid on `[0, 1-1e-6]`.
pub fn monotonicity_scan(f: impl Fn(f64) -> f64, grid: usize) -> ScanReport {
    monotonicity_scan_to(f, grid, 1.0 - 1e-6)
}

/// [`monotonicity_scan`] with an explicit right endpoint `hi < 1`, for
/// rational forms whose `(1-x)` denominators turn to roundoff noise
/// before the default endpoint.
pub fn monotonicity_scan_to(f: impl Fn(f64) -> f64, grid: usize, hi: f64) -> ScanReport {
    assert!(grid >= 2);
    assert!(hi > 0.0 && hi < 1.0);
    let xs: Vec<f64> = (0..grid).map(|i| hi * i as f64 / (grid - 1) as f64).collect();
    let mut min_diff = f64::INFINITY;
    let mut violations = 0;
    let mut first = None;
    let mut prev = f(xs[0]);
    for &x in &xs[1..] {
        let v = f(x);
        let d = v - prev;
        if d <= 0.0 {
            violations += 1;
            first.get_or_insert(x);
        }
        min_diff = min_diff.min(d);
        prev = v;
    }
    ScanReport { grid, min_forward_diff: min_diff, violations, first_violation_at: first }
}

/// The three geometric sums used in the coefficient-domination arguments,
/// each with its closed form and the direct summation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometricSums {
    /// `sum_{m=1}^{n-1} k^m`
    pub linear: f64,
    /// `sum_{m=1}^{n-1} m k^m`
    pub weighted: f64,
    /// `sum_{m=1}^{n-1} m^2 k^m`
    pub squared: f64,
    pub linear_direct: f64,
    pub weighted_direct: f64,
    pub squared_direct: f64,
}

pub fn geometric_sums(n: usize, k: f64) -> GeometricSums {
    let nf = n as f64;
    let (linear, weighted, squared) = if k == 0.0 {
        (0.0, 0.0, 0.0)
    } else {
        let kn1 = k.powi(n as i32 - 1);
        (
            k * (1.0 - kn1) / (1.0 - k),
            k / (1.0 - k).powi(2) * (1.0 - nf * kn1 + (nf - 1.0) * kn1 * k),
            k / (1.0 - k).powi(3)
                * (1.0 + k - nf * nf * kn1 + (2.0 * nf * nf - 2.0 * nf - 1.0) * kn1 * k
                    - (nf - 1.0) * (nf - 1.0) * kn1 * k * k),
        )
    };
    GeometricSums {
        linear,
        weighted,
        squared,
        linear_direct: (1..n).map(|m| k.powi(m as i32)).sum(),
        weighted_direct: (1..n).map(|m| m as f64 * k.powi(m as i32)).sum(),
        squared_direct: (1..n).map(|m| (m * m) as f64 * k.powi(m as i32)).sum(),
    }
}

/// The four bound families of the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundFamily {
    /// A(n,k), B(n,k) — full class, `b_1 = 0`
    ConjB,
    /// a(n,k), b(n,k) — convex, `b_1 = 0`
    Convex0,
    /// C_n(k), D_n(k) — convex, unnormalized
    Convex,
    /// E_n(k), F_n(k) — full families, unnormalized
    Full,
}

impl BoundFamily {
    /// (analytic bound, co-analytic bound) at index n and parameter k.
    pub fn bound_pair(&self, n: usize, k: f64) -> (f64, f64) {
        match self {
            Self::ConjB => (a_big(n, k), b_big(n, k)),
            Self::Convex0 => (a_small(n, k), b_small(n, k)),
            Self::Convex => (c_n(n, k), d_n(n, k)),
            Self::Full => (e_n(n, k), f_n(n, k)),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "conjB" | "conjb" => Some(Self::ConjB),
            "convex0" => Some(Self::Convex0),
            "convex" => Some(Self::Convex),
            "full" => Some(Self::Full),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::ConjB => "conjB",
            Self::Convex0 => "convex0",
            Self::Convex => "convex",
            Self::Full => "full",
        }
    }
}

/// One comparison row: a bound against an attained coefficient modulus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    pub bound: f64,
    pub attained: f64,
    pub margin: f64,
    pub family: String,
    pub k: f64,
}

/// Rows of (n, bound, attained, margin) comparisons for a family/map pair.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    pub fn push(&mut self, n: usize, bound: f64, attained: f64, family: &str, k: f64) {
        self.rows.push(BoundRow {
            n,
            bound,
            attained,
            margin: bound - attained,
            family: family.to_string(),
            k,
        });
    }

    pub fn worst_margin(&self, family_prefix: &str) -> f64 {
        self.rows
            .iter()
            .filter(|r| r.family.starts_with(family_prefix))
            .map(|r| r.margin)
            .fold(f64::INFINITY, f64::min)
    }

    /// CSV with the stable header `n,bound,attained,margin,family,k`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "bound", "attained", "margin", "family", "k"]).unwrap();
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                format!("{:.12e}", r.bound),
                format!("{:.12e}", r.attained),
                format!("{:.12e}", r.margin),
                r.family.clone(),
                format!("{}", r.k),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}
