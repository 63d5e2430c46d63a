//! Legendre polynomial primitives: point evaluation, special values at the
//! origin, series evaluation and Gauss-Legendre quadrature.
//!
//! The convention throughout is the unnormalized P_n with P_n(1) = 1.
//! Orthonormal scaling sqrt(n + 1/2) is applied only inside the Galerkin
//! assembly, never in stored series.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parity of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// A finite Legendre expansion sum c_n P_n(t).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LegendreSeries {
    /// Coefficient of P_n at index n.
    pub coeffs: Vec<f64>,
    pub parity: Parity,
}

impl LegendreSeries {
    pub fn new(coeffs: Vec<f64>, parity: Parity) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("series coefficients must be finite".into()));
        }
        match parity {
            Parity::Even => {
                if coeffs.iter().skip(1).step_by(2).any(|&c| c != 0.0) {
                    return Err(Error::Parity(
                        "even series has a nonzero odd-index coefficient".into(),
                    ));
                }
            }
            Parity::Odd => {
                if coeffs.iter().step_by(2).any(|&c| c != 0.0) {
                    return Err(Error::Parity(
                        "odd series has a nonzero even-index coefficient".into(),
                    ));
                }
            }
            Parity::None => {}
        }
        Ok(Self { coeffs, parity })
    }

    /// Degree of the highest retained term.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Series value at t = 0, summed from the exact P_n(0) values.
    pub fn value_at_zero(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .step_by(2)
            .map(|(n, &c)| c * p_at_zero(n))
            .sum()
    }

    /// Series derivative at t = 0, summed from the exact P_n'(0) values.
    pub fn deriv_at_zero(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .step_by(2)
            .map(|(n, &c)| c * dp_at_zero(n))
            .sum()
    }
}

/// A Gauss-Legendre quadrature rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    /// Nodes, strictly increasing and symmetric about 0.
    pub nodes: Vec<f64>,
    /// Positive weights summing to 2.
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Integrate f over [-1, 1].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Integrate f over [lo, hi] by affine change of variable.
    pub fn integrate_over<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        half * self.integrate(|x| f(mid + half * x))
    }
}

fn check_interval(t: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("t = {t} outside [-1, 1]")));
    }
    Ok(())
}

/// P_n(t) by the three-term recurrence; P_n(1) = 1.
pub fn legendre_eval(n: usize, t: f64) -> Result<f64> {
    check_interval(t)?;
    Ok(eval_raw(n, t))
}

fn eval_raw(n: usize, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = t;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * t * cur - jf * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n(t) and P_n'(t) from one pass of the recurrence.
pub(crate) fn eval_with_deriv(n: usize, t: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut cur = t;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * t * cur - jf * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    let dp = if (t * t - 1.0).abs() < f64::EPSILON {
        let sign = if t > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 };
        sign * (n * (n + 1)) as f64 / 2.0
    } else {
        n as f64 * (t * cur - prev) / (t * t - 1.0)
    };
    (cur, dp)
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// P_k(0) for even k: (-1)^(k/2) k! / (2^k ((k/2)!)^2).
pub fn legendre_at_zero(k: usize) -> Result<f64> {
    if k % 2 != 0 {
        return Err(Error::Parity(format!(
            "P_{k}(0) = 0 for odd k; use the derivative branch"
        )));
    }
    Ok(p_at_zero(k))
}

/// P_k'(0) for odd k: (-1)^((k-1)/2) (k+1)! / (2^k ((k-1)/2)! ((k+1)/2)!).
pub fn legendre_deriv_at_zero(k: usize) -> Result<f64> {
    if k % 2 == 0 {
        return Err(Error::Parity(format!(
            "P_{k}'(0) = 0 for even k; use the value branch"
        )));
    }
    Ok(dp_at_zero(k))
}

// Log-gamma with sign tracking past k = 20 to avoid factorial overflow.
fn p_at_zero(k: usize) -> f64 {
    debug_assert!(k % 2 == 0);
    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    if k <= 20 {
        let mut v = 1.0;
        // k! / ((k/2)!)^2 = binomial(k, k/2) built up incrementally
        for j in 1..=k / 2 {
            v *= (k / 2 + j) as f64 / j as f64;
        }
        sign * v / 2f64.powi(k as i32)
    } else {
        let ln = ln_factorial(k) - (k as f64) * 2f64.ln() - 2.0 * ln_factorial(k / 2);
        sign * ln.exp()
    }
}

fn dp_at_zero(k: usize) -> f64 {
    debug_assert!(k % 2 == 1);
    // P_k'(0) = k P_{k-1}(0)
    k as f64 * p_at_zero(k - 1)
}

/// Gauss-Legendre rule with m nodes: exact for polynomials of degree 2m - 1.
///
/// Nodes are found by Newton iteration from Chebyshev initial guesses and
/// converge to machine precision for m up to 10^4.
pub fn gauss_legendre(m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::Domain("quadrature size must be positive".into()));
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Solve only the positive half; mirror the rest.
    for i in 0..m.div_ceil(2) {
        // i-th root counted from the largest; Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = eval_with_deriv(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 {
                let (p2, d2) = eval_with_deriv(m, x);
                x -= p2 / d2;
                dp = d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[m - 1 - i] = x;
        weights[m - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Evaluate a Legendre series by the backward (Clenshaw) recurrence.
pub fn series_eval(s: &LegendreSeries, t: f64) -> Result<f64> {
    check_interval(t)?;
    Ok(series_eval_raw(s, t))
}

pub(crate) fn series_eval_raw(s: &LegendreSeries, t: f64) -> f64 {
    let c = &s.coeffs;
    if c.is_empty() {
        return 0.0;
    }
    let mut y1 = 0.0;
    let mut y2 = 0.0;
    for n in (0..c.len()).rev() {
        let nf = n as f64;
        let alpha = (2.0 * nf + 1.0) / (nf + 1.0) * t;
        let beta = -(nf + 1.0) / (nf + 2.0);
        let y = c[n] + alpha * y1 + beta * y2;
        y2 = y1;
        y1 = y;
    }
    y1
}
