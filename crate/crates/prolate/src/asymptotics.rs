//! Closed-form asymptotic laws for the truncated Fourier spectrum: the
//! small-bandwidth decay of sigma_k and lambda_k, the large-bandwidth
//! deficits 1 - sigma_k and 1 - |lambda_k|, and the plunge transition law
//! with its implicit arg-Gamma equation.
//!
//! These evaluators return leading terms only; comparisons against computed
//! spectra are ratio tests with regime-appropriate tolerances.

use crate::error::{Error, Result};
use crate::spectrum::SpectrumTable;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

fn check_positive_bandwidth(a: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("bandwidth a = {a} must be positive")));
    }
    Ok(())
}

/// |lambda_k(a)| leading term for a -> 0: sqrt(2 pi) (a/2)^(2k+1) / k!.
fn lambda_small_a_magnitude(k: usize, a: f64) -> f64 {
    (0.5 * (2.0 * PI).ln() + (2 * k + 1) as f64 * (a / 2.0).ln() - ln_factorial(k)).exp()
}

/// Leading term of sigma_k(a) as a -> 0: 2 pi (a^2/4)^(2k+1) (k!)^(-2).
pub fn sigma_small_a(k: usize, a: f64) -> Result<f64> {
    check_positive_bandwidth(a)?;
    let m = lambda_small_a_magnitude(k, a);
    Ok(m * m)
}

/// Leading term of lambda_k(a) as a -> 0: i^k sqrt(2 pi) (a/2)^(2k+1) / k!.
pub fn lambda_small_a(k: usize, a: f64) -> Result<Complex64> {
    check_positive_bandwidth(a)?;
    Ok(crate::spectrum::i_pow(k) * lambda_small_a_magnitude(k, a))
}

/// Leading term of 1 - |lambda_k(a)| as a -> infinity:
/// 2 sqrt(pi) 8^k (k!)^(-1) a^(2k+1) e^(-2a^2).
pub fn lambda_deficit_large_a(k: usize, a: f64) -> Result<f64> {
    check_positive_bandwidth(a)?;
    Ok((2f64.ln() + 0.5 * PI.ln() + k as f64 * 8f64.ln() - ln_factorial(k)
        + (2 * k + 1) as f64 * a.ln()
        - 2.0 * a * a)
        .exp())
}

/// Leading term of 1 - sigma_k(a) as a -> infinity; exactly twice the
/// lambda deficit since 1 - sigma = (1 - |lambda|)(1 + |lambda|) -> 2(1 - |lambda|).
pub fn sigma_deficit_large_a(k: usize, a: f64) -> Result<f64> {
    Ok(2.0 * lambda_deficit_large_a(k, a)?)
}

/// Transition index k(a, b) = floor((2/pi)(a^2 + b ln(2a))).
pub fn transition_index(a: f64, b: f64) -> Result<usize> {
    if !(a > 0.5) {
        return Err(Error::Domain(format!("transition index needs a > 1/2, got {a}")));
    }
    let arg = a * a + b * (2.0 * a).ln();
    if arg < 0.0 {
        return Err(Error::Domain(format!(
            "a^2 + b ln(2a) = {arg} is negative; no transition index"
        )));
    }
    Ok(((2.0 / PI) * arg).floor() as usize)
}

/// Limiting eigenvalue at the transition: (1 + e^(pi b))^(-1).
pub fn transition_sigma(b: f64) -> f64 {
    1.0 / (1.0 + (PI * b).exp())
}

/// Principal-branch log Gamma on the right half plane, by the Lanczos
/// approximation (g = 7, 9 terms); relative accuracy ~1e-13.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) {
        return Err(Error::Domain(format!(
            "log_gamma_complex needs Re z > 0, got {z}"
        )));
    }
    // canonical g = 7 coefficient set, preserved verbatim
    #[allow(clippy::excessive_precision)]
    const COEFFS: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    let zm1 = z - 1.0;
    let mut s = Complex64::new(COEFFS[0], 0.0);
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        s += c / (zm1 + i as f64);
    }
    let t = zm1 + 7.5;
    Ok((zm1 + 0.5) * t.ln() - t + 0.5 * (2.0 * PI).ln() + s.ln())
}

/// arg Gamma(1/2 + i delta/2), extended to delta < 0 by oddness
/// (Gamma(conj z) = conj Gamma(z)), with arg Gamma(1/2) = 0.
pub fn arg_gamma_half(delta: f64) -> f64 {
    if delta == 0.0 {
        return 0.0;
    }
    let im = log_gamma_complex(Complex64::new(0.5, delta.abs() / 2.0))
        .expect("Re z = 1/2 > 0")
        .im;
    if delta < 0.0 {
        -im
    } else {
        im
    }
}

/// Residual of the implicit transition equation
/// (2/pi) a^2 + (2/pi) ln(2a) - arg Gamma(1/2 + i delta/2) - (k - 1/2).
pub fn slepian_residual(a: f64, k: usize, delta: f64) -> f64 {
    (2.0 / PI) * a * a + (2.0 / PI) * (2.0 * a).ln() - arg_gamma_half(delta)
        - (k as f64 - 0.5)
}

/// Root of smallest absolute value of the implicit transition equation,
/// located by a bracket scan over delta in [-50, 50] and bisection.
pub fn slepian_delta(a: f64, k: usize) -> Result<f64> {
    if !(a > 0.5) {
        return Err(Error::Domain(format!("slepian_delta needs a > 1/2, got {a}")));
    }
    let f = |d: f64| slepian_residual(a, k, d);
    let mut roots = Vec::new();
    let step = 0.5;
    let mut d = -50.0;
    let mut fd = f(d);
    while d < 50.0 - 1e-9 {
        let d2 = d + step;
        let fd2 = f(d2);
        if fd == 0.0 {
            roots.push(d);
        } else if fd * fd2 < 0.0 {
            let (mut lo, mut hi) = (d, d2);
            let mut flo = fd;
            while hi - lo > 1e-10 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if flo * fm <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        d = d2;
        fd = fd2;
    }
    roots
        .into_iter()
        .min_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap())
        .ok_or_else(|| {
            Error::Numerical(format!(
                "no root of the transition equation in [-50, 50] for a = {a}, k = {k}: \
                 residual(-50) = {:.6e}, residual(50) = {:.6e}",
                f(-50.0),
                f(50.0)
            ))
        })
}

/// One point on the transition curve: the index k(a, b), the limiting
/// eigenvalue, and the implicit-equation root when it exists.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TransitionPoint {
    pub a: f64,
    pub b: f64,
    pub k: usize,
    /// (1 + e^(pi b))^(-1)
    pub sigma_limit: f64,
    /// Root of the implicit arg-Gamma equation, if one exists in the bracket.
    pub delta: Option<f64>,
}

pub fn transition_point(a: f64, b: f64) -> Result<TransitionPoint> {
    let k = transition_index(a, b)?;
    Ok(TransitionPoint {
        a,
        b,
        k,
        sigma_limit: transition_sigma(b),
        delta: slepian_delta(a, k).ok(),
    })
}

/// Which asymptotic law a report compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SmallASigma,
    SmallALambda,
    LargeADeficit,
    Transition,
}

/// Side-by-side computed vs. formula values for one asymptotic regime.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AsymptoticRow {
    /// k for the fixed-index regimes, b for the transition regime.
    pub index: f64,
    pub a: f64,
    pub computed: f64,
    pub formula: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub regime: Regime,
    pub rows: Vec<AsymptoticRow>,
}

impl AsymptoticReport {
    fn push_row(rows: &mut Vec<AsymptoticRow>, index: f64, a: f64, computed: f64, formula: f64) -> Result<()> {
        let ratio = computed / formula;
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(Error::Numerical(format!(
                "degenerate comparison at index {index}: computed {computed}, formula {formula}"
            )));
        }
        rows.push(AsymptoticRow {
            index,
            a,
            computed,
            formula,
            ratio,
        });
        Ok(())
    }

    pub fn small_a_sigma(table: &SpectrumTable) -> Result<Self> {
        let mut rows = Vec::new();
        for e in &table.entries {
            Self::push_row(&mut rows, e.k as f64, table.a, e.sigma, sigma_small_a(e.k, table.a)?)?;
        }
        Ok(Self {
            regime: Regime::SmallASigma,
            rows,
        })
    }

    pub fn small_a_lambda(table: &SpectrumTable) -> Result<Self> {
        let mut rows = Vec::new();
        for e in &table.entries {
            Self::push_row(
                &mut rows,
                e.k as f64,
                table.a,
                e.lambda.norm(),
                lambda_small_a(e.k, table.a)?.norm(),
            )?;
        }
        Ok(Self {
            regime: Regime::SmallALambda,
            rows,
        })
    }

    pub fn large_a_deficit(table: &SpectrumTable) -> Result<Self> {
        let mut rows = Vec::new();
        for e in &table.entries {
            Self::push_row(
                &mut rows,
                e.k as f64,
                table.a,
                1.0 - e.sigma,
                sigma_deficit_large_a(e.k, table.a)?,
            )?;
        }
        Ok(Self {
            regime: Regime::LargeADeficit,
            rows,
        })
    }

    pub fn transition(table: &SpectrumTable, bs: &[f64]) -> Result<Self> {
        let mut rows = Vec::new();
        for &b in bs {
            let k = transition_index(table.a, b)?;
            let entry = table.entries.iter().find(|e| e.k == k).ok_or_else(|| {
                Error::Precondition(format!(
                    "transition index k({}, {b}) = {k} exceeds table k_max = {}",
                    table.a, table.k_max
                ))
            })?;
            Self::push_row(&mut rows, b, table.a, entry.sigma, transition_sigma(b))?;
        }
        Ok(Self {
            regime: Regime::Transition,
            rows,
        })
    }
}
