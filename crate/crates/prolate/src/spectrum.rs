//! Eigenvalues of the truncated Fourier operator.
//!
//! The operator acts on L^2([-a, a]) with kernel e^{i t xi}/sqrt(2 pi); its
//! eigenfunctions are the prolate functions e_k(t, a) = g_k(t/a, a) and the
//! eigenvalues satisfy lambda_k = i^k |lambda_k|. The squared magnitudes
//! sigma_k = |lambda_k|^2 are the eigenvalues of the sinc-kernel operator
//!
//!   (K x)(t) = (1/pi) int_{-a}^{a} sin(a(t - tau))/(t - tau) x(tau) dtau,
//!
//! for which an independent Nystrom discretization doubles as an oracle.

use crate::error::{Error, Result};
use crate::legendre::gauss_legendre;
use crate::prolate::{compute_prolate, ProlateFunction};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

const SQRT_TWO_PI: f64 = 2.5066282746310002;

/// i^k on the unit circle, exact.
pub fn i_pow(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Diagnostics attached to each spectrum row.
#[derive(Debug, Clone, Copy)]
pub struct MethodFlags {
    /// The underlying eigenfunction used the unit-norm fallback.
    pub normalization_fallback: bool,
    /// lambda came from direct quadrature instead of the moment formula.
    pub lambda_by_quadrature: bool,
    /// |arg(lambda_raw) - arg(i^k)| before phase snapping.
    pub presnap_phase_error: f64,
}

#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub k: usize,
    pub gamma: f64,
    /// sigma_k = |lambda_k|^2, in (0, 1).
    pub sigma: f64,
    /// Phase-snapped eigenvalue i^k sqrt(sigma_k).
    pub lambda: Complex64,
    pub method_flags: MethodFlags,
}

#[derive(Debug, Clone)]
pub struct SpectrumTable {
    pub a: f64,
    pub entries: Vec<SpectrumEntry>,
    pub k_max: usize,
    /// max_k |sigma_k - sigma_k(Nystrom)| when the oracle was run.
    pub oracle_agreement: Option<f64>,
}

impl SpectrumTable {
    pub fn sigmas(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.sigma).collect()
    }
}

fn check_bandwidth(a: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("bandwidth a = {a} must be positive")));
    }
    Ok(())
}

/// Un-snapped eigenvalue from the moment formulas
///   even k: lambda = 2 a c_0 / (sqrt(2 pi) g_k(0)),
///   odd  k: lambda = i 2 a^3 c_1 / (3 sqrt(2 pi) g_k'(0)),
/// falling back to quadrature at the eigenfunction's peak when the value at
/// the origin is degenerate.
fn lambda_raw(pf: &ProlateFunction) -> Result<(Complex64, bool)> {
    let a = pf.a;
    check_bandwidth(a)?;
    let max_coeff = pf
        .series
        .coeffs
        .iter()
        .map(|c| c.abs())
        .fold(0.0f64, f64::max);
    if pf.k % 2 == 0 {
        let g0 = pf.series.value_at_zero();
        if pf.normalization_fallback || g0.abs() < 1e-12 * max_coeff {
            return lambda_by_quadrature(pf).map(|l| (l, true));
        }
        let c0 = pf.series.coeffs[0];
        Ok((Complex64::new(2.0 * a * c0 / (SQRT_TWO_PI * g0), 0.0), false))
    } else {
        let gd0 = pf.series.deriv_at_zero();
        if pf.normalization_fallback || gd0.abs() < 1e-12 * max_coeff {
            return lambda_by_quadrature(pf).map(|l| (l, true));
        }
        let c1 = pf.series.coeffs[1];
        Ok((
            Complex64::new(0.0, 2.0 * a.powi(3) * c1 / (3.0 * SQRT_TWO_PI * gd0)),
            false,
        ))
    }
}

/// Direct evaluation of the eigen-relation at the peak of |e_k|:
/// lambda = (a / sqrt(2 pi)) int e^{i a^2 u* u} g(u) du / g(u*).
fn lambda_by_quadrature(pf: &ProlateFunction) -> Result<Complex64> {
    let a = pf.a;
    // locate the peak on a fine grid
    let mut u_star = 0.0;
    let mut best = 0.0;
    for i in 0..=400 {
        let u = -1.0 + i as f64 / 200.0;
        let v = crate::legendre::series_eval_raw(&pf.series, u).abs();
        if v > best {
            best = v;
            u_star = u;
        }
    }
    let max_coeff = pf
        .series
        .coeffs
        .iter()
        .map(|c| c.abs())
        .fold(0.0f64, f64::max);
    if best < 1e-12 * max_coeff {
        return Err(Error::Numerical(format!(
            "eigenfunction k = {} degenerate at every sample point",
            pf.k
        )));
    }
    let m = (3.0 * a * a).ceil() as usize + pf.series.coeffs.len() + 32;
    let rule = gauss_legendre(m)?;
    let mut integral = Complex64::new(0.0, 0.0);
    for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
        let g = crate::legendre::series_eval_raw(&pf.series, u);
        integral += Complex64::from_polar(1.0, a * a * u_star * u) * (w * g);
    }
    let denom = crate::legendre::series_eval_raw(&pf.series, u_star);
    Ok(integral * a / (SQRT_TWO_PI * denom))
}

/// Phase-snapped eigenvalue lambda_k = i^k |lambda_k|.
///
/// Errors if the computed pre-snap phase strays from i^k by 1e-8 or more;
/// the phase is exact by theory, so that indicates numerical breakdown.
pub fn lambda_k(pf: &ProlateFunction, a: f64) -> Result<Complex64> {
    check_consistent(pf, a)?;
    let (raw, _) = lambda_raw(pf)?;
    let err = presnap_phase_error(raw, pf.k);
    if err >= 1e-8 {
        return Err(Error::Numerical(format!(
            "pre-snap phase of lambda_{} off i^k by {err:.3e}",
            pf.k
        )));
    }
    Ok(i_pow(pf.k) * raw.norm())
}

fn presnap_phase_error(raw: Complex64, k: usize) -> f64 {
    if raw.norm() == 0.0 {
        return 0.0;
    }
    (raw / i_pow(k)).arg().abs()
}

fn check_consistent(pf: &ProlateFunction, a: f64) -> Result<()> {
    if pf.a != a {
        return Err(Error::Precondition(format!(
            "eigenfunction was computed at a = {}, not a = {a}",
            pf.a
        )));
    }
    check_bandwidth(a)
}

/// sigma_k = |lambda_k|^2, clamped into (0, 1] only within 1e-12.
pub fn sigma_k(pf: &ProlateFunction, a: f64) -> Result<f64> {
    check_consistent(pf, a)?;
    let (raw, _) = lambda_raw(pf)?;
    clamp_sigma(raw.norm_sqr(), pf.k)
}

fn clamp_sigma(sigma: f64, k: usize) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&sigma) {
        return Err(Error::Numerical(format!(
            "sigma_{k} = {sigma} outside (0, 1) beyond tolerance"
        )));
    }
    Ok(sigma.min(1.0))
}

/// Build the spectrum for k = 0..k_max; optionally cross-check sigma against
/// the Nystrom discretization and record the worst disagreement.
pub fn spectrum_table(a: f64, k_max: usize, with_oracle: bool) -> Result<SpectrumTable> {
    check_bandwidth(a)?;
    let pfs = compute_prolate(a, k_max)?;
    let mut entries = Vec::with_capacity(pfs.len());
    for pf in &pfs {
        let (raw, by_quadrature) = lambda_raw(pf)?;
        let err = presnap_phase_error(raw, pf.k);
        if err >= 1e-8 {
            return Err(Error::Numerical(format!(
                "pre-snap phase of lambda_{} off i^k by {err:.3e} at a = {a}",
                pf.k
            )));
        }
        let sigma = clamp_sigma(raw.norm_sqr(), pf.k)?;
        entries.push(SpectrumEntry {
            k: pf.k,
            gamma: pf.gamma,
            sigma,
            lambda: i_pow(pf.k) * sigma.sqrt(),
            method_flags: MethodFlags {
                normalization_fallback: pf.normalization_fallback,
                lambda_by_quadrature: by_quadrature,
                presnap_phase_error: err,
            },
        });
    }
    for w in entries.windows(2) {
        if w[1].sigma >= w[0].sigma + 1e-12 {
            return Err(Error::Inconsistent(format!(
                "sigma ordering violated at a = {a}: sigma_{} = {} >= sigma_{} = {}",
                w[1].k, w[1].sigma, w[0].k, w[0].sigma
            )));
        }
    }
    let oracle_agreement = if with_oracle {
        let m = default_oracle_size(a, k_max);
        let oracle = nystrom_sigma(a, k_max, m)?;
        Some(
            entries
                .iter()
                .zip(&oracle)
                .map(|(e, o)| (e.sigma - o).abs())
                .fold(0.0f64, f64::max),
        )
    } else {
        None
    };
    Ok(SpectrumTable {
        a,
        entries,
        k_max,
        oracle_agreement,
    })
}

/// Default quadrature size for the Nystrom oracle.
pub fn default_oracle_size(a: f64, k_max: usize) -> usize {
    (64usize)
        .max((3.0 * a * a).ceil() as usize + 4 * k_max)
        .max(4 * (k_max + 1))
}

/// sin(c d)/(pi d) with the removable singularity at d = 0.
fn sinc_kernel(c: f64, d: f64) -> f64 {
    let x = c * d;
    if x.abs() < 1e-4 {
        c / PI * (1.0 - x * x / 6.0 * (1.0 - x * x / 20.0))
    } else {
        x.sin() / (PI * d)
    }
}

fn nystrom_eigenvalues(
    nodes: &[f64],
    weights: &[f64],
    kernel: impl Fn(f64, f64) -> f64,
    k_max: usize,
) -> Vec<f64> {
    let m = nodes.len();
    let sqrt_w: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
    let b = DMatrix::from_fn(m, m, |i, j| {
        sqrt_w[i] * kernel(nodes[i], nodes[j]) * sqrt_w[j]
    });
    let mut ev: Vec<f64> = b.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev.truncate(k_max + 1);
    ev
}

/// Nystrom discretization of the sinc kernel (1/pi) sin(a^2(t - tau))/(t - tau)
/// on [-1, 1]: top k_max + 1 eigenvalues in decreasing order.
pub fn nystrom_sigma(a: f64, k_max: usize, m: usize) -> Result<Vec<f64>> {
    check_bandwidth(a)?;
    if m < 4 * (k_max + 1) || m < (3.0 * a * a).ceil() as usize {
        return Err(Error::Precondition(format!(
            "quadrature size m = {m} too small: need m >= {} and m >= {}",
            4 * (k_max + 1),
            (3.0 * a * a).ceil() as usize
        )));
    }
    let rule = gauss_legendre(m)?;
    let c = a * a;
    Ok(nystrom_eigenvalues(
        &rule.nodes,
        &rule.weights,
        |t, tau| sinc_kernel(c, t - tau),
        k_max,
    ))
}

/// Same spectrum computed on the big interval [-a, a] with kernel
/// (1/pi) sin(a(t - tau))/(t - tau); the two discretizations must agree.
pub fn nystrom_sigma_big_interval(a: f64, k_max: usize, m: usize) -> Result<Vec<f64>> {
    check_bandwidth(a)?;
    if m < 4 * (k_max + 1) || m < (3.0 * a * a).ceil() as usize {
        return Err(Error::Precondition(format!(
            "quadrature size m = {m} too small: need m >= {} and m >= {}",
            4 * (k_max + 1),
            (3.0 * a * a).ceil() as usize
        )));
    }
    let rule = gauss_legendre(m)?;
    let nodes: Vec<f64> = rule.nodes.iter().map(|x| a * x).collect();
    let weights: Vec<f64> = rule.weights.iter().map(|w| a * w).collect();
    Ok(nystrom_eigenvalues(
        &nodes,
        &weights,
        |t, tau| sinc_kernel(a, t - tau),
        k_max,
    ))
}
