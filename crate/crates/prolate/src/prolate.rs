//! Legendre-Galerkin solver for the prolate Sturm-Liouville problem
//!
//!   -((1 - t^2) g')' + c^2 t^2 g = gamma g   on (-1, 1),
//!
//! bounded at the endpoints. Rescaling the differential operator that
//! commutes with the Fourier operator truncated to [-a, a] onto the unit
//! interval produces this equation with c = a^2, so `compute_prolate(a, ..)`
//! assembles the matrix at parameter a^2; the resulting gamma equals a^2
//! times the eigenvalue of the big-interval operator.
//!
//! In the orthonormal Legendre basis restricted to one parity class the
//! operator is symmetric tridiagonal; eigenvalues come from Sturm bisection
//! and eigenvectors from a two-sided three-term recurrence matched near the
//! turning point, which keeps full relative accuracy in the exponentially
//! small leading coefficients that the Fourier eigenvalue formulas later
//! divide by.

use crate::error::{Error, Result};
use crate::legendre::{
    legendre_at_zero, legendre_deriv_at_zero, LegendreSeries, Parity,
};
use crate::tridiag::SymTridiag;
use serde::{Deserialize, Serialize};

/// Parity class of a Galerkin subproblem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityClass {
    Even,
    Odd,
}

impl ParityClass {
    fn degree_offset(self) -> usize {
        match self {
            ParityClass::Even => 0,
            ParityClass::Odd => 1,
        }
    }

    fn series_parity(self) -> Parity {
        match self {
            ParityClass::Even => Parity::Even,
            ParityClass::Odd => Parity::Odd,
        }
    }
}

/// The assembled operator restricted to one parity class, in the orthonormal
/// Legendre basis. Row j corresponds to true degree `offset + 2 j`.
#[derive(Debug, Clone)]
pub struct GalerkinMatrix {
    pub parity: ParityClass,
    pub diag: Vec<f64>,
    /// Coupling between basis indices j and j + 1 (degrees n and n + 2).
    pub offdiag: Vec<f64>,
    pub a: f64,
    pub n_basis: usize,
}

impl GalerkinMatrix {
    pub(crate) fn tridiag(&self) -> SymTridiag {
        SymTridiag {
            diag: self.diag.clone(),
            off: self.offdiag.clone(),
        }
    }
}

/// One computed eigenpair of the prolate problem.
#[derive(Debug, Clone)]
pub struct ProlateFunction {
    /// Global eigenindex (even/odd solves interleaved by increasing gamma).
    pub k: usize,
    /// Bandwidth parameter.
    pub a: f64,
    /// Eigenvalue gamma_k(a).
    pub gamma: f64,
    /// Legendre coefficients of g_k(., a), unnormalized P_n convention.
    pub series: LegendreSeries,
    pub parity: Parity,
    /// Basis size (per parity class) used for the solve.
    pub truncation: usize,
    /// max |A v - gamma v| / max |v| on the assembled matrix.
    pub residual: f64,
    /// True if the value-at-zero normalization was ill-conditioned and the
    /// function was normalized to unit L^2 norm instead.
    pub normalization_fallback: bool,
}

/// Hard cap on the per-class basis size; `PROLATE_MAX_N` overrides.
pub fn max_basis_cap() -> usize {
    std::env::var("PROLATE_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(16384)
}

/// Assemble the parity-restricted Galerkin matrix of
/// -(d/dt)((1-t^2) d/dt) + a^2 t^2.
///
/// Diagonal entry for degree n: n(n+1) + a^2 (2n^2+2n-1)/((2n-1)(2n+3));
/// coupling between degrees n and n+2: a^2 (n+1)(n+2)/((2n+3) sqrt((2n+1)(2n+5))).
/// At a = 0 the matrix is diagonal with entries n(n+1).
pub fn assemble(a: f64, parity: ParityClass, n_basis: usize) -> Result<GalerkinMatrix> {
    if !(a >= 0.0) {
        return Err(Error::Domain(format!("bandwidth a = {a} must be >= 0")));
    }
    if n_basis < 2 {
        return Err(Error::Precondition("basis size must be at least 2".into()));
    }
    let a2 = a * a;
    let off = parity.degree_offset();
    let mut diag = Vec::with_capacity(n_basis);
    let mut offdiag = Vec::with_capacity(n_basis - 1);
    for j in 0..n_basis {
        let n = (off + 2 * j) as f64;
        diag.push(n * (n + 1.0) + a2 * (2.0 * n * n + 2.0 * n - 1.0) / ((2.0 * n - 1.0) * (2.0 * n + 3.0)));
        if j + 1 < n_basis {
            offdiag.push(
                a2 * (n + 1.0) * (n + 2.0)
                    / ((2.0 * n + 3.0) * ((2.0 * n + 1.0) * (2.0 * n + 5.0)).sqrt()),
            );
        }
    }
    Ok(GalerkinMatrix {
        parity,
        diag,
        offdiag,
        a,
        n_basis,
    })
}

/// Eigenvector of the tridiagonal matrix at an accurately known eigenvalue,
/// by shooting: upward recurrence from the low end, downward from the high
/// end, matched where both branches are healthy. Scaled so max |v| = 1.
fn shoot_vector(t: &SymTridiag, gamma: f64) -> Vec<f64> {
    let n = t.order();
    if n == 1 {
        return vec![1.0];
    }
    const BIG: f64 = 1.3407807929942597e154; // 2^512
    const SHRINK: f64 = 7.458340731200207e-155; // 2^-512

    // turning point: last row whose diagonal sits below gamma
    let jt = t.diag.iter().rposition(|&d| d <= gamma).unwrap_or(0);
    let j_hi = (jt + 2).min(n - 1);
    let j_lo = jt.saturating_sub(2);

    let mut u = vec![0.0; j_hi + 1];
    u[0] = 1.0;
    if j_hi >= 1 {
        u[1] = (gamma - t.diag[0]) / t.off[0];
        for j in 1..j_hi {
            u[j + 1] = ((gamma - t.diag[j]) * u[j] - t.off[j - 1] * u[j - 1]) / t.off[j];
            if u[j + 1].abs() > BIG {
                for x in u[..=j + 1].iter_mut() {
                    *x *= SHRINK;
                }
            }
        }
    }

    let mut w = vec![0.0; n];
    w[n - 1] = 1.0;
    w[n - 2] = (gamma - t.diag[n - 1]) / t.off[n - 2];
    for j in (j_lo + 1..n - 1).rev() {
        w[j - 1] = ((gamma - t.diag[j]) * w[j] - t.off[j] * w[j + 1]) / t.off[j - 1];
        if w[j - 1].abs() > BIG {
            for x in w[j - 1..].iter_mut() {
                *x *= SHRINK;
            }
        }
    }

    // match where the product is largest; avoids nodes of either branch
    let mut m = jt.min(j_hi).max(j_lo);
    let mut best = -1.0;
    for cand in j_lo..=j_hi {
        let p = (u[cand] * w[cand]).abs();
        if p > best && u[cand] != 0.0 {
            best = p;
            m = cand;
        }
    }

    let scale = w[m] / u[m];
    let mut v = vec![0.0; n];
    for (j, slot) in v.iter_mut().enumerate() {
        *slot = if j < m { u[j] * scale } else { w[j] };
    }
    let peak = v.iter().map(|x| x.abs()).fold(0.0f64, f64::max);
    for x in v.iter_mut() {
        *x /= peak;
    }
    v
}

struct ClassEigenpair {
    gamma: f64,
    /// orthonormal-basis coefficients, max |v| = 1
    coeffs: Vec<f64>,
    residual: f64,
}

fn solve_class(
    a: f64,
    parity: ParityClass,
    count: usize,
    k_max: usize,
) -> Result<(Vec<ClassEigenpair>, usize)> {
    // Legendre coefficients of the eigenfunctions decay super-exponentially
    // past degree ~ c = a^2, so size the basis from the matrix parameter.
    let c = a * a;
    let cap = max_basis_cap();
    let mut n_basis = (2 * k_max + 30).max((1.5 * c).ceil() as usize + 30).min(cap);
    loop {
        let gm = assemble(c, parity, n_basis)?;
        let t = gm.tridiag();
        let mut pairs = Vec::with_capacity(count);
        if a == 0.0 {
            // Legendre limit: exactly diagonal
            for j in 0..count {
                let mut v = vec![0.0; n_basis];
                v[j] = 1.0;
                pairs.push(ClassEigenpair {
                    gamma: t.diag[j],
                    coeffs: v,
                    residual: 0.0,
                });
            }
        } else {
            for gamma0 in t.smallest_eigenvalues(count) {
                let v0 = shoot_vector(&t, gamma0);
                // one Rayleigh polish pass, then re-shoot at the refined value
                let gamma1 = t.rayleigh(&v0);
                let v = shoot_vector(&t, gamma1);
                let gamma = t.rayleigh(&v);
                let residual = t.residual(&v, gamma);
                pairs.push(ClassEigenpair {
                    gamma,
                    coeffs: v,
                    residual,
                });
            }
        }
        // decay is judged on the stored P_n-convention coefficients, whose
        // conversion factors sqrt(n + 1/2) grow with the degree
        let offset = parity.degree_offset();
        let convert = |j: usize, v: f64| v * ((2 * (offset + 2 * j) + 1) as f64 / 2.0).sqrt();
        let decayed = pairs.iter().all(|p| {
            let max = p
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, &v)| convert(j, v).abs())
                .fold(0.0f64, f64::max);
            convert(n_basis - 1, p.coeffs[n_basis - 1]).abs() < 1e-14 * max
        });
        if decayed {
            return Ok((pairs, n_basis));
        }
        if n_basis >= cap {
            let worst = pairs
                .iter()
                .map(|p| p.residual)
                .fold(0.0f64, f64::max);
            return Err(Error::Convergence(format!(
                "coefficient decay not reached at basis cap {cap} (a = {a}, \
                 worst residual {worst:.3e})"
            )));
        }
        n_basis = (n_basis * 2).min(cap);
    }
}

/// Compute the eigenpairs k = 0..k_max for bandwidth a, globally ordered by
/// increasing gamma. The Galerkin matrix is assembled at parameter a^2, the
/// coefficient under which g_k(t/a, a) diagonalizes the Fourier operator
/// truncated to [-a, a].
///
/// Even k are normalized by g_k(0) = P_k(0), odd k by g_k'(0) = P_k'(0); when
/// the value at 0 is too small for that to be well conditioned the function
/// falls back to unit L^2 norm and sets `normalization_fallback`.
pub fn compute_prolate(a: f64, k_max: usize) -> Result<Vec<ProlateFunction>> {
    if !(a >= 0.0) {
        return Err(Error::Domain(format!("bandwidth a = {a} must be >= 0")));
    }
    let n_even = k_max / 2 + 1;
    let n_odd = k_max.div_ceil(2);
    let (even, n_basis_even) = solve_class(a, ParityClass::Even, n_even, k_max)?;
    let (odd, n_basis_odd) = if n_odd > 0 {
        solve_class(a, ParityClass::Odd, n_odd, k_max)?
    } else {
        (Vec::new(), 0)
    };

    // merge by gamma; exact ties ordered even first
    let mut tagged: Vec<(ParityClass, usize, ClassEigenpair)> = Vec::new();
    for (i, p) in even.into_iter().enumerate() {
        tagged.push((ParityClass::Even, i, p));
    }
    for (i, p) in odd.into_iter().enumerate() {
        tagged.push((ParityClass::Odd, i, p));
    }
    tagged.sort_by(|x, y| {
        let (gx, gy) = (x.2.gamma, y.2.gamma);
        if (gx - gy).abs() <= 1e-12 * gx.abs().max(gy.abs()).max(1.0) && x.0 != y.0 {
            if (gx - gy).abs() > 0.0 {
                eprintln!(
                    "warning: near-degenerate gamma pair ({gx}, {gy}) at a = {a}; \
                     ordering even parity first"
                );
            }
            return match (x.0, y.0) {
                (ParityClass::Even, ParityClass::Odd) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
        }
        gx.partial_cmp(&gy).unwrap()
    });

    let mut out = Vec::with_capacity(k_max + 1);
    for (k, (class, _, pair)) in tagged.into_iter().take(k_max + 1).enumerate() {
        if class.degree_offset() != k % 2 {
            return Err(Error::Inconsistent(format!(
                "eigenvalue interleaving broke at k = {k} (a = {a}): \
                 parity class does not match k mod 2"
            )));
        }
        let n_basis = match class {
            ParityClass::Even => n_basis_even,
            ParityClass::Odd => n_basis_odd,
        };
        out.push(finish_eigenpair(a, k, class, pair, n_basis)?);
    }
    // strict ordering is a theorem; equal values were separated above
    for pair in out.windows(2) {
        if !(pair[1].gamma > pair[0].gamma) {
            return Err(Error::Inconsistent(format!(
                "gamma ordering violated between k = {} and k = {}",
                pair[0].k, pair[1].k
            )));
        }
    }
    Ok(out)
}

fn finish_eigenpair(
    a: f64,
    k: usize,
    class: ParityClass,
    pair: ClassEigenpair,
    n_basis: usize,
) -> Result<ProlateFunction> {
    let offset = class.degree_offset();
    let top_degree = offset + 2 * (n_basis - 1);
    let mut coeffs = vec![0.0; top_degree + 1];
    for (j, &v) in pair.coeffs.iter().enumerate() {
        let n = offset + 2 * j;
        coeffs[n] = v * ((2 * n + 1) as f64 / 2.0).sqrt();
    }
    let max_coeff = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);

    let series = LegendreSeries::new(coeffs, class.series_parity())?;
    let (raw, target) = match class {
        ParityClass::Even => (series.value_at_zero(), legendre_at_zero(k)?),
        ParityClass::Odd => (series.deriv_at_zero(), legendre_deriv_at_zero(k)?),
    };
    let fallback = raw.abs() < 1e-12 * max_coeff;
    let scale = if fallback {
        // unit L^2 norm; the orthonormal-basis coefficients give the norm
        // up to the sqrt(n + 1/2) factors already folded into `coeffs`
        let l2: f64 = pair.coeffs.iter().map(|v| v * v).sum::<f64>().sqrt();
        1.0 / l2
    } else {
        target / raw
    };
    let mut coeffs = series.coeffs;
    for c in coeffs.iter_mut() {
        *c *= scale;
    }
    let series = LegendreSeries::new(coeffs, class.series_parity())?;

    Ok(ProlateFunction {
        k,
        a,
        gamma: pair.gamma,
        series,
        parity: class.series_parity(),
        truncation: n_basis,
        residual: pair.residual,
        normalization_fallback: fallback,
    })
}

/// g_k(t, a) at a point of [-1, 1].
pub fn prolate_eval(pf: &ProlateFunction, t: f64) -> Result<f64> {
    crate::legendre::series_eval(&pf.series, t)
}

/// mu = gamma / a^2, relating the rescaled and original eigenvalues.
pub fn gamma_to_mu(gamma: f64, a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("a = {a} must be positive")));
    }
    Ok(gamma / (a * a))
}

/// e_k(t, a) = g_k(t / a, a) on the big interval [-a, a].
pub fn eigenfunction_on_big_interval(pf: &ProlateFunction, t: f64) -> Result<f64> {
    if !(pf.a > 0.0) {
        return Err(Error::Domain("big-interval evaluation needs a > 0".into()));
    }
    if t.abs() > pf.a {
        return Err(Error::Domain(format!(
            "t = {t} outside [-{a}, {a}]",
            a = pf.a
        )));
    }
    prolate_eval(pf, t / pf.a)
}
