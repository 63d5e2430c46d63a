//! Global spectral-distribution checks: trace identities, the
//! sigma(1 - sigma) inequality, plunge-region counting bounds, and kappa-net
//! coverage of [0, 1] and of the cross of eigenvalue arms.

use crate::error::{Error, Result};
use crate::spectrum::SpectrumTable;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// ln+ a = max(ln a, 0).
pub fn ln_plus(a: f64) -> f64 {
    a.ln().max(0.0)
}

/// The log-sized budget (2/pi^2) ln+ a + 1 that controls every plunge bound.
fn log_budget(a: f64) -> f64 {
    2.0 / (PI * PI) * ln_plus(a) + 1.0
}

/// Required table size for trace checks: ceil(2 a^2 / pi) + 40.
pub fn trace_k_max(a: f64) -> usize {
    (2.0 * a * a / PI).ceil() as usize + 40
}

/// Trace identities and the sigma(1 - sigma) bound for one bandwidth.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceReport {
    pub a: f64,
    /// sum of computed sigma_k over the table
    pub sum_sigma: f64,
    /// exact trace 2 a^2 / pi
    pub target: f64,
    pub sum_sigma_sq: f64,
    /// 2 a^2/pi - (2/pi^2) ln+ a - 1
    pub lower_bound: f64,
    /// sum sigma_k (1 - sigma_k)
    pub itz_sum: f64,
    /// (2/pi^2) ln+ a + 1
    pub itz_bound: f64,
    /// geometric extrapolation of the truncated tail
    pub tail_estimate: f64,
    /// decay ratio of the last entries was <= 1/2
    pub tail_trusted: bool,
    /// relative tolerance the trace identity is checked at
    pub rel_tolerance: f64,
    pub trace_ok: bool,
    pub sum_sq_ok: bool,
    pub itz_ok: bool,
}

/// Evaluate the trace identity, the trace-of-square lower bound, and the
/// sigma(1 - sigma) inequality over a computed table.
pub fn trace_check(table: &SpectrumTable) -> Result<TraceReport> {
    let a = table.a;
    let required = trace_k_max(a);
    if table.k_max < required {
        return Err(Error::Precondition(format!(
            "trace check at a = {a} needs k_max >= {required}, table has {}",
            table.k_max
        )));
    }
    let sigmas = table.sigmas();
    let sum_sigma: f64 = sigmas.iter().sum();
    let sum_sigma_sq: f64 = sigmas.iter().map(|s| s * s).sum();
    let itz_sum: f64 = sigmas.iter().map(|s| s * (1.0 - s)).sum();

    // geometric tail from the last five entries
    let n = sigmas.len();
    let (tail_estimate, tail_trusted) = if n >= 5 && sigmas[n - 1] > 0.0 {
        let ratio = (sigmas[n - 1] / sigmas[n - 5]).powf(0.25);
        if ratio < 1.0 {
            (sigmas[n - 1] * ratio / (1.0 - ratio), ratio <= 0.5)
        } else {
            (0.0, false)
        }
    } else {
        (0.0, sigmas.last().copied() == Some(0.0))
    };

    let target = 2.0 * a * a / PI;
    let lower_bound = target - log_budget(a);
    let itz_bound = log_budget(a);
    let rel_tolerance = 1e-6;
    Ok(TraceReport {
        a,
        sum_sigma,
        target,
        sum_sigma_sq,
        lower_bound,
        itz_sum,
        itz_bound,
        tail_estimate,
        tail_trusted,
        rel_tolerance,
        trace_ok: (sum_sigma + tail_estimate - target).abs() <= rel_tolerance * target,
        sum_sq_ok: sum_sigma_sq >= lower_bound - 1e-9,
        itz_ok: itz_sum <= itz_bound + 1e-9,
    })
}

/// Counts of eigenvalues near 1, near 0 and in between, with the three
/// counting bounds they must satisfy.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlungeReport {
    pub a: f64,
    pub epsilon: f64,
    /// #{k : sigma_k > epsilon}
    pub n_above_eps: usize,
    /// #{k : sigma_k > 1 - epsilon}
    pub n_above_1m_eps: usize,
    /// #{k : epsilon <= sigma_k <= 1 - epsilon}
    pub n_middle: usize,
    /// upper bound on n_above_eps: 2a^2/pi + (1/eps) ((2/pi^2) ln+ a + 1)
    pub zero_region_bound: f64,
    /// lower bound on n_above_1m_eps: 2a^2/pi - (1/eps) ((2/pi^2) ln+ a + 1)
    pub one_region_bound: f64,
    /// upper bound on n_middle: (eps(1-eps))^{-1} ((2/pi^2) ln+ a + 1)
    pub middle_bound: f64,
    /// transition interval of indices, clipped below at 0
    pub transition_lo: f64,
    pub transition_hi: f64,
    /// every index of the transition interval fits in the table
    pub transition_covered: bool,
}

pub fn plunge_counts(table: &SpectrumTable, epsilon: f64) -> Result<PlungeReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::Domain(format!(
            "epsilon = {epsilon} outside (0, 1/2)"
        )));
    }
    let last = table.entries.last().map(|e| e.sigma).unwrap_or(1.0);
    if last > epsilon / 10.0 {
        return Err(Error::Precondition(format!(
            "table at a = {} ends at sigma = {last:.3e} > epsilon/10 = {:.3e}; \
             extend k_max",
            table.a,
            epsilon / 10.0
        )));
    }
    let a = table.a;
    let sigmas = table.sigmas();
    let n_above_eps = sigmas.iter().filter(|&&s| s > epsilon).count();
    let n_above_1m_eps = sigmas.iter().filter(|&&s| s > 1.0 - epsilon).count();
    let n_middle = sigmas
        .iter()
        .filter(|&&s| s >= epsilon && s <= 1.0 - epsilon)
        .count();
    let center = 2.0 * a * a / PI;
    let width = log_budget(a) / epsilon;
    Ok(PlungeReport {
        a,
        epsilon,
        n_above_eps,
        n_above_1m_eps,
        n_middle,
        zero_region_bound: center + width,
        one_region_bound: center - width,
        middle_bound: log_budget(a) / (epsilon * (1.0 - epsilon)),
        transition_lo: (center - width).max(0.0),
        transition_hi: center + width,
        transition_covered: table.k_max as f64 >= center + width,
    })
}

/// Where a net check takes place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NetDomain {
    UnitInterval,
    Cross,
}

/// The worst-covered point of the domain.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct NetWitness {
    /// Arm index (power of i) for cross domains; None on [0, 1].
    pub arm: Option<usize>,
    /// Position along [0, 1] (distance from the origin on an arm).
    pub position: f64,
}

/// Net verdict for one residue class.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassNet {
    pub residue: usize,
    pub count: usize,
    pub is_net: bool,
    pub largest_gap: f64,
    pub witness: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetReport {
    pub kappa: f64,
    pub domain: NetDomain,
    pub is_net: bool,
    pub largest_gap: f64,
    pub witness: NetWitness,
    pub residue_class_results: Option<Vec<ClassNet>>,
}

/// Largest distance from a point of [0, 1] to the value set, and the point
/// attaining it. Endpoints are targets to cover, not free points.
fn coverage_gap(sorted: &[f64]) -> (f64, f64) {
    let mut gap = sorted[0];
    let mut witness = 0.0;
    if 1.0 - sorted[sorted.len() - 1] > gap {
        gap = 1.0 - sorted[sorted.len() - 1];
        witness = 1.0;
    }
    for w in sorted.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        if half > gap {
            gap = half;
            witness = 0.5 * (w[0] + w[1]);
        }
    }
    (gap, witness)
}

/// Is `values` a kappa-net of [0, 1]?
pub fn interval_net_check(values: &[f64], kappa: f64) -> Result<NetReport> {
    if values.is_empty() {
        return Err(Error::Domain("net check needs at least one value".into()));
    }
    if !(kappa > 0.0) {
        return Err(Error::Domain(format!("kappa = {kappa} must be positive")));
    }
    if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::Domain("net values must lie in [0, 1]".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (largest_gap, witness) = coverage_gap(&sorted);
    Ok(NetReport {
        kappa,
        domain: NetDomain::UnitInterval,
        is_net: largest_gap <= kappa,
        largest_gap,
        witness: NetWitness {
            arm: None,
            position: witness,
        },
        residue_class_results: None,
    })
}

fn class_values(table: &SpectrumTable, residue: usize, sqrt: bool) -> Vec<f64> {
    table
        .entries
        .iter()
        .filter(|e| e.k % 4 == residue)
        .map(|e| if sqrt { e.sigma.sqrt() } else { e.sigma })
        .collect()
}

fn net_over_classes(table: &SpectrumTable, kappa: f64, sqrt: bool, domain: NetDomain) -> Result<NetReport> {
    if table.entries.is_empty() {
        return Err(Error::Domain("net check needs a nonempty table".into()));
    }
    if !(kappa > 0.0) {
        return Err(Error::Domain(format!("kappa = {kappa} must be positive")));
    }
    let mut classes = Vec::with_capacity(4);
    let mut worst_gap = 0.0;
    let mut worst = NetWitness {
        arm: Some(0),
        position: 0.0,
    };
    for r in 0..4 {
        let mut vals = class_values(table, r, sqrt);
        let report = if vals.is_empty() {
            // no eigenvalue in this residue class: nothing covers anything
            ClassNet {
                residue: r,
                count: 0,
                is_net: false,
                largest_gap: f64::INFINITY,
                witness: 0.5,
            }
        } else {
            vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let (gap, witness) = coverage_gap(&vals);
            ClassNet {
                residue: r,
                count: vals.len(),
                is_net: gap <= kappa,
                largest_gap: gap,
                witness,
            }
        };
        if report.largest_gap > worst_gap {
            worst_gap = report.largest_gap;
            worst = NetWitness {
                arm: Some(r),
                position: report.witness,
            };
        }
        classes.push(report);
    }
    Ok(NetReport {
        kappa,
        domain,
        is_net: classes.iter().all(|c| c.is_net),
        largest_gap: worst_gap,
        witness: worst,
        residue_class_results: Some(classes),
    })
}

/// Do all four residue classes {sigma_{4l+r}} form kappa-nets of [0, 1]?
pub fn residue_net_check(table: &SpectrumTable, kappa: f64) -> Result<NetReport> {
    net_over_classes(table, kappa, false, NetDomain::UnitInterval)
}

/// Does the eigenvalue set {lambda_k} = {i^k sqrt(sigma_k)} form a kappa-net
/// of the cross with vertices 1, i, -1, -i? Arm r carries the residue class
/// k = r (mod 4), and |i^k| = 1 reduces each arm to an interval check on
/// the sqrt(sigma) values.
pub fn cross_net_check(table: &SpectrumTable, kappa: f64) -> Result<NetReport> {
    net_over_classes(table, kappa, true, NetDomain::Cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::spectrum_table;
    use approx::assert_abs_diff_eq;

    #[test]
    fn trace_identity_small_bandwidth() {
        let table = spectrum_table(1.0, trace_k_max(1.0), false).unwrap();
        let report = trace_check(&table).unwrap();
        assert!(report.trace_ok, "sum {} vs {}", report.sum_sigma, report.target);
        assert_abs_diff_eq!(report.target, 2.0 / PI, epsilon = 1e-15);
        // ln+ 1 = 0 so the budget is exactly 1
        assert_eq!(report.itz_bound, 1.0);
        assert!(report.itz_ok);
        assert!(report.sum_sq_ok);
    }

    #[test]
    fn trace_identity_a2() {
        let table = spectrum_table(2.0, trace_k_max(2.0), false).unwrap();
        let report = trace_check(&table).unwrap();
        assert!((report.sum_sigma + report.tail_estimate - report.target).abs() <= 1e-6 * report.target);
        assert_abs_diff_eq!(report.target, 8.0 / PI, epsilon = 1e-14);
    }

    #[test]
    fn trace_square_bound_a4() {
        let table = spectrum_table(4.0, trace_k_max(4.0), false).unwrap();
        let report = trace_check(&table).unwrap();
        let expect = 32.0 / PI - 2.0 / (PI * PI) * 4f64.ln() - 1.0;
        assert_abs_diff_eq!(report.lower_bound, expect, epsilon = 1e-12);
        assert!(report.sum_sigma_sq >= expect);
    }

    #[test]
    fn trace_requires_enough_indices() {
        let table = spectrum_table(4.0, 20, false).unwrap();
        match trace_check(&table) {
            Err(Error::Precondition(msg)) => assert!(msg.contains(&format!("{}", trace_k_max(4.0)))),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn plunge_counts_and_bounds() {
        let table = spectrum_table(6.0, 40, false).unwrap();
        let report = plunge_counts(&table, 0.1).unwrap();
        assert!((report.n_above_eps as f64) < report.zero_region_bound);
        assert!((report.n_above_1m_eps as f64) >= report.one_region_bound);
        assert!((report.n_middle as f64) <= report.middle_bound);
        // middle bound at a = 6, eps = 0.1: (1/0.09)((2/pi^2) ln 6 + 1) ~ 15.1
        assert_abs_diff_eq!(report.middle_bound, 15.145, epsilon = 1e-2);
        assert!(report.transition_covered);
    }

    #[test]
    fn plunge_negative_lower_bound_is_trivial() {
        let table = spectrum_table(4.0, 40, false).unwrap();
        let report = plunge_counts(&table, 0.1).unwrap();
        // 2/pi * 16 - 10((2/pi^2) ln 4 + 1) is negative here
        assert!(report.one_region_bound < 0.0);
        assert!((report.n_above_1m_eps as f64) >= report.one_region_bound);
    }

    #[test]
    fn plunge_input_validation() {
        let table = spectrum_table(2.0, 30, false).unwrap();
        assert!(plunge_counts(&table, 0.0).is_err());
        assert!(plunge_counts(&table, 0.5).is_err());
        let short = spectrum_table(6.0, 10, false).unwrap();
        assert!(matches!(
            plunge_counts(&short, 0.1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn interval_net_geometry() {
        let r = interval_net_check(&[0.0, 0.5, 1.0], 0.25).unwrap();
        assert!(r.is_net);
        assert_eq!(r.largest_gap, 0.25);

        let r = interval_net_check(&[0.5], 0.4).unwrap();
        assert!(!r.is_net);
        assert_eq!(r.largest_gap, 0.5);
        assert!(r.witness.position == 0.0 || r.witness.position == 1.0);

        assert!(interval_net_check(&[], 0.5).is_err());
        assert!(interval_net_check(&[1.5], 0.5).is_err());
        assert!(interval_net_check(&[0.5], 0.0).is_err());
    }

    #[test]
    fn residue_classes_at_large_bandwidth() {
        let table = spectrum_table(8.0, 80, false).unwrap();
        let report = residue_net_check(&table, 0.35).unwrap();
        let classes = report.residue_class_results.as_ref().unwrap();
        assert_eq!(classes.len(), 4);
        for c in classes {
            assert_eq!(c.count, 20 + usize::from(c.residue == 0));
            assert!(c.largest_gap.is_finite());
        }
        // kappa >= 1 is trivially satisfied on [0, 1]
        let trivial = residue_net_check(&table, 1.0).unwrap();
        assert!(trivial.is_net);
    }

    #[test]
    fn sparse_spectrum_is_not_a_fine_net() {
        let table = spectrum_table(0.5, 20, false).unwrap();
        let report = residue_net_check(&table, 0.1).unwrap();
        assert!(!report.is_net);
        let cross = cross_net_check(&table, 0.1).unwrap();
        assert!(!cross.is_net);
    }

    #[test]
    fn cross_reduces_to_sqrt_classes() {
        let table = spectrum_table(4.0, 40, false).unwrap();
        let cross = cross_net_check(&table, 0.5).unwrap();
        let classes = cross.residue_class_results.as_ref().unwrap();
        for c in classes {
            let mut vals: Vec<f64> = table
                .entries
                .iter()
                .filter(|e| e.k % 4 == c.residue)
                .map(|e| e.sigma.sqrt())
                .collect();
            vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let direct = interval_net_check(&vals, 0.5).unwrap();
            assert_abs_diff_eq!(direct.largest_gap, c.largest_gap, epsilon = 1e-15);
        }
    }

    #[test]
    fn cross_vertices_fill_in() {
        // distance from each arm's vertex to its nearest eigenvalue shrinks
        // as the bandwidth grows; the vertices themselves are never attained
        let mut prev = f64::INFINITY;
        for a in [2.0, 4.0, 8.0] {
            let table = spectrum_table(a, 80, false).unwrap();
            let worst = (0..4)
                .map(|r| {
                    let top = table
                        .entries
                        .iter()
                        .filter(|e| e.k % 4 == r)
                        .map(|e| e.sigma.sqrt())
                        .fold(0.0f64, f64::max);
                    1.0 - top
                })
                .fold(0.0f64, f64::max);
            assert!(worst <= prev, "vertex gap grew at a = {a}: {worst} > {prev}");
            prev = worst;
        }
        assert!(prev < 1e-10);
    }

    #[test]
    fn sqrt_mapping_tightens_nets() {
        // if the sigma class is a kappa^2-net then the sqrt class is a
        // kappa-net: |sqrt x - sqrt y| <= sqrt|x - y|
        let table = spectrum_table(8.0, 80, false).unwrap();
        for kappa in [0.45f64, 0.6] {
            let sig = residue_net_check(&table, kappa * kappa).unwrap();
            let lam = cross_net_check(&table, kappa).unwrap();
            if sig.is_net {
                assert!(lam.is_net, "kappa = {kappa}");
            }
        }
    }
}
