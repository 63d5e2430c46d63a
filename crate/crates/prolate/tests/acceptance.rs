//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the measured quantities before asserting.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use prolate::analysis::{
    cross_net_check, interval_net_check, plunge_counts, trace_check, trace_k_max,
};
use prolate::asymptotics::{
    lambda_small_a, sigma_deficit_large_a, sigma_small_a, transition_index, transition_sigma,
};
use prolate::prolate::compute_prolate;
use prolate::spectrum::{nystrom_sigma, spectrum_table};
use std::time::Instant;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[test]
fn criterion_01_legendre_limit() {
    let start = Instant::now();
    let pfs = compute_prolate(0.0, 10).unwrap();
    let mut worst_gamma = 0.0f64;
    let mut worst_coeff = 0.0f64;
    for (k, pf) in pfs.iter().enumerate() {
        worst_gamma = worst_gamma.max((pf.gamma - (k * (k + 1)) as f64).abs());
        for (n, &c) in pf.series.coeffs.iter().enumerate() {
            let expect = if n == k { 1.0 } else { 0.0 };
            worst_coeff = worst_coeff.max((c - expect).abs());
        }
    }
    let elapsed = start.elapsed();
    let ok = worst_gamma <= 1e-12 && worst_coeff <= 1e-12 && elapsed.as_secs_f64() < 1.0;
    println!(
        "criterion 01 legendre-limit: {} (max |gamma - k(k+1)| = {worst_gamma:.2e}, \
         max coeff err = {worst_coeff:.2e}, {:.0} ms)",
        verdict(ok),
        elapsed.as_secs_f64() * 1e3
    );
    assert!(ok);
}

#[test]
fn criterion_02_trace_identity() {
    let mut all_ok = true;
    let mut details = Vec::new();
    for a in [1.0, 2.0, 4.0] {
        let start = Instant::now();
        let table = spectrum_table(a, trace_k_max(a), false).unwrap();
        let report = trace_check(&table).unwrap();
        let rel = ((report.sum_sigma + report.tail_estimate - report.target) / report.target).abs();
        let ok = rel <= 1e-6 && start.elapsed().as_secs_f64() < 10.0;
        all_ok &= ok;
        details.push(format!("a={a}: rel err {rel:.2e}"));
    }
    println!(
        "criterion 02 trace-identity: {} ({})",
        verdict(all_ok),
        details.join(", ")
    );
    assert!(all_ok);
}

#[test]
fn criterion_03_oracle_equivalence() {
    let start = Instant::now();
    let table = spectrum_table(2.0, 10, false).unwrap();
    let oracle = nystrom_sigma(2.0, 10, 200).unwrap();
    let max_diff = table
        .entries
        .iter()
        .zip(&oracle)
        .map(|(e, o)| (e.sigma - o).abs())
        .fold(0.0f64, f64::max);
    let elapsed = start.elapsed();
    let ok = max_diff <= 1e-8 && elapsed.as_secs_f64() < 30.0;
    println!(
        "criterion 03 oracle-equivalence: {} (max |sigma - sigma_nystrom| = {max_diff:.2e}, \
         {:.0} ms)",
        verdict(ok),
        elapsed.as_secs_f64() * 1e3
    );
    assert!(ok);
}

#[test]
fn criterion_04_ordering_and_phase() {
    let mut all_ok = true;
    let mut worst_phase = 0.0f64;
    for a in [0.5, 1.0, 2.0, 4.0] {
        let table = spectrum_table(a, 20, false).unwrap();
        for w in table.entries.windows(2) {
            if !(w[1].sigma < w[0].sigma) {
                all_ok = false;
            }
        }
        for e in &table.entries {
            worst_phase = worst_phase.max(e.method_flags.presnap_phase_error);
        }
    }
    let ok = all_ok && worst_phase < 1e-8;
    println!(
        "criterion 04 ordering-and-phase: {} (strict descent over a in {{0.5,1,2,4}}, \
         k <= 20; worst pre-snap phase error = {worst_phase:.2e})",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn criterion_05_small_bandwidth_asymptotics() {
    // ratio of computed sigma_k(0.05) and |lambda_k(0.05)| to the stated
    // leading-term formulas, k <= 3, required inside [0.95, 1.05]
    let a = 0.05;
    let table = spectrum_table(a, 3, false).unwrap();
    let mut ok = true;
    let mut rows = Vec::new();
    for e in &table.entries {
        let sr = e.sigma / sigma_small_a(e.k, a).unwrap();
        let lr = e.lambda.norm() / lambda_small_a(e.k, a).unwrap().norm();
        ok &= (0.95..=1.05).contains(&sr) && (0.95..=1.05).contains(&lr);
        rows.push(format!("k={}: sigma ratio {sr:.4}, |lambda| ratio {lr:.4}", e.k));
    }
    println!(
        "criterion 05 small-a-asymptotics: {} ({})",
        verdict(ok),
        rows.join("; ")
    );
    assert!(ok, "computed/formula ratios sit far below [0.95, 1.05]");
}

#[test]
fn criterion_06_large_bandwidth_deficit() {
    let a = 2.5;
    let table = spectrum_table(a, 5, false).unwrap();
    let deficit = 1.0 - table.entries[0].sigma;
    let ratio = deficit / sigma_deficit_large_a(0, a).unwrap();
    let ok = (0.8..=1.25).contains(&ratio) && deficit > 1e-7;
    println!(
        "criterion 06 large-a-deficit: {} (1 - sigma_0(2.5) = {deficit:.4e}, \
         ratio to formula = {ratio:.4})",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn criterion_07_plunge_bounds_and_crossing() {
    let mut all_ok = true;
    let mut details = Vec::new();
    for a in [2.0, 4.0, 6.0] {
        let table = spectrum_table(a, trace_k_max(a), false).unwrap();
        for eps in [0.05, 0.1, 0.25] {
            let r = plunge_counts(&table, eps).unwrap();
            let m1 = r.zero_region_bound - r.n_above_eps as f64;
            let m2 = r.n_above_1m_eps as f64 - r.one_region_bound;
            let m3 = r.middle_bound - r.n_middle as f64;
            let ok = m1 >= -1e-9 && m2 >= -1e-9 && m3 >= -1e-9;
            all_ok &= ok;
            if !ok {
                details.push(format!("bounds violated at a={a}, eps={eps}"));
            }
        }
    }
    for a in [4.0, 6.0, 8.0] {
        let table = spectrum_table(a, trace_k_max(a), false).unwrap();
        let crossing = table
            .entries
            .iter()
            .find(|e| e.sigma < 0.5)
            .map(|e| e.k)
            .unwrap();
        let r = plunge_counts(&table, 0.1).unwrap();
        let ok = (crossing as f64) >= r.transition_lo && (crossing as f64) <= r.transition_hi;
        all_ok &= ok;
        details.push(format!(
            "a={a}: crossing k={crossing} in [{:.1}, {:.1}] {}",
            r.transition_lo,
            r.transition_hi,
            verdict(ok)
        ));
    }
    println!(
        "criterion 07 plunge-bounds: {} ({})",
        verdict(all_ok),
        details.join("; ")
    );
    assert!(all_ok);
}

#[test]
fn criterion_08_transition_law() {
    let k60 = transition_index(6.0, 0.0).unwrap();
    assert_eq!(k60, 22);
    let t6 = spectrum_table(6.0, 40, false).unwrap();
    let s22 = t6.entries[k60].sigma;
    let ok_center = (s22 - 0.5).abs() <= 0.15;

    let t8 = spectrum_table(8.0, 60, false).unwrap();
    let mut ok_sides = true;
    let mut side_detail = Vec::new();
    let mut prev = f64::INFINITY;
    let mut trend = true;
    for b in [-1.0, 0.0, 1.0] {
        let k = transition_index(8.0, b).unwrap();
        let s = t8.entries[k].sigma;
        if b != 0.0 {
            let diff = (s - transition_sigma(b)).abs();
            ok_sides &= diff <= 0.15;
            side_detail.push(format!("b={b}: |sigma_{k}(8) - limit| = {diff:.4}"));
        }
        trend &= s < prev;
        prev = s;
    }
    let ok = ok_center && ok_sides && trend;
    println!(
        "criterion 08 transition-law: {} (|sigma_22(6) - 1/2| = {:.4}; {}; \
         decreasing in b: {trend})",
        verdict(ok),
        (s22 - 0.5).abs(),
        side_detail.join("; ")
    );
    assert!(ok);
}

#[test]
fn criterion_09_kappa_nets() {
    let mut gaps = Vec::new();
    for a in [2.0, 4.0, 8.0] {
        let table = spectrum_table(a, 80, false).unwrap();
        let r = interval_net_check(&table.sigmas(), 0.2).unwrap();
        gaps.push((a, r.largest_gap));
    }
    let monotone = gaps[0].1 > gaps[1].1 && gaps[1].1 > gaps[2].1;
    let sigma_net_ok = gaps[2].1 <= 0.2;

    let t8 = spectrum_table(8.0, 80, false).unwrap();
    let cross = cross_net_check(&t8, 0.35).unwrap();
    let gap_list: Vec<String> = cross
        .residue_class_results
        .as_ref()
        .unwrap()
        .iter()
        .map(|c| format!("arm {}: {:.4}", c.residue, c.largest_gap))
        .collect();

    let ok = sigma_net_ok && cross.is_net && monotone;
    println!(
        "criterion 09 kappa-nets: {} (sigma gaps a=2,4,8: {:.4} > {:.4} > {:.4} \
         [monotone: {monotone}]; sigma 0.2-net at a=8: {sigma_net_ok}; \
         cross 0.35-net at a=8: {} [{}])",
        verdict(ok),
        gaps[0].1,
        gaps[1].1,
        gaps[2].1,
        cross.is_net,
        gap_list.join(", ")
    );
    assert!(
        ok,
        "the lambda set at a = 8 is only a {:.3}-net of the cross",
        cross.largest_gap
    );
}

#[test]
fn criterion_10_itz_inequality() {
    let mut all_ok = true;
    let mut details = Vec::new();
    for a in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let table = spectrum_table(a, trace_k_max(a), false).unwrap();
        let report = trace_check(&table).unwrap();
        let margin = report.itz_bound - report.itz_sum;
        all_ok &= margin >= -1e-9;
        details.push(format!("a={a}: {:.4} <= {:.4}", report.itz_sum, report.itz_bound));
    }
    println!(
        "criterion 10 itz-inequality: {} ({})",
        verdict(all_ok),
        details.join("; ")
    );
    assert!(all_ok);
}
