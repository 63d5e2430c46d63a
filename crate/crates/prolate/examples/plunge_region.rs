//! The eigenvalues sigma_k(a) sit near 1 for k below ~2a^2/pi and near 0
//! above it; the plunge between the two plateaus is only O(ln a) indices
//! wide. This example counts eigenvalues in the three regions and compares
//! against the counting bounds.
//!
//! Run with: cargo run --release --example plunge_region

use prolate::analysis::{plunge_counts, trace_k_max};
use prolate::spectrum::spectrum_table;

fn main() -> Result<(), prolate::Error> {
    let epsilon = 0.1;
    println!("epsilon = {epsilon}\n");
    println!(
        "{:<4} {:<10} {:<22} {:<22} {:<20}",
        "a", "2a^2/pi", "#{sigma > eps} < bound", "#{sigma > 1-eps} >= bound", "middle <= bound"
    );
    for a in [2.0, 4.0, 6.0, 8.0] {
        let table = spectrum_table(a, trace_k_max(a), false)?;
        let r = plunge_counts(&table, epsilon)?;
        println!(
            "{a:<4} {:<10.3} {:<22} {:<22} {:<20}",
            2.0 * a * a / std::f64::consts::PI,
            format!("{} < {:.2}", r.n_above_eps, r.zero_region_bound),
            format!("{} >= {:.2}", r.n_above_1m_eps, r.one_region_bound),
            format!("{} <= {:.2}", r.n_middle, r.middle_bound),
        );
    }

    // the plunge profile itself at a = 6
    let table = spectrum_table(6.0, 32, false)?;
    println!("\nsigma profile at a = 6 (plunge centered near 2a^2/pi = 22.9):");
    for e in table.entries.iter().skip(17).take(12) {
        let bar = "#".repeat((e.sigma * 40.0).round() as usize);
        println!("k={:<3} sigma={:<12.6} {bar}", e.k, e.sigma);
    }
    Ok(())
}
