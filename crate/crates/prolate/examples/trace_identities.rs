//! Sum rules for the sinc-kernel eigenvalues: the exact trace
//! sum sigma_k = 2a^2/pi, the lower bound on sum sigma_k^2, and the
//! inequality sum sigma_k(1 - sigma_k) <= (2/pi^2) ln+ a + 1 that controls
//! the width of the plunge region.
//!
//! Run with: cargo run --release --example trace_identities

use prolate::analysis::{trace_check, trace_k_max};
use prolate::spectrum::spectrum_table;

fn main() -> Result<(), prolate::Error> {
    println!(
        "{:<5} {:<14} {:<14} {:<10} {:<14} {:<10} {:<10}",
        "a", "sum sigma", "2a^2/pi", "rel err", "sum sigma^2", "itz sum", "itz bound"
    );
    for a in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let table = spectrum_table(a, trace_k_max(a), false)?;
        let r = trace_check(&table)?;
        println!(
            "{a:<5} {:<14.10} {:<14.10} {:<10.2e} {:<14.10} {:<10.6} {:<10.6}",
            r.sum_sigma,
            r.target,
            ((r.sum_sigma + r.tail_estimate - r.target) / r.target).abs(),
            r.sum_sigma_sq,
            r.itz_sum,
            r.itz_bound
        );
        assert!(r.trace_ok && r.sum_sq_ok && r.itz_ok);
    }
    println!("\nall three identities/inequalities hold on the grid");
    Ok(())
}
