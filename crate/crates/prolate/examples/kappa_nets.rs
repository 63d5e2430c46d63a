//! As the bandwidth grows, the eigenvalues {sigma_k} fill the interval
//! [0, 1] ever more densely, and the Fourier eigenvalues
//! lambda_k = i^k sqrt(sigma_k) fill the cross with vertices 1, i, -1, -i.
//! This example measures the largest coverage gap at several bandwidths,
//! for the full set and per residue class mod 4 (one class per arm).
//!
//! Run with: cargo run --release --example kappa_nets

use prolate::analysis::{cross_net_check, interval_net_check};
use prolate::spectrum::spectrum_table;

fn main() -> Result<(), prolate::Error> {
    println!("largest gap of {{sigma_k}} as a subset of [0, 1] (k <= 80):");
    for a in [2.0, 4.0, 8.0] {
        let table = spectrum_table(a, 80, false)?;
        let r = interval_net_check(&table.sigmas(), 0.2)?;
        println!(
            "  a={a}: largest gap {:.4} at sigma = {:.4}  (0.2-net: {})",
            r.largest_gap, r.witness.position, r.is_net
        );
    }

    println!("\ncross coverage by lambda_k at a = 8, per arm (kappa = 0.35):");
    let table = spectrum_table(8.0, 80, false)?;
    let cross = cross_net_check(&table, 0.35)?;
    for c in cross.residue_class_results.as_ref().unwrap() {
        println!(
            "  arm i^{} ({} eigenvalues): largest gap {:.4} at |lambda| = {:.4} -> {}",
            c.residue,
            c.count,
            c.largest_gap,
            c.witness,
            if c.is_net { "covered" } else { "not covered" }
        );
    }
    println!(
        "  whole cross is a 0.35-net: {} (worst arm gap {:.4})",
        cross.is_net, cross.largest_gap
    );
    println!(
        "\neach arm holds every fourth eigenvalue, so the plunge leaves a\n\
         per-arm hole that closes only logarithmically in a; the vertex ends\n\
         fill in fast (gap to 1 at a=8: {:.1e})",
        1.0 - table.entries[3].sigma.sqrt()
    );
    Ok(())
}
