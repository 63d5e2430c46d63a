//! At bandwidth a = 0 the prolate problem degenerates to the Legendre
//! differential equation: gamma_k(0) = k(k+1) and g_k(t, 0) = P_k(t).
//!
//! Run with: cargo run --release --example legendre_limit

use prolate::legendre::legendre_eval;
use prolate::prolate::{compute_prolate, prolate_eval};

fn main() -> Result<(), prolate::Error> {
    let pfs = compute_prolate(0.0, 10)?;

    println!("k   gamma_k(0)   k(k+1)   max |g_k - P_k| on [-1, 1]");
    for (k, pf) in pfs.iter().enumerate() {
        let mut worst = 0.0f64;
        for i in 0..=100 {
            let t = -1.0 + 0.02 * i as f64;
            worst = worst.max((prolate_eval(pf, t)? - legendre_eval(k, t)?).abs());
        }
        println!(
            "{k:<3} {:<12} {:<8} {worst:.2e}",
            pf.gamma,
            k * (k + 1)
        );
    }

    // a small bandwidth only perturbs the Legendre picture slightly
    let perturbed = compute_prolate(0.3, 4)?;
    println!("\nk   gamma_k(0.3)        drift from k(k+1)");
    for pf in &perturbed {
        println!(
            "{:<3} {:<18.12} {:+.3e}",
            pf.k,
            pf.gamma,
            pf.gamma - (pf.k * (pf.k + 1)) as f64
        );
    }
    Ok(())
}
