//! Evaluating the angular prolate functions g_k(t, a) and their rescaled
//! versions e_k(t, a) = g_k(t/a, a) on the big interval, with the
//! normalization g_k(0) = P_k(0) (even k) / g_k'(0) = P_k'(0) (odd k),
//! parity, and L^2 orthogonality.
//!
//! Run with: cargo run --release --example eigenfunctions

use prolate::legendre::gauss_legendre;
use prolate::prolate::{compute_prolate, eigenfunction_on_big_interval, prolate_eval};

fn main() -> Result<(), prolate::Error> {
    let a = 2.0;
    let pfs = compute_prolate(a, 5)?;

    println!("g_k(t, {a}) sampled on [-1, 1]:\n");
    print!("t      ");
    for pf in &pfs {
        print!("   g_{}      ", pf.k);
    }
    println!();
    for i in 0..=8 {
        let t = -1.0 + 0.25 * i as f64;
        print!("{t:+.2}  ");
        for pf in &pfs {
            print!("{:+.6}  ", prolate_eval(pf, t)?);
        }
        println!();
    }

    println!("\nparity: g_k(-t) = (-1)^k g_k(t)");
    for pf in &pfs {
        let t = 0.6180339887;
        let lhs = prolate_eval(pf, -t)?;
        let rhs = if pf.k % 2 == 0 { 1.0 } else { -1.0 } * prolate_eval(pf, t)?;
        println!("k={}: g(-t) - (-1)^k g(t) = {:+.2e}", pf.k, lhs - rhs);
    }

    println!("\nrescaling onto [-{a}, {a}]: e_k(t) = g_k(t/a)");
    let pf = &pfs[2];
    for t in [-2.0, -1.0, 0.0, 1.3, 2.0] {
        println!(
            "  e_2({t:+.1}) = {:+.8}  = g_2({:+.2})",
            eigenfunction_on_big_interval(pf, t)?,
            t / a
        );
    }

    // orthogonality on [-1, 1] by quadrature
    let rule = gauss_legendre(pfs[0].truncation + 10)?;
    println!("\nGram matrix of unit-normalized g_k (should be the identity):");
    let norms: Vec<f64> = pfs
        .iter()
        .map(|p| {
            rule.integrate(|t| prolate_eval(p, t).unwrap().powi(2))
                .sqrt()
        })
        .collect();
    for (i, pi) in pfs.iter().enumerate() {
        for (j, pj) in pfs.iter().enumerate() {
            let ip = rule.integrate(|t| {
                prolate_eval(pi, t).unwrap() * prolate_eval(pj, t).unwrap()
            }) / (norms[i] * norms[j]);
            print!("{:+.1e} ", ip);
        }
        println!();
    }
    Ok(())
}
