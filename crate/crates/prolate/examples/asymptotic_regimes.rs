//! Computed spectra against the closed-form asymptotic laws for small and
//! large bandwidth. Ratios tell the story: the large-bandwidth deficit law
//! tracks the computed values closely, while the small-bandwidth formulas
//! overshoot by a k-dependent constant (their exponents in a are right, the
//! leading coefficients are not: sigma_0 ~ 2a^2/pi, below the formula's
//! pi a^2/2, which would exceed the operator trace).
//!
//! Run with: cargo run --release --example asymptotic_regimes

use prolate::asymptotics::AsymptoticReport;
use prolate::spectrum::spectrum_table;

fn print_report(title: &str, report: &AsymptoticReport) {
    println!("{title}");
    println!("  {:<6} {:<14} {:<14} {:<8}", "k", "computed", "formula", "ratio");
    for row in &report.rows {
        println!(
            "  {:<6} {:<14.6e} {:<14.6e} {:<8.4}",
            row.index, row.computed, row.formula, row.ratio
        );
    }
    println!();
}

fn main() -> Result<(), prolate::Error> {
    let small = spectrum_table(0.05, 3, false)?;
    print_report(
        "small bandwidth (a = 0.05): sigma_k vs 2 pi (a^2/4)^(2k+1) / (k!)^2",
        &AsymptoticReport::small_a_sigma(&small)?,
    );
    print_report(
        "small bandwidth (a = 0.05): |lambda_k| vs sqrt(2 pi) (a/2)^(2k+1) / k!",
        &AsymptoticReport::small_a_lambda(&small)?,
    );
    // the exact leading term of sigma_0 is 2a^2/pi
    let a = 0.05f64;
    println!(
        "  note: sigma_0 = {:.6e} vs 2a^2/pi = {:.6e} (ratio {:.6})\n",
        small.entries[0].sigma,
        2.0 * a * a / std::f64::consts::PI,
        small.entries[0].sigma / (2.0 * a * a / std::f64::consts::PI)
    );

    let large = spectrum_table(2.5, 3, false)?;
    let deficits = AsymptoticReport::large_a_deficit(&large)?;
    println!("large bandwidth (a = 2.5): 1 - sigma_k vs 4 sqrt(pi) 8^k a^(2k+1) e^(-2a^2) / k!");
    println!("  {:<6} {:<14} {:<14} {:<8}", "k", "computed", "formula", "ratio");
    for row in deficits.rows.iter().take(3) {
        println!(
            "  {:<6} {:<14.6e} {:<14.6e} {:<8.4}",
            row.index, row.computed, row.formula, row.ratio
        );
    }
    Ok(())
}
