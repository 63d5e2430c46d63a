//! Randomized properties of the pure geometric and closed-form operations.

use prolate::analysis::interval_net_check;
use prolate::asymptotics::{transition_index, transition_sigma};
use prolate::legendre::{series_eval, LegendreSeries, Parity};
use proptest::prelude::*;

proptest! {
    /// largest_gap really is the worst distance from a point of [0, 1] to
    /// the value set, compared against a brute-force grid scan.
    #[test]
    fn net_gap_matches_brute_force(values in prop::collection::vec(0.0f64..=1.0, 1..40)) {
        let report = interval_net_check(&values, 0.1).unwrap();
        let grid = 20_000;
        let brute = (0..=grid)
            .map(|i| {
                let x = i as f64 / grid as f64;
                values
                    .iter()
                    .map(|v| (v - x).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max);
        prop_assert!((report.largest_gap - brute).abs() <= 1.0 / grid as f64);
        prop_assert_eq!(report.is_net, report.largest_gap <= 0.1);
    }

    /// A kappa^2-net of sigma values maps to a kappa-net of their square
    /// roots: |sqrt x - sqrt y| <= sqrt|x - y|.
    #[test]
    fn sqrt_contracts_coverage(values in prop::collection::vec(0.0f64..=1.0, 1..40), kappa in 0.05f64..0.9) {
        let sig = interval_net_check(&values, kappa * kappa).unwrap();
        let roots: Vec<f64> = values.iter().map(|v| v.sqrt()).collect();
        let lam = interval_net_check(&roots, kappa).unwrap();
        if sig.is_net {
            prop_assert!(lam.is_net);
        }
    }

    /// The limiting eigenvalue is a strictly decreasing sigmoid of b with
    /// the symmetry sigma(b) + sigma(-b) = 1. (Outside |b| < 11 the value
    /// saturates to 0 or 1 in binary64, which is the documented behavior.)
    #[test]
    fn transition_sigma_shape(b in -11.0f64..11.0) {
        let s = transition_sigma(b);
        prop_assert!(s > 0.0 && s < 1.0);
        prop_assert!((s + transition_sigma(-b) - 1.0).abs() <= 1e-15);
        prop_assert!(transition_sigma(b + 0.1) < s);
    }

    /// The transition index is nondecreasing in both arguments (on the
    /// region where a^2 + b ln(2a) stays nonnegative).
    #[test]
    fn transition_index_monotone(a in 2.0f64..20.0, b in -2.0f64..2.0) {
        let k = transition_index(a, b).unwrap();
        prop_assert!(transition_index(a, b + 0.3).unwrap() >= k);
        prop_assert!(transition_index(a + 0.5, b).unwrap() >= k);
    }

    /// Even series are even functions; odd series are odd functions.
    #[test]
    fn series_parity_symmetry(coeffs in prop::collection::vec(-1.0f64..1.0, 1..12), t in 0.0f64..=1.0) {
        let even: Vec<f64> = coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c } else { 0.0 })
            .collect();
        let s = LegendreSeries::new(even, Parity::Even).unwrap();
        let diff = series_eval(&s, t).unwrap() - series_eval(&s, -t).unwrap();
        prop_assert!(diff.abs() <= 1e-12);

        let odd: Vec<f64> = coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 1 { c } else { 0.0 })
            .collect();
        let s = LegendreSeries::new(odd, Parity::Odd).unwrap();
        let sum = series_eval(&s, t).unwrap() + series_eval(&s, -t).unwrap();
        prop_assert!(sum.abs() <= 1e-12);
    }
}
