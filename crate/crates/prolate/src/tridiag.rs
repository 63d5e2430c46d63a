//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.
//!
//! Only eigenvalues are produced here; the Galerkin solver reconstructs
//! eigenvectors by a two-sided coefficient recurrence, which preserves the
//! relative accuracy of exponentially small leading coefficients where
//! inverse iteration would only give absolute accuracy.

#[derive(Debug, Clone)]
pub(crate) struct SymTridiag {
    pub diag: Vec<f64>,
    /// off[i] couples rows i and i + 1; length diag.len() - 1.
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below x (Sturm count via the LDL^T
    /// pivot sequence).
    pub fn count_below(&self, x: f64) -> usize {
        let n = self.order();
        let tiny = f64::MIN_POSITIVE;
        let mut q = 1.0f64;
        let mut count = 0;
        for i in 0..n {
            let off2 = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = (self.diag[i] - x) - off2 / q;
            if q.abs() < tiny {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin enclosure of the whole spectrum.
    fn spectrum_bounds(&self) -> (f64, f64) {
        let n = self.order();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `count` smallest eigenvalues, ascending, each bisected until the
    /// bracket collapses to a few ulps.
    pub fn smallest_eigenvalues(&self, count: usize) -> Vec<f64> {
        let (glo, ghi) = self.spectrum_bounds();
        let span = (ghi - glo).max(1.0);
        (0..count.min(self.order()))
            .map(|j| {
                let mut lo = glo;
                let mut hi = ghi;
                // eigenvalue j is isolated by: count_below(x) <= j below it,
                // > j above it
                loop {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.count_below(mid) > j {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                    if hi - lo <= f64::EPSILON * (lo.abs().max(hi.abs()) + 1e-3 * span) {
                        break;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    }

    /// T v, for residual checks and Rayleigh quotients.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.order();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut s = self.diag[i] * v[i];
            if i > 0 {
                s += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                s += self.off[i] * v[i + 1];
            }
            out[i] = s;
        }
        out
    }

    /// Rayleigh quotient v^T T v / v^T v.
    pub fn rayleigh(&self, v: &[f64]) -> f64 {
        let tv = self.apply(v);
        let num: f64 = v.iter().zip(&tv).map(|(a, b)| a * b).sum();
        let den: f64 = v.iter().map(|a| a * a).sum();
        num / den
    }

    /// max_i |(T v - lambda v)_i| / max_i |v_i|.
    pub fn residual(&self, v: &[f64], lambda: f64) -> f64 {
        let tv = self.apply(v);
        let num = tv
            .iter()
            .zip(v)
            .map(|(t, x)| (t - lambda * x).abs())
            .fold(0.0f64, f64::max);
        let den = v.iter().map(|x| x.abs()).fold(0.0f64, f64::max);
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn dense_eigenvalues(t: &SymTridiag) -> Vec<f64> {
        let n = t.order();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                t.diag[i]
            } else if i.abs_diff(j) == 1 {
                t.off[i.min(j)]
            } else {
                0.0
            }
        });
        let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }

    #[test]
    fn bisection_matches_dense_oracle() {
        // a Galerkin-like matrix: growing diagonal, mild coupling
        let n = 60;
        let t = SymTridiag {
            diag: (0..n).map(|i| (2 * i * (2 * i + 1)) as f64 + 0.7).collect(),
            off: (0..n - 1).map(|i| 1.3 + 0.1 * i as f64).collect(),
        };
        let mine = t.smallest_eigenvalues(n);
        let dense = dense_eigenvalues(&t);
        for (a, b) in mine.iter().zip(&dense) {
            assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "{a} vs {b}");
        }
    }

    #[test]
    fn sturm_count_is_monotone() {
        let t = SymTridiag {
            diag: vec![2.0, 5.0, 11.0, 19.0],
            off: vec![1.0, 2.0, 0.5],
        };
        let mut prev = 0;
        for i in 0..60 {
            let x = -2.0 + i as f64 * 0.4;
            let c = t.count_below(x);
            assert!(c >= prev);
            prev = c;
        }
        assert_eq!(t.count_below(-10.0), 0);
        assert_eq!(t.count_below(100.0), 4);
    }
}
