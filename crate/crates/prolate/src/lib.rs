//! Eigenfunctions and eigenvalues of the Fourier operator truncated to a
//! finite symmetric interval `[-a, a]`.
//!
//! The truncated operator commutes with a prolate spheroidal differential
//! operator, so its eigenfunctions are the angular prolate functions
//! `g_k(t, a)` rescaled to the big interval. This crate computes them with a
//! Legendre-Galerkin solver, evaluates the Fourier eigenvalues
//! `lambda_k = i^k sqrt(sigma_k)`, and verifies the spectral-distribution
//! laws: strict ordering, exact phases, trace identities, plunge-region
//! counting bounds, transition asymptotics, and kappa-net coverage of the
//! cross of eigenvalue arms.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`legendre_limit`** - the a = 0 limit reproduces Legendre polynomials
//! - **`spectrum`** - sigma_k and lambda_k with the Nystrom cross-check
//! - **`eigenfunctions`** - evaluating g_k and e_k, orthogonality in action
//! - **`trace_identities`** - sum rules and the sigma(1 - sigma) bound
//! - **`plunge_region`** - counting bounds around k = 2a^2/pi
//! - **`transition_law`** - the limit law at the plunge and the implicit
//!   arg-Gamma equation
//! - **`kappa_nets`** - how the eigenvalues fill [0, 1] and the cross
//! - **`asymptotic_regimes`** - small- and large-bandwidth laws vs. computed
//!   spectra
//!
//! ```bash
//! cargo run --release --example spectrum
//! cargo run --release --example kappa_nets
//! ```
//!
//! The same analyses are scriptable through the `prolate` binary; see the
//! `cli` module or run `prolate --help`.
//!
//! ## Quick start
//!
//! ```
//! use prolate::spectrum::spectrum_table;
//!
//! let table = spectrum_table(2.0, 10, true).unwrap();
//! // sigma_k strictly decreases and stays inside (0, 1)
//! assert!(table.entries[0].sigma > table.entries[10].sigma);
//! // the independent Nystrom route agrees
//! assert!(table.oracle_agreement.unwrap() < 1e-8);
//! ```
//!
//! The basis-size hard cap of the Galerkin solver (16384 per parity class)
//! can be overridden with the `PROLATE_MAX_N` environment variable.

// `!(x > 0.0)` guards are deliberate: they reject NaN along with the
// out-of-domain values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod analysis;
pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod legendre;
pub mod prolate;
pub mod spectrum;
mod tridiag;

pub use error::{Error, Result};
pub use legendre::{LegendreSeries, Parity, QuadratureRule};
pub use prolate::{compute_prolate, GalerkinMatrix, ParityClass, ProlateFunction};
pub use spectrum::{spectrum_table, SpectrumTable};
