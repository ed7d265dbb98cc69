//! Limiting spectral moments of sparse Erdős–Rényi adjacency matrices.
//!
//! Three independent routes to the same numbers live here:
//!
//! - [`moments`]: the exact walk-count table `W_u(v)` and the limiting even
//!   moments `m_k = Σ_r W_k(r)` of `N⁻¹ Tr A^{2k}`, in arbitrary precision.
//! - [`oracle`]: brute-force enumeration of plane rooted trees and of the
//!   closed walks that cover them under the leftmost-new-edge rule.
//! - [`sim`]: Erdős–Rényi sampling, dense symmetric eigensolves of the
//!   adjacency matrix and Laplacian, Monte Carlo moment estimates and exact
//!   finite-`N` expectations.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the CLI live
//! in the `graphspec-cli` companion crate.
//!
//! ```
//! use graphspec_core::{moments, Intensity};
//!
//! let seq = moments::moment_sequence(3, &Intensity::one()).unwrap();
//! let values: Vec<String> = seq.even_moments().iter().map(|m| m.to_string()).collect();
//! assert_eq!(values, ["1", "3", "12"]);
//! ```
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod error;
mod intensity;
pub mod moments;
pub mod oracle;
pub mod sim;

pub use error::{Error, Result};
pub use intensity::Intensity;
