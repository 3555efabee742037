// SPDX-License-Identifier: Apache-2.0

//! Lindblad evolution of density matrices whose dissipator is a weighted set
//! of mutually orthogonal projectors,
//!
//! ```text
//! dρ/dt = −i[H, ρ] − ½ Σ_j λ_j (P_j ρ Q_j + Q_j ρ P_j),   Q_j = 1 − P_j.
//! ```
//!
//! Two propagation routes are implemented and compared:
//!
//! * the exact solution, the exponential of the row-stacked `n²×n²`
//!   Liouvillian;
//! * the commutable approximation, which splits the Hamiltonian and
//!   dissipative generators and drops their interaction term. It has a
//!   closed form costing a handful of `n×n` products per time point.
//!
//! ```no_run
//! use lindproj::config::presets;
//! use lindproj::propagate::{approx_propagate_closed, exact_propagate};
//!
//! let scenario = presets::load("driven-qubit")?;
//! let exact = exact_propagate(&scenario, 0.1)?;
//! let approx = approx_propagate_closed(&scenario, 0.1)?;
//! println!("gap {:.3e}", exact.state.distance(&approx.state));
//! # Ok::<(), lindproj::Error>(())
//! ```

pub mod analysis;
pub mod config;
pub mod error;
pub mod linalg;
pub mod model;
pub mod propagate;
pub mod random;
pub mod run;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
pub use model::{DensityMatrix, Hamiltonian, ProjectorFamily, ProjectorMember, Scenario, Superoperator};
