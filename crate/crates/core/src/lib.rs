//! Operators on finite-dimensional semi-Hilbertian spaces `(Cⁿ, ⟨·,·⟩_A)`
//! with `A` positive semidefinite: A-adjoints, A-seminorms, certified
//! enclosures of the A-numerical radius, and checkable reports for the
//! classical and refined numerical-radius inequalities.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: dense complex matrices, Hermitian eigendecomposition,
//!   spectral norm, tolerance policy.
//! - [`semi_hilbert`]: [`PsdContext`] (A and its spectral data) and
//!   [`AOperator`] (T with `T♯`, `Re_A(T)`, `Im_A(T)`).
//! - [`radius`]: θ-scan enclosure of `w_A(T)`, sampling oracle, numerical
//!   range clouds and the centered-disk test.
//! - [`bounds`]: every inequality as a [`bounds::BoundReport`], equality
//!   diagnostics and the commutator comparisons.
//! - [`instance`], [`suite`], [`cli`]: instance generation, JSON/CSV
//!   formats and the verification harness behind the `semihilbert` binary.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod instance;
pub mod linalg;
pub mod radius;
pub mod semi_hilbert;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::{c64, ComplexMatrix, ComplexVector, TolerancePolicy};
pub use radius::{RadiusEstimate, RangeCloud};
pub use semi_hilbert::{AOperator, PsdContext, Sign};
