//! Verification toolkit for total positivity and convex-order increasing
//! processes.
//!
//! The crate is organized around five areas:
//!
//! - [`totpos`]: bivariate TP2 checks, log-concavity, and kernel
//!   constructions (composition, reflection, smoothing, built-in kernels).
//! - [`mtp2`]: multivariate TP2 checks on discrete joint laws,
//!   marginalization closure, Gaussian criteria and the co-monotony gap.
//! - [`scm`]: strong conditional monotonicity, exact conditional ratios and
//!   randomized refutation suites.
//! - [`processes`]: exact finite Markov chains (including the rescaled
//!   critical branching chain) and seeded path simulation.
//! - [`peacock`]: normalized exponential functionals and convex-order
//!   verification, exact on finite chains and statistical on path ensembles.
//!
//! All numeric code is generic over the scalar type through [`Scalar`];
//! the `*64` aliases below pin the common `f64` instantiation.

pub mod error;
pub mod report;
pub mod scalar;
pub mod stats;
pub mod totpos;

pub use error::{Error, Result};
pub use report::{CheckReport, Verdict, Witness};
pub use scalar::{Scalar, SimScalar};

/// Default relative tolerance for the deterministic checks.
pub fn default_tol<T: Scalar>() -> T {
    T::of(1e-10)
}

pub type KernelGrid64 = totpos::KernelGrid<f64>;
pub type CheckReport64 = report::CheckReport<f64>;
