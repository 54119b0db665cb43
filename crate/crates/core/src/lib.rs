//! Solvers for the time-fractional problem
//!
//! ```text
//! D^α_{θ,a} u - (x^β u_x)_x = f(x, t),   0 < x < 1,  a < t <= T,
//! u(x, a) = φ(x),   u(1, t) = 0,   u(0, t) = 0 when β < 1,
//! ```
//!
//! where `D^α_{θ,a}` is the regularized hyper-Bessel derivative, acting as
//! `p^α` times a Caputo derivative in the warped time `s = t^p - a^p`,
//! `p = 1 - θ`.
//!
//! The library is generic over the scalar type through [`scalar::Real`];
//! the aliases below fix it to `f64`.

// negated comparisons are used on purpose so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod frac_ops;
pub mod oracle_fd;
pub mod quad;
pub mod sampled;
pub mod scalar;
pub mod solver;
pub mod special;
pub mod spectral;

pub use error::{Error, Result};

pub type ProblemSpec64 = solver::ProblemSpec<f64>;
pub type SolutionField64 = solver::SolutionField<f64>;
pub type Source64 = solver::Source<f64>;
pub type ModeOde64 = solver::ModeOde<f64>;
pub type EigenSystem64 = spectral::EigenSystem<f64>;
pub type SampledFunction64 = sampled::SampledFunction<f64>;
pub type TimeWarp64 = frac_ops::TimeWarp<f64>;
pub type MittagLeffler64 = special::MittagLeffler<f64>;
pub type FDMesh64 = oracle_fd::FDMesh<f64>;
