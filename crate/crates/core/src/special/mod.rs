//! Gamma, Mittag-Leffler and Bessel functions on the real line.

mod bessel;
mod bound;
mod gamma;
mod mittag_leffler;

pub use bessel::{bessel_j, bessel_j_zero};
pub use bound::{ml_bound_fit, MLBoundFit};
pub use gamma::{gamma_eval, ln_gamma_signed, rgamma};
pub use mittag_leffler::{ml_eval, MLArgs, MittagLeffler};
