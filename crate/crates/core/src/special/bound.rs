use crate::error::{domain, Result};
use crate::scalar::{lit, Real};

use super::mittag_leffler::MittagLeffler;

/// Empirical constant of the decay bound `|E_{α,β}(z)| <= M / (1 + |z|)`
/// on the negative real ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLBoundFit<T> {
    pub m: T,
    /// Sector opening `μ ∈ (πα/2, min(π, πα))` the bound is stated for; the
    /// midpoint is reported.
    pub sector_mu: T,
    pub sample_count: usize,
}

/// Smallest `M` with `|E_{α,β}(-x)|·(1+x) <= M` over the given `x >= 0`.
pub fn ml_bound_fit<T: Real>(alpha: T, beta: T, ray_samples: &[T]) -> Result<MLBoundFit<T>> {
    if !(alpha > T::zero() && alpha < lit(2.0)) {
        return Err(domain(format!(
            "ml_bound_fit: the decay bound is stated for 0 < alpha < 2 (got {alpha})"
        )));
    }
    if ray_samples.is_empty() {
        return Err(domain("ml_bound_fit: no samples"));
    }
    let ml = MittagLeffler::new(alpha, beta)?;
    let mut m = T::zero();
    for &x in ray_samples {
        if !(x >= T::zero()) || !x.is_finite() {
            return Err(domain(format!("ml_bound_fit: sample {x} is not on the ray")));
        }
        let v = ml.eval(-x)?.abs() * (T::one() + x);
        m = m.max(v);
    }
    if !(m > T::zero()) {
        // E vanishes on every sample; any positive constant bounds it
        m = T::min_positive_value();
    }
    let lo = T::PI() * alpha * lit(0.5);
    let hi = T::PI().min(T::PI() * alpha);
    Ok(MLBoundFit {
        m,
        sector_mu: (lo + hi) * lit(0.5),
        sample_count: ray_samples.len(),
    })
}
