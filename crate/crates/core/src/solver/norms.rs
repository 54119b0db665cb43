use serde::Serialize;

use crate::quad::GaussLegendre;
use crate::scalar::{from_usize, pow0, Real};

use super::assemble::{ModeSamples, SolutionField};
use super::ProblemSpec;

/// Series that bound the solution in terms of the data.
#[derive(Debug, Clone, Serialize)]
pub struct DataSeries {
    /// `Σ λ_k² φ_k²`
    pub phi: f64,
    /// `Σ λ_k² f_k(a)²`
    pub source_at_start: f64,
    /// `Σ λ_k² ∫_a^T f_k'(t)² dt`
    pub source_derivative: f64,
}

/// Norms of a field over its time grid.
#[derive(Debug, Clone, Serialize)]
pub struct NormReport {
    /// `max_t ‖u(·,t)‖_{L²}`
    pub sup_l2: f64,
    /// `max_t (∫ x^β u_x²)^{1/2}`
    pub sup_energy: f64,
    /// `max_t (‖u‖² + ∫ x^β u_x²)^{1/2}`
    pub sup_weighted_sobolev: f64,
    pub data_series: Option<DataSeries>,
    /// `max_t |Σ λ_k² u_k² - ‖Au‖²| / Σ λ_k² u_k²` with `Au` assembled and
    /// integrated on the eigen mesh.
    pub parseval_gap: Option<f64>,
    pub finite: bool,
}

fn f<T: Real>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Norms of `field`: from the mode coefficients for spectral fields,
/// from the piecewise-linear profile on the x-grid otherwise.
pub fn solution_norms<T: Real>(field: &SolutionField<T>, spec: &ProblemSpec<T>) -> NormReport {
    let (mut l2, mut energy, mut w12) = (0.0f64, 0.0f64, 0.0f64);
    let mut report = match &field.spectral {
        Some(data) => {
            let sys = &data.system;
            let samples = ModeSamples::new(sys, field.modes);
            let mut gap = 0.0f64;
            for j in 0..field.t_grid.len() {
                let (mut a, mut b, mut c) = (T::zero(), T::zero(), T::zero());
                let mut au = vec![T::zero(); samples.points.len()];
                for (k, tr) in data.trajectories.iter().enumerate() {
                    let u = tr.values[j];
                    let l = sys.lambda(k);
                    a += u * u;
                    b += l * u * u;
                    c += l * l * u * u;
                    for (acc, &v) in au.iter_mut().zip(&samples.modes[k]) {
                        *acc += l * u * v;
                    }
                }
                l2 = l2.max(f(a.sqrt()));
                energy = energy.max(f(b.sqrt()));
                w12 = w12.max(f((a + b).sqrt()));
                if c > T::zero() {
                    gap = gap.max(f((c - samples.norm_sq(&au)).abs() / c));
                }
            }
            NormReport {
                sup_l2: l2,
                sup_energy: energy,
                sup_weighted_sobolev: w12,
                data_series: Some(data_series(data, spec)),
                parseval_gap: Some(gap),
                finite: true,
            }
        }
        None => {
            let x = &field.x_grid;
            let beta = spec.beta();
            let bp1 = beta + T::one();
            for row in &field.values {
                let (mut a, mut b) = (T::zero(), T::zero());
                for i in 0..x.len().saturating_sub(1) {
                    let h = x[i + 1] - x[i];
                    let (u0, u1) = (row[i], row[i + 1]);
                    a += h * (u0 * u0 + u0 * u1 + u1 * u1) / from_usize(3);
                    let slope = (u1 - u0) / h;
                    b += slope * slope * (pow0(x[i + 1], bp1) - pow0(x[i], bp1)) / bp1;
                }
                l2 = l2.max(f(a.sqrt()));
                energy = energy.max(f(b.sqrt()));
                w12 = w12.max(f((a + b).sqrt()));
            }
            NormReport {
                sup_l2: l2,
                sup_energy: energy,
                sup_weighted_sobolev: w12,
                data_series: None,
                parseval_gap: None,
                finite: true,
            }
        }
    };
    let series_finite = report
        .data_series
        .as_ref()
        .is_none_or(|s| s.phi.is_finite() && s.source_at_start.is_finite() && s.source_derivative.is_finite());
    report.finite = report.sup_l2.is_finite()
        && report.sup_energy.is_finite()
        && report.sup_weighted_sobolev.is_finite()
        && series_finite;
    report
}

fn data_series<T: Real>(data: &super::assemble::SpectralData<T>, spec: &ProblemSpec<T>) -> DataSeries {
    let rule = GaussLegendre::<T>::new(8);
    let panels = 32;
    let (a, t_end) = (spec.a(), spec.t_final());
    let (mut phi, mut start, mut deriv) = (T::zero(), T::zero(), T::zero());
    for (k, ode) in data.odes.iter().enumerate() {
        let l2 = data.system.lambda(k).powi(2);
        phi += l2 * ode.phi_k * ode.phi_k;
        let f0 = ode.f_k.eval(a);
        start += l2 * f0 * f0;
        if ode.f_k.as_const().is_none() {
            let mut acc = T::zero();
            for p in 0..panels {
                let lo = a + (t_end - a) * from_usize::<T>(p) / from_usize(panels);
                let hi = a + (t_end - a) * from_usize::<T>(p + 1) / from_usize(panels);
                acc += rule.integrate(lo, hi, |t| ode.f_k.derivative(t).powi(2));
            }
            deriv += l2 * acc;
        }
    }
    DataSeries {
        phi: f(phi),
        source_at_start: f(start),
        source_derivative: f(deriv),
    }
}
