use serde::Serialize;

use crate::quad::{GaussLegendre, TanhSinh};
use crate::sampled::SampledFunction;
use crate::scalar::{lit, pow0, Real};

use super::EigenSystem;

/// Gram matrices of an eigen system.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityReport {
    /// `∫ v_i v_j dx`
    pub gram_l2: Vec<Vec<f64>>,
    /// `∫ x^β v_i' v_j' dx`
    pub gram_weighted: Vec<Vec<f64>>,
    pub max_offdiag_l2: f64,
    pub max_offdiag_weighted: f64,
    /// `max_i |Gram_L2[i][i] - 1|`
    pub max_diag_l2_error: f64,
    /// `max_i |Gram_w[i][i] - λ_i| / λ_i`
    pub max_rel_weighted_diag_error: f64,
}

/// Gram matrices in `L²` and in the weighted energy product.
///
/// Piecewise-linear systems are integrated exactly cell by cell; otherwise a
/// `gauss_points`-point Gauss rule runs on every cell of the system's
/// quadrature mesh, with tanh-sinh on the cell touching the origin.
pub fn orthogonality_report<T: Real>(sys: &EigenSystem<T>, gauss_points: usize) -> OrthogonalityReport {
    let k = sys.count();
    let mut l2 = vec![vec![0.0; k]; k];
    let mut w = vec![vec![0.0; k]; k];
    if let Some(pairs) = exact_piecewise_linear(sys) {
        (l2, w) = pairs;
    } else {
        let mesh = sys.quadrature_mesh();
        let rule = GaussLegendre::<T>::new(gauss_points.max(2));
        let beta = sys.beta();
        let mut vals = vec![T::zero(); k];
        let mut ders = vec![T::zero(); k];
        let mut acc_l2 = vec![vec![T::zero(); k]; k];
        let mut acc_w = vec![vec![T::zero(); k]; k];
        for c in 1..mesh.len() - 1 {
            for (x, wt) in rule.mapped(mesh[c], mesh[c + 1]) {
                let xb = x.powf(beta);
                for i in 0..k {
                    vals[i] = sys.value(i, x);
                    ders[i] = sys.derivative(i, x);
                }
                for i in 0..k {
                    for j in i..k {
                        acc_l2[i][j] += wt * vals[i] * vals[j];
                        acc_w[i][j] += wt * xb * ders[i] * ders[j];
                    }
                }
            }
        }
        let ts = TanhSinh::<T>::default();
        let (a, b) = (mesh[0], mesh[1]);
        for i in 0..k {
            for j in i..k {
                let first_l2 = ts
                    .integrate(a, b, |x, _, _| sys.value(i, x) * sys.value(j, x))
                    .unwrap_or(T::nan());
                let first_w = ts
                    .integrate(a, b, |x, _, _| {
                        if x <= T::zero() {
                            T::zero()
                        } else {
                            sys.flux(i, x) * sys.flux(j, x) / x.powf(beta)
                        }
                    })
                    .unwrap_or(T::nan());
                let vl = (acc_l2[i][j] + first_l2).to_f64().unwrap_or(f64::NAN);
                let vw = (acc_w[i][j] + first_w).to_f64().unwrap_or(f64::NAN);
                l2[i][j] = vl;
                l2[j][i] = vl;
                w[i][j] = vw;
                w[j][i] = vw;
            }
        }
    }
    summarize(sys, l2, w)
}

type GramPair = (Vec<Vec<f64>>, Vec<Vec<f64>>);

fn exact_piecewise_linear<T: Real>(sys: &EigenSystem<T>) -> Option<GramPair> {
    if !sys.is_piecewise_linear() {
        return None;
    }
    let k = sys.count();
    let mesh = sys.quadrature_mesh();
    let beta = sys.beta();
    let bp1 = beta + T::one();
    let nodal: Vec<&[T]> = (0..k).map(|i| sys.nodal_values(i).unwrap()).collect();
    let mut l2 = vec![vec![T::zero(); k]; k];
    let mut w = vec![vec![T::zero(); k]; k];
    for c in 0..mesh.len() - 1 {
        let h = mesh[c + 1] - mesh[c];
        let moment = (pow0(mesh[c + 1], bp1) - pow0(mesh[c], bp1)) / bp1;
        for i in 0..k {
            let (a0, a1) = (nodal[i][c], nodal[i][c + 1]);
            let si = (a1 - a0) / h;
            for j in i..k {
                let (b0, b1) = (nodal[j][c], nodal[j][c + 1]);
                let sj = (b1 - b0) / h;
                l2[i][j] += h / lit(6.0)
                    * (lit::<T>(2.0) * a0 * b0 + a0 * b1 + a1 * b0 + lit::<T>(2.0) * a1 * b1);
                w[i][j] += si * sj * moment;
            }
        }
    }
    let to = |m: Vec<Vec<T>>| -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in i..k {
                let v = m[i][j].to_f64().unwrap_or(f64::NAN);
                out[i][j] = v;
                out[j][i] = v;
            }
        }
        out
    };
    Some((to(l2), to(w)))
}

fn summarize<T: Real>(sys: &EigenSystem<T>, l2: Vec<Vec<f64>>, w: Vec<Vec<f64>>) -> OrthogonalityReport {
    let k = sys.count();
    let (mut off_l2, mut off_w, mut diag_l2, mut diag_w) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..k {
        let lambda = sys.lambda(i).to_f64().unwrap_or(f64::NAN);
        for j in 0..k {
            if i == j {
                diag_l2 = diag_l2.max((l2[i][i] - 1.0).abs());
                diag_w = diag_w.max((w[i][i] - lambda).abs() / lambda);
            } else {
                off_l2 = off_l2.max(l2[i][j].abs());
                // scale-free comparison for the energy product
                off_w = off_w.max(w[i][j].abs() / (lambda * sys.lambda(j).to_f64().unwrap()).sqrt());
            }
        }
    }
    OrthogonalityReport {
        gram_l2: l2,
        gram_weighted: w,
        max_offdiag_l2: off_l2,
        max_offdiag_weighted: off_w,
        max_diag_l2_error: diag_l2,
        max_rel_weighted_diag_error: diag_w,
    }
}

/// Result of probing `lim_{x→0} x^β v'(x)`.
#[derive(Debug, Clone, Serialize)]
pub struct FluxLimitReport {
    pub limit: f64,
    pub vanishes: bool,
    pub converged: bool,
    /// `(x_j, x_j^β v'(x_j))` on the geometric probe sequence.
    pub samples: Vec<(f64, f64)>,
}

/// Tolerance under which the extrapolated flux counts as zero.
pub const FLUX_TOLERANCE: f64 = 1e-6;

/// Flux limit of a sampled function, derivatives taken from its
/// representation.
pub fn flux_limit_check<T: Real>(v: &SampledFunction<T>, beta: T) -> FluxLimitReport {
    flux_limit_check_fn(|x| pow0(x, beta) * v.derivative(x), lit(1e-12))
}

/// Flux limit from a flux evaluator, probing down to `floor`.
///
/// Samples `x_j = 0.1 · 4^{-j}` and extrapolates the last three values with
/// Aitken's Δ².
pub fn flux_limit_check_fn<T: Real, F: Fn(T) -> T>(flux: F, floor: T) -> FluxLimitReport {
    let mut samples = Vec::new();
    let mut x = lit::<T>(0.1);
    while x >= floor || samples.len() < 3 {
        let f = flux(x).to_f64().unwrap_or(f64::NAN);
        samples.push((x.to_f64().unwrap_or(f64::NAN), f));
        x *= lit(0.25);
        if samples.len() > 200 {
            break;
        }
    }
    let n = samples.len();
    let (f0, f1, f2) = (samples[n - 3].1, samples[n - 2].1, samples[n - 1].1);
    let d1 = f2 - f1;
    let d0 = f1 - f0;
    let denom = d1 - d0;
    let limit = if denom.abs() > f64::EPSILON * (f0.abs() + f1.abs() + f2.abs()) && denom != 0.0 {
        f2 - d1 * d1 / denom
    } else {
        f2
    };
    let converged = limit.is_finite() && (limit - f2).abs() <= 1e-3 * (1.0 + f2.abs());
    FluxLimitReport {
        limit,
        vanishes: limit.is_finite() && limit.abs() <= FLUX_TOLERANCE,
        converged,
        samples,
    }
}
