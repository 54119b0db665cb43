use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac_ops::default_grading;
use crate::quad::GaussLegendre;
use crate::sampled::SampledFunction;
use crate::scalar::{from_usize, pow0, Real};
use crate::spectral::EigenSystem;

use super::mode::{mode_solution_with, KernelForm, ModeOde, ModeTrajectory, CONVOLUTION_NODES};
use super::norms::NormReport;
use super::residual::ResidualReport;
use super::{ProblemSpec, Regime, Source};

const GAUSS_POINTS: usize = 5;

fn to_f64<T: Real>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Values of every mode at the Gauss nodes of every mesh cell, with weights.
pub(crate) struct ModeSamples<T> {
    pub(crate) points: Vec<T>,
    pub(crate) weights: Vec<T>,
    /// `modes[k][q]`
    pub(crate) modes: Vec<Vec<T>>,
}

impl<T: Real> ModeSamples<T> {
    pub(crate) fn new(sys: &EigenSystem<T>, count: usize) -> Self {
        let rule = GaussLegendre::<T>::new(GAUSS_POINTS);
        let mesh = sys.quadrature_mesh();
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let mut cells = Vec::new();
        for c in 0..mesh.len() - 1 {
            for (x, w) in rule.mapped(mesh[c], mesh[c + 1]) {
                points.push(x);
                weights.push(w);
                cells.push(c);
            }
        }
        let modes = (0..count)
            .into_par_iter()
            .map(|k| match sys.nodal_values(k) {
                Some(nodal) => points
                    .iter()
                    .zip(&cells)
                    .map(|(&x, &c)| {
                        let (x0, x1) = (mesh[c], mesh[c + 1]);
                        nodal[c] + (x - x0) / (x1 - x0) * (nodal[c + 1] - nodal[c])
                    })
                    .collect(),
                None => points.iter().map(|&x| sys.value(k, x)).collect(),
            })
            .collect();
        Self {
            points,
            weights,
            modes,
        }
    }

    pub(crate) fn project(&self, values: &[T]) -> Vec<T> {
        self.modes
            .iter()
            .map(|m| {
                m.iter()
                    .zip(values)
                    .zip(&self.weights)
                    .map(|((&v, &g), &w)| v * g * w)
                    .sum()
            })
            .collect()
    }

    pub(crate) fn norm_sq(&self, values: &[T]) -> T {
        values.iter().zip(&self.weights).map(|(&g, &w)| g * g * w).sum()
    }
}

/// `∫_0^1 g v_k dx` for every mode of `sys`.
pub fn fourier_coeffs<T: Real>(g: &SampledFunction<T>, sys: &EigenSystem<T>) -> Vec<T> {
    let samples = ModeSamples::new(sys, sys.count());
    let values: Vec<T> = samples.points.iter().map(|&x| g.eval(x)).collect();
    samples.project(&values)
}

/// `∫_0^1 g v_k dx`, Gauss quadrature on the cells of the eigen mesh.
pub fn fourier_coeff<T: Real>(g: &SampledFunction<T>, sys: &EigenSystem<T>, k: usize) -> Result<T> {
    if k >= sys.count() {
        return Err(Error::Contract(format!(
            "mode {k} requested from a system of {} modes",
            sys.count()
        )));
    }
    let single = sys.truncated(k + 1)?;
    Ok(fourier_coeffs(g, &single)[k])
}

/// `∫_0^1 g dx` by Gauss quadrature on the cells of the eigen mesh.
pub(crate) fn integrate_on_mesh<T: Real, F: FnMut(T) -> T>(sys: &EigenSystem<T>, mut g: F) -> T {
    let rule = GaussLegendre::<T>::new(GAUSS_POINTS);
    let mesh = sys.quadrature_mesh();
    let mut acc = T::zero();
    for c in 0..mesh.len() - 1 {
        for (x, w) in rule.mapped(mesh[c], mesh[c + 1]) {
            acc += w * g(x);
        }
    }
    acc
}

/// `∫_0^1 x^β g'(x)² dx` on the cells of the eigen mesh.
pub fn energy_integral<T: Real>(g: &SampledFunction<T>, sys: &EigenSystem<T>) -> T {
    let beta = sys.beta();
    integrate_on_mesh(sys, |x| {
        let d = g.derivative(x);
        pow0(x, beta) * d * d
    })
}

/// Partial sums of `Σ λ_n^{m+1} g_n²` against their upper bound.
#[derive(Debug, Clone, Serialize)]
pub struct TailReport {
    pub m: u32,
    /// Cumulative sums over `n <= K`, one entry per `K`.
    pub partial_sums: Vec<f64>,
    pub weighted_rhs: f64,
    /// The partial sums never exceed the bound (up to rounding).
    pub holds: bool,
    /// Bound minus the last partial sum.
    pub slack: f64,
    /// Bound on `(Σ_{n>K} g_n²)^{1/2}` implied by the slack.
    pub l2_tail_bound: f64,
}

/// Checks `Σ_{n<=K} λ_n^{m+1} g_n² <= weighted_rhs` and bounds the tail.
///
/// `weighted_rhs` is `∫ x^β ((A^{m/2} g)')²` for even `m` or `∫ (A^{(m+1)/2} g)²`
/// for odd `m`, supplied by the caller.
pub fn tail_estimate<T: Real>(coeffs: &[T], lambdas: &[T], m: u32, weighted_rhs: T) -> TailReport {
    let mut partial_sums = Vec::with_capacity(coeffs.len());
    let mut acc = 0.0f64;
    for (&g, &l) in coeffs.iter().zip(lambdas) {
        let (g, l) = (to_f64(g), to_f64(l));
        acc += l.powi(m as i32 + 1) * g * g;
        partial_sums.push(acc);
    }
    let rhs = to_f64(weighted_rhs);
    let slack = rhs - acc;
    let tol = 1e-10 * rhs.abs().max(acc) + f64::MIN_POSITIVE;
    let last = lambdas.get(coeffs.len().saturating_sub(1)).map(|&l| to_f64(l)).unwrap_or(1.0);
    let l2_tail_bound = if coeffs.is_empty() {
        rhs.max(0.0).sqrt()
    } else {
        (slack.max(0.0) / last.powi(m as i32 + 1)).sqrt()
    };
    TailReport {
        m,
        partial_sums,
        weighted_rhs: rhs,
        holds: slack >= -tol,
        slack,
        l2_tail_bound,
    }
}

/// Settings of [`assemble_with`].
#[derive(Debug, Clone, Copy)]
pub struct AssembleOptions<T> {
    pub form: KernelForm,
    pub convolution_nodes: usize,
    /// Resolution error when the `L²` truncation tail of `φ` exceeds it.
    pub tolerance: Option<T>,
}

impl<T: Real> Default for AssembleOptions<T> {
    fn default() -> Self {
        Self {
            form: KernelForm::MittagLeffler,
            convolution_nodes: CONVOLUTION_NODES,
            tolerance: None,
        }
    }
}

/// Diagnostics attached to a field.
#[derive(Debug, Clone, Default, Serialize)]
pub struct FieldDiagnostics {
    /// Energy tail check of `φ` (`m = 0`).
    pub tail: Option<TailReport>,
    /// `(‖φ‖² - Σ_{k<=K} φ_k²)^{1/2}`.
    pub phi_l2_tail: Option<f64>,
    pub residual: Option<ResidualReport>,
    pub norms: Option<NormReport>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub(crate) struct SpectralData<T> {
    pub(crate) system: EigenSystem<T>,
    pub(crate) odes: Vec<ModeOde<T>>,
    pub(crate) trajectories: Vec<ModeTrajectory<T>>,
}

/// `u(x_i, t_j)` on a tensor grid.
#[derive(Debug, Clone)]
pub struct SolutionField<T> {
    pub x_grid: Vec<T>,
    pub t_grid: Vec<T>,
    /// `values[j][i] = u(x_i, t_j)`
    pub values: Vec<Vec<T>>,
    /// Number of modes, 0 for grid-based fields.
    pub modes: usize,
    pub regime: Regime,
    pub diagnostics: FieldDiagnostics,
    pub(crate) spectral: Option<SpectralData<T>>,
}

impl<T: Real> SolutionField<T> {
    /// A field known only by its values on a tensor grid.
    pub fn from_grid(x_grid: Vec<T>, t_grid: Vec<T>, values: Vec<Vec<T>>, regime: Regime) -> Self {
        Self {
            x_grid,
            t_grid,
            values,
            modes: 0,
            regime,
            diagnostics: FieldDiagnostics::default(),
            spectral: None,
        }
    }

    pub fn is_spectral(&self) -> bool {
        self.spectral.is_some()
    }

    /// Mode trajectories of a spectral field.
    pub fn trajectories(&self) -> Option<&[ModeTrajectory<T>]> {
        self.spectral.as_ref().map(|s| s.trajectories.as_slice())
    }

    pub fn mode_odes(&self) -> Option<&[ModeOde<T>]> {
        self.spectral.as_ref().map(|s| s.odes.as_slice())
    }

    pub fn system(&self) -> Option<&EigenSystem<T>> {
        self.spectral.as_ref().map(|s| &s.system)
    }

    /// `u(·, t)` restricted to the x-grid, linear in `t` between time nodes.
    pub fn profile_at(&self, t: T) -> Result<Vec<T>> {
        let (first, last) = (self.t_grid[0], *self.t_grid.last().unwrap());
        if t < first || t > last {
            return Err(Error::Contract(format!(
                "time {t} lies outside the field's range [{first}, {last}]"
            )));
        }
        let j = self.t_grid.partition_point(|&v| v <= t).clamp(1, self.t_grid.len().max(2) - 1);
        if self.t_grid.len() == 1 {
            return Ok(self.values[0].clone());
        }
        let (t0, t1) = (self.t_grid[j - 1], self.t_grid[j]);
        let w = if t1 > t0 { (t - t0) / (t1 - t0) } else { T::zero() };
        Ok(self.values[j - 1]
            .iter()
            .zip(&self.values[j])
            .map(|(&a, &b)| a + w * (b - a))
            .collect())
    }
}

/// Mode coefficients `f_k(t)` of the source.
fn mode_sources<T: Real>(
    spec: &ProblemSpec<T>,
    samples: &ModeSamples<T>,
    count: usize,
) -> Result<Vec<SampledFunction<T>>> {
    match spec.source() {
        Source::Separable(terms) => {
            let coeffs: Vec<Vec<T>> = terms
                .iter()
                .map(|term| {
                    let v: Vec<T> = samples.points.iter().map(|&x| term.space.eval(x)).collect();
                    samples.project(&v)
                })
                .collect();
            Ok((0..count)
                .map(|k| {
                    let c: Vec<T> = coeffs.iter().map(|ck| ck[k]).collect();
                    let consts: Option<Vec<T>> = terms.iter().map(|term| term.time.as_const()).collect();
                    if let Some(consts) = consts {
                        return SampledFunction::constant(
                            consts.iter().zip(&c).map(|(&a, &b)| a * b).sum(),
                        );
                    }
                    let times: Vec<SampledFunction<T>> =
                        terms.iter().map(|term| term.time.clone()).collect();
                    let times_d = times.clone();
                    let cd = c.clone();
                    SampledFunction::custom_with_derivative(
                        move |t| times.iter().zip(&c).map(|(g, &ck)| ck * g.eval(t)).sum(),
                        move |t| times_d.iter().zip(&cd).map(|(g, &ck)| ck * g.derivative(t)).sum(),
                    )
                })
                .collect())
        }
        Source::Field { f, samples: n } => {
            let warp = spec.warp();
            let s_max = warp.forward_unchecked(spec.t_final());
            let r = default_grading(spec.alpha()).min(T::one() + T::one());
            let nf = from_usize::<T>(*n);
            let times: Vec<T> = (0..=*n)
                .map(|j| {
                    if j == *n {
                        spec.t_final()
                    } else {
                        warp.inverse_unchecked(s_max * (from_usize::<T>(j) / nf).powf(r))
                    }
                })
                .collect();
            let per_time: Vec<Vec<T>> = times
                .par_iter()
                .map(|&t| {
                    let v: Vec<T> = samples.points.iter().map(|&x| f(x, t)).collect();
                    samples.project(&v)
                })
                .collect();
            (0..count)
                .map(|k| SampledFunction::table(times.clone(), per_time.iter().map(|c| c[k]).collect()))
                .collect()
        }
    }
}

fn check_grids<T: Real>(spec: &ProblemSpec<T>, x_grid: &[T], t_grid: &[T]) -> Result<()> {
    let sorted = |g: &[T]| g.windows(2).all(|w| w[1] > w[0]);
    if x_grid.is_empty() || !sorted(x_grid) || x_grid[0] < T::zero() || *x_grid.last().unwrap() > T::one() {
        return Err(Error::Contract("x-grid must be increasing inside [0, 1]".into()));
    }
    if t_grid.is_empty() || !sorted(t_grid) || t_grid[0] < spec.a() {
        return Err(Error::Contract("t-grid must be increasing and start at or after a".into()));
    }
    Ok(())
}

/// Truncated series `Σ_{k<K} u_k(t) v_k(x)` with default options.
pub fn assemble<T: Real>(
    spec: &ProblemSpec<T>,
    sys: &EigenSystem<T>,
    k: usize,
    x_grid: &[T],
    t_grid: &[T],
) -> Result<SolutionField<T>> {
    assemble_with(spec, sys, k, x_grid, t_grid, AssembleOptions::default())
}

pub fn assemble_with<T: Real>(
    spec: &ProblemSpec<T>,
    sys: &EigenSystem<T>,
    k: usize,
    x_grid: &[T],
    t_grid: &[T],
    opts: AssembleOptions<T>,
) -> Result<SolutionField<T>> {
    if k == 0 || k > sys.count() {
        return Err(Error::Contract(format!(
            "mode count {k} must lie in 1..={}",
            sys.count()
        )));
    }
    if sys.beta() != spec.beta() {
        return Err(Error::Contract(format!(
            "eigen system built for beta = {} but the problem has beta = {}",
            sys.beta(),
            spec.beta()
        )));
    }
    check_grids(spec, x_grid, t_grid)?;
    let system = sys.truncated(k)?;
    let samples = ModeSamples::new(&system, k);
    let phi_values: Vec<T> = samples.points.iter().map(|&x| spec.phi().eval(x)).collect();
    let phi_k = samples.project(&phi_values);
    let phi_norm_sq = samples.norm_sq(&phi_values);
    let sources = mode_sources(spec, &samples, k)?;
    let warp = spec.warp();
    let odes = phi_k
        .iter()
        .zip(sources)
        .enumerate()
        .map(|(i, (&c, f))| ModeOde::new(i, system.lambda(i), c, f, spec.alpha(), warp))
        .collect::<Result<Vec<_>>>()?;
    let trajectories = odes
        .par_iter()
        .map(|ode| mode_solution_with(ode, t_grid, opts.form, opts.convolution_nodes))
        .collect::<Result<Vec<_>>>()?;

    let basis: Vec<Vec<T>> = (0..k)
        .map(|m| {
            x_grid
                .iter()
                .map(|&x| if x >= T::one() { T::zero() } else { system.value(m, x) })
                .collect()
        })
        .collect();
    let values = (0..t_grid.len())
        .map(|j| {
            (0..x_grid.len())
                .map(|i| (0..k).map(|m| trajectories[m].values[j] * basis[m][i]).sum())
                .collect()
        })
        .collect();

    let captured: T = phi_k.iter().map(|&c| c * c).sum();
    let phi_l2_tail = to_f64((phi_norm_sq - captured).max(T::zero()).sqrt());
    if let Some(tol) = opts.tolerance {
        if phi_l2_tail > to_f64(tol) {
            return Err(Error::Resolution(format!(
                "L² truncation tail of phi is {phi_l2_tail:e} at K = {k}, above {tol:e}"
            )));
        }
    }
    let tail = tail_estimate(&phi_k, system.lambdas(), 0, energy_integral(spec.phi(), &system));
    let diagnostics = FieldDiagnostics {
        tail: Some(tail),
        phi_l2_tail: Some(phi_l2_tail),
        residual: None,
        norms: None,
        warnings: spec.compatibility_warnings(),
    };
    Ok(SolutionField {
        x_grid: x_grid.to_vec(),
        t_grid: t_grid.to_vec(),
        values,
        modes: k,
        regime: spec.regime(),
        diagnostics,
        spectral: Some(SpectralData {
            system,
            odes,
            trajectories,
        }),
    })
}

/// Smallest `K` for which the bound
/// `‖u(t) - P_K u(t)‖ <= ‖φ - P_K φ‖ + max_t ‖f(t) - P_K f(t)‖ / λ_{K+1}`
/// is below `tol`; the source is sampled at five times. The mode response
/// to a source has kernel mass `(1 - E_α(-λ s^α)) / λ <= 1/λ`.
///
/// The largest admissible `K` is `sys.count() - 1`, since `λ_{K+1}` is needed.
pub fn auto_modes<T: Real>(spec: &ProblemSpec<T>, sys: &EigenSystem<T>, tol: T) -> Result<usize> {
    let samples = ModeSamples::new(sys, sys.count());
    let tails = |v: &[T]| -> Vec<T> {
        let coeffs = samples.project(v);
        let mut rest = samples.norm_sq(v);
        coeffs
            .iter()
            .map(|&c| {
                rest -= c * c;
                rest.max(T::zero()).sqrt()
            })
            .collect()
    };
    let phi: Vec<T> = samples.points.iter().map(|&x| spec.phi().eval(x)).collect();
    let phi_tail = tails(&phi);
    let mut source_tail = vec![T::zero(); sys.count()];
    if !spec.source().is_zero() {
        for j in 0..=4 {
            let t = spec.a() + (spec.t_final() - spec.a()) * from_usize::<T>(j) / from_usize(4);
            let v: Vec<T> = samples.points.iter().map(|&x| spec.source().eval(x, t)).collect();
            for (acc, tail) in source_tail.iter_mut().zip(tails(&v)) {
                *acc = acc.max(tail);
            }
        }
    }
    for k in 1..sys.count() {
        let bound = phi_tail[k - 1] + source_tail[k - 1] / sys.lambda(k);
        if bound <= tol {
            return Ok(k);
        }
    }
    Err(Error::Resolution(format!(
        "truncation bound stays above {tol:e} with {} modes",
        sys.count() - 1
    )))
}
