use std::cell::RefCell;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac_ops::{hb_caputo_fn_many, DEFAULT_L1_NODES};
use crate::sampled::SampledFunction;
use crate::scalar::{from_usize, lit, Real};

use super::assemble::{fourier_coeffs, integrate_on_mesh, SolutionField, SpectralData};
use super::mode::{ModeOde, PointEvaluator};
use super::{ProblemSpec, Regime, Source};

/// Sampling of the residual checks.
#[derive(Debug, Clone, Copy)]
pub struct ResidualOptions {
    /// Equispaced times in `(a, t_end]`.
    pub sample_times: usize,
    /// Cells of the L1 grid applied to each mode.
    pub l1_nodes: usize,
}

impl Default for ResidualOptions {
    fn default() -> Self {
        Self {
            sample_times: 8,
            l1_nodes: DEFAULT_L1_NODES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualKind {
    Strong,
    Weak,
}

/// Residual of the equation at the sample times.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub kind: ResidualKind,
    pub sample_times: Vec<f64>,
    /// Largest `L²(0,1)` norm over the sample times (strong), or largest
    /// absolute violation over tests and times (weak).
    pub l2: f64,
    /// Largest interior value on the field's x-grid (strong only).
    pub sup: f64,
    /// Largest residual relative to the size of the terms it balances.
    pub relative: f64,
    /// Relative violation per test function (weak only).
    pub per_test: Vec<f64>,
    /// Largest difference between the stored trajectories and the
    /// independent pointwise evaluation used here.
    pub trajectory_mismatch: f64,
}

/// Test function of the weak formulation.
#[derive(Debug, Clone)]
pub enum TestFunction<T> {
    /// The eigenfunction `v_j`.
    Mode(usize),
    /// A function vanishing at `x = 1` with finite energy.
    Function(SampledFunction<T>),
}

/// Per sample time and mode: `(hb_caputo(u_k), u_k, f_k)`.
struct ModeTerms<T> {
    times: Vec<T>,
    /// `terms[k][m]`
    terms: Vec<Vec<(T, T, T)>>,
    mismatch: f64,
}

fn spectral<T: Real>(field: &SolutionField<T>) -> Result<&SpectralData<T>> {
    field
        .spectral
        .as_ref()
        .ok_or_else(|| Error::Contract("residuals need a spectrally assembled field".into()))
}

fn sample_times<T: Real>(field: &SolutionField<T>, spec: &ProblemSpec<T>, n: usize) -> Result<Vec<T>> {
    let a = spec.a();
    let end = *field.t_grid.last().unwrap();
    if end <= a {
        return Err(Error::Contract("the field has no time node after a".into()));
    }
    let n = n.max(1);
    Ok((1..=n)
        .map(|m| a + (end - a) * from_usize::<T>(m) / from_usize(n))
        .collect())
}

fn hb_of_mode<T: Real>(
    eval: &PointEvaluator<'_, T>,
    ode: &ModeOde<T>,
    times: &[T],
    nodes: usize,
) -> Result<Vec<T>> {
    let failure = RefCell::new(None);
    let value = |tau: T| match eval.value(tau) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            T::zero()
        }
    };
    // used only for alpha = 1, where u_k is smooth
    let derivative = |tau: T| {
        let h = (tau - ode.warp.a()) * lit(1e-3);
        let eight = lit::<T>(8.0);
        (eight * (value(tau + h) - value(tau - h)) - (value(tau + h + h) - value(tau - h - h)))
            / (lit::<T>(12.0) * h)
    };
    let hb = hb_caputo_fn_many(value, derivative, ode.alpha, &ode.warp, times, nodes)?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(hb),
    }
}

fn mode_terms<T: Real>(
    field: &SolutionField<T>,
    spec: &ProblemSpec<T>,
    opts: ResidualOptions,
) -> Result<ModeTerms<T>> {
    let data = spectral(field)?;
    let times = sample_times(field, spec, opts.sample_times)?;
    let per_mode = data
        .odes
        .par_iter()
        .zip(&data.trajectories)
        .map(|(ode, tr)| {
            let eval = PointEvaluator::new(ode)?;
            let hb = hb_of_mode(&eval, ode, &times, opts.l1_nodes)?;
            let terms = times
                .iter()
                .zip(hb)
                .map(|(&t, hb)| Ok((hb, eval.value(t)?, ode.f_k.eval(t))))
                .collect::<Result<Vec<_>>>()?;
            let mut mismatch = 0.0f64;
            let n = tr.t_grid.len();
            for j in [n / 2, n - 1] {
                let d = (eval.value(tr.t_grid[j])? - tr.values[j]).abs();
                mismatch = mismatch.max(d.to_f64().unwrap_or(f64::NAN));
            }
            Ok((terms, mismatch))
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatch = per_mode.iter().fold(0.0f64, |m, p| m.max(p.1));
    Ok(ModeTerms {
        times,
        terms: per_mode.into_iter().map(|p| p.0).collect(),
        mismatch,
    })
}

fn ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Strong residual `hb_caputo(u) - (x^β u_x)_x - f` of a classical-regime
/// field, formed mode by mode through `(x^β v_k')' = -λ_k v_k`.
pub fn residual_strong<T: Real>(field: &SolutionField<T>, spec: &ProblemSpec<T>) -> Result<ResidualReport> {
    residual_strong_with(field, spec, ResidualOptions::default())
}

pub fn residual_strong_with<T: Real>(
    field: &SolutionField<T>,
    spec: &ProblemSpec<T>,
    opts: ResidualOptions,
) -> Result<ResidualReport> {
    if field.regime != Regime::Classical {
        return Err(Error::Contract(
            "the strong residual is defined only for 0 < β < 1; use the weak residual".into(),
        ));
    }
    let data = spectral(field)?;
    let mt = mode_terms(field, spec, opts)?;
    let sys = &data.system;
    let interior: Vec<T> = field
        .x_grid
        .iter()
        .copied()
        .filter(|&x| x > T::zero() && x < T::one())
        .collect();
    let basis: Vec<Vec<T>> = (0..field.modes)
        .map(|k| interior.iter().map(|&x| sys.value(k, x)).collect())
        .collect();
    let (mut l2, mut sup, mut relative) = (0.0f64, 0.0f64, 0.0f64);
    for m in 0..mt.times.len() {
        let mut r = Vec::with_capacity(field.modes);
        let (mut au, mut ff) = (T::zero(), T::zero());
        for k in 0..field.modes {
            let (hb, u, f) = mt.terms[k][m];
            let lu = sys.lambda(k) * u;
            r.push(hb + lu - f);
            au += lu * lu;
            ff += f * f;
        }
        let norm: T = r.iter().map(|&v| v * v).sum::<T>().sqrt();
        let scale = au.sqrt() + ff.sqrt();
        let pointwise = (0..interior.len())
            .map(|i| (0..field.modes).map(|k| r[k] * basis[k][i]).sum::<T>().abs())
            .fold(T::zero(), |a, b| a.max(b));
        let n = norm.to_f64().unwrap_or(f64::NAN);
        l2 = l2.max(n);
        sup = sup.max(pointwise.to_f64().unwrap_or(f64::NAN));
        relative = relative.max(ratio(n, scale.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(ResidualReport {
        kind: ResidualKind::Strong,
        sample_times: mt.times.iter().map(|t| t.to_f64().unwrap_or(f64::NAN)).collect(),
        l2,
        sup,
        relative,
        per_test: Vec::new(),
        trajectory_mismatch: mt.mismatch,
    })
}

/// Weak-form violation `hb_caputo((u,ω)) + (x^β u_x, ω_x) - (f,ω)` of a
/// weak-regime field for each test function.
pub fn residual_weak<T: Real>(
    field: &SolutionField<T>,
    spec: &ProblemSpec<T>,
    tests: &[TestFunction<T>],
) -> Result<ResidualReport> {
    residual_weak_with(field, spec, tests, ResidualOptions::default())
}

pub fn residual_weak_with<T: Real>(
    field: &SolutionField<T>,
    spec: &ProblemSpec<T>,
    tests: &[TestFunction<T>],
    opts: ResidualOptions,
) -> Result<ResidualReport> {
    if field.regime != Regime::Weak {
        return Err(Error::Contract(
            "the weak residual is defined only for 1 < β < 2; use the strong residual".into(),
        ));
    }
    let data = spectral(field)?;
    let sys = &data.system;
    let k_count = field.modes;
    // expansion coefficients of every test function, validated before the costly part
    let expansions = tests
        .iter()
        .map(|test| match test {
            TestFunction::Mode(j) if *j < k_count => {
                let mut e = vec![T::zero(); k_count];
                e[*j] = T::one();
                Ok(e)
            }
            TestFunction::Mode(j) => Err(Error::Contract(format!(
                "test mode {j} lies outside the {k_count} assembled modes"
            ))),
            TestFunction::Function(w) => Ok(fourier_coeffs(w, sys)),
        })
        .collect::<Result<Vec<_>>>()?;
    let mt = mode_terms(field, spec, opts)?;
    let mut per_test = Vec::with_capacity(tests.len());
    let mut worst = 0.0f64;
    for (test, coeffs) in tests.iter().zip(&expansions) {
        let mut rel = 0.0f64;
        for (m, &t) in mt.times.iter().enumerate() {
            let mut pairing = T::zero();
            let mut scale = T::zero();
            for (k, &c) in coeffs.iter().enumerate().take(k_count) {
                let (hb, u, _) = mt.terms[k][m];
                let lu = sys.lambda(k) * u;
                pairing += c * (hb + lu);
                scale += c.abs() * (hb.abs() + lu.abs());
            }
            let source = match test {
                TestFunction::Mode(j) => mt.terms[*j][m].2,
                TestFunction::Function(w) => source_pairing(spec.source(), w, t, sys),
            };
            let violation = (pairing - source).abs().to_f64().unwrap_or(f64::NAN);
            worst = worst.max(violation);
            let s = (scale + source.abs()).to_f64().unwrap_or(f64::NAN);
            rel = rel.max(ratio(violation, s));
        }
        per_test.push(rel);
    }
    Ok(ResidualReport {
        kind: ResidualKind::Weak,
        sample_times: mt.times.iter().map(|t| t.to_f64().unwrap_or(f64::NAN)).collect(),
        l2: worst,
        sup: 0.0,
        relative: per_test.iter().fold(0.0f64, |a, &b| a.max(b)),
        per_test,
        trajectory_mismatch: mt.mismatch,
    })
}

/// `∫_0^1 f(x, t) ω(x) dx`.
fn source_pairing<T: Real>(
    source: &Source<T>,
    w: &SampledFunction<T>,
    t: T,
    sys: &crate::spectral::EigenSystem<T>,
) -> T {
    match source {
        Source::Separable(terms) => terms
            .iter()
            .map(|term| {
                let c = term.time.eval(t);
                if c == T::zero() {
                    T::zero()
                } else {
                    c * integrate_on_mesh(sys, |x| term.space.eval(x) * w.eval(x))
                }
            })
            .sum(),
        Source::Field { f, .. } => integrate_on_mesh(sys, |x| f(x, t) * w.eval(x)),
    }
}
