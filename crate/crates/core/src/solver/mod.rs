//! Spectral solution of the mixed problem: Fourier coefficients, the mode
//! relaxation equations, series assembly and its verification.

mod assemble;
mod mode;
mod norms;
mod residual;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::frac_ops::TimeWarp;
use crate::sampled::SampledFunction;
use crate::scalar::{lit, Real};
use crate::spectral::bc_requirements;

pub use assemble::{
    assemble, assemble_with, auto_modes, energy_integral, fourier_coeff, fourier_coeffs,
    tail_estimate, AssembleOptions, FieldDiagnostics, SolutionField, TailReport,
};
pub use mode::{
    default_time_grid, mode_solution, mode_solution_alt, mode_solution_with, KernelForm, ModeOde,
    ModeTrajectory, CONVOLUTION_NODES,
};
pub use norms::{solution_norms, NormReport};
pub use residual::{
    residual_strong, residual_strong_with, residual_weak, residual_weak_with, ResidualKind,
    ResidualOptions, ResidualReport, TestFunction,
};

/// Solution notion available for a degeneracy exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `0 < β < 1`
    Classical,
    /// `1 < β < 2`
    Weak,
}

impl Regime {
    pub fn from_beta<T: Real>(beta: T) -> Result<Self> {
        bc_requirements(beta)?;
        Ok(if beta < T::one() {
            Regime::Classical
        } else {
            Regime::Weak
        })
    }
}

/// One term `time(t) · space(x)` of a separable source.
#[derive(Debug, Clone)]
pub struct SeparableTerm<T> {
    pub time: SampledFunction<T>,
    pub space: SampledFunction<T>,
}

type FieldFn<T> = Arc<dyn Fn(T, T) -> T + Send + Sync>;

/// Source term `f(x, t)`.
#[derive(Clone)]
pub enum Source<T> {
    /// Sum of separable terms; the empty sum is `f ≡ 0`.
    Separable(Vec<SeparableTerm<T>>),
    /// General `f(x, t)`. Mode coefficients are computed at `samples + 1`
    /// graded time nodes and interpolated monotonically in between.
    Field { f: FieldFn<T>, samples: usize },
}

impl<T: Real> Source<T> {
    pub fn zero() -> Self {
        Source::Separable(Vec::new())
    }

    pub fn separable(time: SampledFunction<T>, space: SampledFunction<T>) -> Self {
        Source::Separable(vec![SeparableTerm { time, space }])
    }

    /// Time-independent source `f(x, t) = g(x)`.
    pub fn stationary(space: SampledFunction<T>) -> Self {
        Self::separable(SampledFunction::constant(T::one()), space)
    }

    pub fn field<F>(f: F, samples: usize) -> Self
    where
        F: Fn(T, T) -> T + Send + Sync + 'static,
    {
        Source::Field {
            f: Arc::new(f),
            samples: samples.max(2),
        }
    }

    /// `f(x, t)`.
    pub fn eval(&self, x: T, t: T) -> T {
        match self {
            Source::Separable(terms) => terms.iter().map(|s| s.time.eval(t) * s.space.eval(x)).sum(),
            Source::Field { f, .. } => f(x, t),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Source::Separable(terms) => terms
                .iter()
                .all(|s| s.time.is_zero() || s.space.is_zero()),
            Source::Field { .. } => false,
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Source<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Separable(terms) => f.debug_tuple("Separable").field(terms).finish(),
            Source::Field { samples, .. } => {
                f.debug_struct("Field").field("samples", samples).finish()
            }
        }
    }
}

/// Data of the mixed problem on `(0, 1) × (a, T]`.
#[derive(Debug, Clone)]
pub struct ProblemSpec<T> {
    alpha: T,
    theta: T,
    beta: T,
    a: T,
    t_final: T,
    phi: SampledFunction<T>,
    f: Source<T>,
}

impl<T: Real> ProblemSpec<T> {
    /// Validates every parameter domain. `alpha = 1` is admitted as the
    /// classical limit.
    pub fn new(
        alpha: T,
        theta: T,
        beta: T,
        a: T,
        t_final: T,
        phi: SampledFunction<T>,
        f: Source<T>,
    ) -> Result<Self> {
        if !(alpha > T::zero() && alpha <= T::one()) {
            return Err(domain(format!("alpha must lie in (0,1] (got {alpha})")));
        }
        TimeWarp::new(theta, a)?;
        bc_requirements(beta)?;
        if !t_final.is_finite() || t_final <= a {
            return Err(domain(format!(
                "final time T = {t_final} must be finite and exceed a = {a}"
            )));
        }
        Ok(Self {
            alpha,
            theta,
            beta,
            a,
            t_final,
            phi,
            f,
        })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn t_final(&self) -> T {
        self.t_final
    }

    pub fn phi(&self) -> &SampledFunction<T> {
        &self.phi
    }

    pub fn source(&self) -> &Source<T> {
        &self.f
    }

    pub fn warp(&self) -> TimeWarp<T> {
        TimeWarp::new(self.theta, self.a).expect("validated at construction")
    }

    pub fn regime(&self) -> Regime {
        Regime::from_beta(self.beta).expect("validated at construction")
    }

    /// Boundary values of `phi` that contradict the boundary conditions.
    ///
    /// Incompatible data are admitted; the weak regime needs only `φ ∈ L²`.
    pub fn compatibility_warnings(&self) -> Vec<String> {
        let tol = lit::<T>(1e-8);
        let mut out = Vec::new();
        let right = self.phi.eval(T::one());
        if right.abs() > tol {
            out.push(format!("phi(1) = {right:e} violates u(1,t) = 0"));
        }
        if self.regime() == Regime::Classical {
            let left = self.phi.eval(T::zero());
            if left.abs() > tol {
                out.push(format!("phi(0) = {left:e} violates u(0,t) = 0"));
            }
        }
        out
    }
}
