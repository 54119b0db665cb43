use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::frac_ops::{default_grading, TimeWarp};
use crate::quad::TanhSinh;
use crate::sampled::SampledFunction;
use crate::scalar::{from_usize, lit, Compensated, Real};
use crate::special::{rgamma, MittagLeffler};

/// Nodes of the per-time product-integration grid for non-constant sources.
pub const CONVOLUTION_NODES: usize = 256;

/// Relaxation equation of a single mode,
/// `hb_caputo(u_k) + λ_k u_k = f_k(t)`, `u_k(a) = φ_k`.
#[derive(Debug, Clone)]
pub struct ModeOde<T> {
    pub k: usize,
    pub lambda: T,
    pub phi_k: T,
    pub f_k: SampledFunction<T>,
    pub alpha: T,
    pub warp: TimeWarp<T>,
}

impl<T: Real> ModeOde<T> {
    pub fn new(
        k: usize,
        lambda: T,
        phi_k: T,
        f_k: SampledFunction<T>,
        alpha: T,
        warp: TimeWarp<T>,
    ) -> Result<Self> {
        if !(lambda > T::zero() && lambda.is_finite()) {
            return Err(domain(format!("mode {k}: eigenvalue must be positive (got {lambda})")));
        }
        if !(alpha > T::zero() && alpha <= T::one()) {
            return Err(domain(format!("alpha must lie in (0,1] (got {alpha})")));
        }
        if !phi_k.is_finite() {
            return Err(domain(format!("mode {k}: non-finite initial coefficient")));
        }
        Ok(Self {
            k,
            lambda,
            phi_k,
            f_k,
            alpha,
            warp,
        })
    }

    /// `λ* = -λ_k / p^α`.
    pub fn lambda_star(&self) -> T {
        -self.lambda / self.warp.p().powf(self.alpha)
    }
}

/// Which closed form supplies the relaxation kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelForm {
    /// `E_{α,1}` relaxation and the `E_{α,α}` convolution kernel.
    MittagLeffler,
    /// Power-law leading term plus an `E_{α,2α}` correction.
    TwoTerm,
}

/// Values `u_k(t_j)` of one mode.
#[derive(Debug, Clone, Serialize)]
pub struct ModeTrajectory<T> {
    pub k: usize,
    pub t_grid: Vec<T>,
    pub values: Vec<T>,
    pub form: KernelForm,
}

/// Time grid graded toward `a`: `s_j = S (j/n)^r` mapped back to `t`.
pub fn default_time_grid<T: Real>(warp: &TimeWarp<T>, t_final: T, alpha: T, n: usize) -> Vec<T> {
    let s_max = warp.forward_unchecked(t_final);
    let r = default_grading(alpha);
    let nf = from_usize::<T>(n.max(1));
    (0..=n.max(1))
        .map(|j| {
            if j == 0 {
                warp.a()
            } else if j == n.max(1) {
                t_final
            } else {
                warp.inverse_unchecked(s_max * (from_usize::<T>(j) / nf).powf(r))
            }
        })
        .collect()
}

/// Kernel integrals of the mode equation for one `(α, λ*)`.
///
/// `K0(w) = ∫_0^w k`, `K1(w) = ∫_0^w K0` for the convolution kernel
/// `k(w) = w^{α-1} E_{α,α}(λ* w^α) / p^α`.
struct Kernels<T> {
    form: KernelForm,
    alpha: T,
    lambda_star: T,
    inv_p_alpha: T,
    relax: MittagLeffler<T>,
    first: MittagLeffler<T>,
    second: MittagLeffler<T>,
    rg1: T,
    rg2: T,
}

impl<T: Real> Kernels<T> {
    fn new(ode: &ModeOde<T>, form: KernelForm) -> Result<Self> {
        let alpha = ode.alpha;
        let one = T::one();
        let (b0, b1, b2) = match form {
            KernelForm::MittagLeffler => (one, alpha + one, alpha + lit(2.0)),
            KernelForm::TwoTerm => (alpha + one, alpha + alpha + one, alpha + alpha + lit(2.0)),
        };
        Ok(Self {
            form,
            alpha,
            lambda_star: ode.lambda_star(),
            inv_p_alpha: ode.warp.p().powf(alpha).recip(),
            relax: MittagLeffler::new(alpha, b0)?,
            first: MittagLeffler::new(alpha, b1)?,
            second: MittagLeffler::new(alpha, b2)?,
            rg1: rgamma(alpha + one),
            rg2: rgamma(alpha + lit(2.0)),
        })
    }

    /// `E_{α,1}(λ* s^α)`.
    fn relaxation(&self, s: T) -> Result<T> {
        let z = self.lambda_star * s.powf(self.alpha);
        match self.form {
            KernelForm::MittagLeffler => self.relax.eval(z),
            // E_{α,1}(z) = 1 + z/Γ(α+1) + z² E_{α,2α+1}(z)
            KernelForm::TwoTerm => Ok(T::one() + z * self.rg1 + z * z * self.first.eval(z)?),
        }
    }

    fn moments(&self, w: T) -> Result<(T, T)> {
        if w <= T::zero() {
            return Ok((T::zero(), T::zero()));
        }
        let wa = w.powf(self.alpha);
        let z = self.lambda_star * wa;
        let (k0, k1) = match self.form {
            KernelForm::MittagLeffler => (wa * self.first.eval(z)?, wa * w * self.second.eval(z)?),
            KernelForm::TwoTerm => {
                let l2 = self.lambda_star * wa * wa;
                (
                    wa * self.rg1 + l2 * self.first.eval(z)?,
                    w * (wa * self.rg2 + l2 * self.second.eval(z)?),
                )
            }
        };
        Ok((k0 * self.inv_p_alpha, k1 * self.inv_p_alpha))
    }
}

fn check_finite<T: Real>(k: usize, t: T, v: T) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Numeric(format!("mode {k}: non-finite value at t = {t}")))
    }
}

/// Grading of the product-integration grid toward the start of the source.
fn source_grading<T: Real>(warp: &TimeWarp<T>) -> T {
    let two = lit::<T>(2.0);
    if warp.a() == T::zero() {
        two.max(two * warp.p())
    } else {
        two
    }
}

/// Evaluates `u_k(t)` with the requested kernel form.
struct ModeEvaluator<'a, T> {
    ode: &'a ModeOde<T>,
    kernels: Kernels<T>,
    nodes: usize,
    grading: T,
}

impl<'a, T: Real> ModeEvaluator<'a, T> {
    fn new(ode: &'a ModeOde<T>, form: KernelForm, nodes: usize) -> Result<Self> {
        Ok(Self {
            ode,
            kernels: Kernels::new(ode, form)?,
            nodes: nodes.max(1),
            grading: source_grading(&ode.warp),
        })
    }

    fn value(&self, t: T) -> Result<T> {
        let warp = &self.ode.warp;
        if t < warp.a() {
            return Err(domain(format!("mode time t = {t} precedes a = {}", warp.a())));
        }
        let s = warp.forward_unchecked(t);
        if s == T::zero() {
            return Ok(self.ode.phi_k);
        }
        let homogeneous = self.ode.phi_k * self.kernels.relaxation(s)?;
        let forced = match self.ode.f_k.as_const() {
            Some(c) if c == T::zero() => T::zero(),
            Some(c) => c * self.kernels.moments(s)?.0,
            None => self.convolution(s)?,
        };
        check_finite(self.ode.k, t, homogeneous + forced)
    }

    /// Product integration of the kernel against the piecewise-linear
    /// interpolant of `f_k` on `σ_j = s (j/N)^r`.
    fn convolution(&self, s: T) -> Result<T> {
        let warp = &self.ode.warp;
        let n = self.nodes;
        let nf = from_usize::<T>(n);
        let r = self.grading;
        let mut sigma = Vec::with_capacity(n + 1);
        let mut dist = Vec::with_capacity(n + 1);
        for j in 0..=n {
            if j == 0 {
                sigma.push(T::zero());
                dist.push(s);
            } else if j == n {
                sigma.push(s);
                dist.push(T::zero());
            } else {
                let ln = r * (from_usize::<T>(j) / nf).ln();
                sigma.push(s * ln.exp());
                dist.push(-s * ln.exp_m1());
            }
        }
        let g: Vec<T> = sigma
            .iter()
            .map(|&sg| self.ode.f_k.eval(warp.inverse_unchecked(sg)))
            .collect();
        let moments = dist
            .iter()
            .map(|&w| self.kernels.moments(w))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = Compensated::new();
        for j in 0..n {
            let h = sigma[j + 1] - sigma[j];
            let (k0a, k1a) = moments[j];
            let (k0b, k1b) = moments[j + 1];
            let weight_const = k0a - k0b;
            let weight_slope = (k1a - k1b - h * k0b) / h;
            acc.add(g[j] * weight_const + (g[j + 1] - g[j]) * weight_slope);
        }
        Ok(acc.value())
    }
}

/// `u_k` on `t_grid` from the Mittag-Leffler form of the solution,
/// `φ_k E_{α,1}(λ* s^α) + p^{-α} ∫ (S-σ)^{α-1} E_{α,α}(λ*(S-σ)^α) f_k dσ`.
pub fn mode_solution<T: Real>(ode: &ModeOde<T>, t_grid: &[T]) -> Result<ModeTrajectory<T>> {
    mode_solution_with(ode, t_grid, KernelForm::MittagLeffler, CONVOLUTION_NODES)
}

/// `u_k` on `t_grid` from the two-term form: the power kernel
/// `w^{α-1}/Γ(α)` plus the `λ* w^{2α-1} E_{α,2α}` correction.
pub fn mode_solution_alt<T: Real>(ode: &ModeOde<T>, t_grid: &[T]) -> Result<ModeTrajectory<T>> {
    mode_solution_with(ode, t_grid, KernelForm::TwoTerm, CONVOLUTION_NODES)
}

pub fn mode_solution_with<T: Real>(
    ode: &ModeOde<T>,
    t_grid: &[T],
    form: KernelForm,
    nodes: usize,
) -> Result<ModeTrajectory<T>> {
    let eval = ModeEvaluator::new(ode, form, nodes)?;
    let values = t_grid
        .par_iter()
        .map(|&t| eval.value(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModeTrajectory {
        k: ode.k,
        t_grid: t_grid.to_vec(),
        values,
        form,
    })
}

/// Independent pointwise evaluator used by the residual checks: the forced
/// part is integrated by tanh-sinh in `y = (w/S)^α`, which turns the
/// weakly singular kernel into the smooth `S^α/α · E_{α,α}(λ* S^α y)`.
pub(crate) struct PointEvaluator<'a, T> {
    ode: &'a ModeOde<T>,
    relax: MittagLeffler<T>,
    step: MittagLeffler<T>,
    kernel: MittagLeffler<T>,
    quad: TanhSinh<T>,
}

impl<'a, T: Real> PointEvaluator<'a, T> {
    pub(crate) fn new(ode: &'a ModeOde<T>) -> Result<Self> {
        let alpha = ode.alpha;
        Ok(Self {
            ode,
            relax: MittagLeffler::new(alpha, T::one())?,
            step: MittagLeffler::new(alpha, alpha + T::one())?,
            kernel: MittagLeffler::new(alpha, alpha)?,
            quad: TanhSinh::new(lit(1e-11)),
        })
    }

    pub(crate) fn value(&self, t: T) -> Result<T> {
        let ode = self.ode;
        let s = ode.warp.forward_unchecked(t);
        if s <= T::zero() {
            return Ok(ode.phi_k);
        }
        let alpha = ode.alpha;
        let sa = s.powf(alpha);
        let ls = ode.lambda_star();
        let scale = ode.warp.p().powf(alpha).recip();
        let mut v = ode.phi_k * self.relax.eval(ls * sa)?;
        match ode.f_k.as_const() {
            Some(c) if c == T::zero() => {}
            Some(c) => v += c * scale * sa * self.step.eval(ls * sa)?,
            None => {
                let inv_alpha = alpha.recip();
                let mut failure = None;
                let integral = self.quad.integrate(T::zero(), T::one(), |y, _, dr| {
                    // σ = S (1 - y^{1/α}), accurate next to y = 1
                    let frac = if dr < lit(0.5) {
                        -((-dr).ln_1p() * inv_alpha).exp_m1()
                    } else {
                        T::one() - y.powf(inv_alpha)
                    };
                    let tau = ode.warp.inverse_unchecked(s * frac);
                    match self.kernel.eval(ls * sa * y) {
                        Ok(e) => e * ode.f_k.eval(tau),
                        Err(err) => {
                            failure = Some(err);
                            T::zero()
                        }
                    }
                })?;
                if let Some(err) = failure {
                    return Err(err);
                }
                v += scale * sa / alpha * integral;
            }
        }
        check_finite(ode.k, t, v)
    }
}
