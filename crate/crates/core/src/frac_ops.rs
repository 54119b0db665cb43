//! Erdélyi-Kober integral, the regularized hyper-Bessel derivative and the L1
//! discretization of the Caputo derivative it reduces to in warped time.

use crate::error::{domain, Result};
use crate::quad::TanhSinh;
use crate::sampled::SampledFunction;
use crate::scalar::{from_usize, lit, Compensated, Real};
use crate::special::{gamma_eval, rgamma};

/// Nodes of the graded warped-time grid used by [`hb_caputo`].
pub const DEFAULT_L1_NODES: usize = 2048;

/// The substitution `s = t^p - a^p`, `p = 1 - θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeWarp<T> {
    theta: T,
    a: T,
    p: T,
    a_p: T,
}

impl<T: Real> TimeWarp<T> {
    pub fn new(theta: T, a: T) -> Result<Self> {
        if !theta.is_finite() || theta >= T::one() {
            return Err(domain(format!("theta must be finite and < 1 (got {theta})")));
        }
        if !a.is_finite() || a < T::zero() {
            return Err(domain(format!("starting point a must be >= 0 (got {a})")));
        }
        let p = T::one() - theta;
        Ok(Self {
            theta,
            a,
            p,
            a_p: warp_pow(a, p),
        })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn forward(&self, t: T) -> Result<T> {
        if !t.is_finite() || t < self.a {
            return Err(domain(format!("warp: t = {t} lies before a = {}", self.a)));
        }
        Ok(self.forward_unchecked(t))
    }

    pub fn inverse(&self, s: T) -> Result<T> {
        if !s.is_finite() || s < T::zero() {
            return Err(domain(format!("warp: s = {s} is negative")));
        }
        Ok(self.inverse_unchecked(s))
    }

    pub(crate) fn forward_unchecked(&self, t: T) -> T {
        if t <= self.a {
            return T::zero();
        }
        if self.a == T::zero() {
            return t.powf(self.p);
        }
        // a^p ((t/a)^p - 1) without cancellation for t close to a
        self.a_p * (self.p * ((t - self.a) / self.a).ln_1p()).exp_m1()
    }

    pub(crate) fn inverse_unchecked(&self, s: T) -> T {
        if s <= T::zero() {
            return self.a;
        }
        if self.a == T::zero() {
            return s.powf(self.p.recip());
        }
        self.a + self.a * ((s / self.a_p).ln_1p() / self.p).exp_m1()
    }
}

fn warp_pow<T: Real>(a: T, p: T) -> T {
    if a == T::zero() {
        T::zero()
    } else {
        a.powf(p)
    }
}

/// `s = t^p - a^p`.
pub fn warp_forward<T: Real>(warp: &TimeWarp<T>, t: T) -> Result<T> {
    warp.forward(t)
}

/// `t = (s + a^p)^{1/p}`.
pub fn warp_inverse<T: Real>(warp: &TimeWarp<T>, s: T) -> Result<T> {
    warp.inverse(s)
}

/// Parameters of the Erdélyi-Kober integral `I^{γ,δ}_{β; a+}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EKParams<T> {
    pub gamma_ek: T,
    pub delta: T,
    pub beta_ek: T,
    pub a: T,
}

/// `t^{-β(γ+δ)}/Γ(δ) ∫_a^t (t^β - τ^β)^{δ-1} τ^{βγ} f(τ) d(τ^β)`.
///
/// Integrated in `u = τ^β` by tanh-sinh quadrature, which absorbs the
/// algebraic endpoint singularities.
pub fn ek_integral<T: Real>(f: &SampledFunction<T>, params: EKParams<T>, t: T) -> Result<T> {
    let EKParams {
        gamma_ek,
        delta,
        beta_ek,
        a,
    } = params;
    if !(delta > T::zero()) {
        return Err(domain(format!("ek_integral: delta must be > 0 (got {delta})")));
    }
    if !(beta_ek > T::zero()) {
        return Err(domain(format!("ek_integral: beta must be > 0 (got {beta_ek})")));
    }
    if !(a >= T::zero()) || !t.is_finite() || t < a {
        return Err(domain(format!("ek_integral: need 0 <= a <= t (a = {a}, t = {t})")));
    }
    if t == a {
        return Ok(T::zero());
    }
    let lo = warp_pow(a, beta_ek);
    let hi = t.powf(beta_ek);
    let inv_beta = beta_ek.recip();
    let dm1 = delta - T::one();
    let integral = TanhSinh::default().integrate(lo, hi, |u, _, right| {
        if u <= T::zero() && gamma_ek < T::zero() {
            return T::zero();
        }
        let w = if dm1 == T::zero() { T::one() } else { right.powf(dm1) };
        let g = if gamma_ek == T::zero() { T::one() } else { u.powf(gamma_ek) };
        w * g * f.eval(u.powf(inv_beta))
    })?;
    let scale = t.powf(-beta_ek * (gamma_ek + delta)) * rgamma(delta);
    Ok(scale * integral)
}

/// `s_j = s_max (j/n)^r`, `j = 0..=n`.
pub fn graded_grid<T: Real>(s_max: T, n: usize, r: T) -> Vec<T> {
    let nf = from_usize::<T>(n);
    (0..=n)
        .map(|j| {
            if j == n {
                s_max
            } else {
                s_max * (from_usize::<T>(j) / nf).powf(r)
            }
        })
        .collect()
}

/// Grading exponent used for Caputo kernels of order `alpha`.
pub fn default_grading<T: Real>(alpha: T) -> T {
    (lit::<T>(2.0) / alpha).min(lit(8.0))
}

/// `(a)^q - (a - h)^q` for `0 < h <= a`, accurate when `h << a`.
#[inline]
pub(crate) fn pow_diff<T: Real>(a: T, h: T, q: T) -> T {
    if h >= a {
        return crate::scalar::pow0(a, q);
    }
    if q == T::zero() {
        return T::zero();
    }
    -a.powf(q) * (q * (-h / a).ln_1p()).exp_m1()
}

/// L1 coefficients `w_j` with `D^α g(s_n) ≈ Σ_{j<n} w_j (g_{j+1} - g_j)`.
///
/// `alpha = 1` is admitted and gives the backward difference.
pub(crate) fn l1_coefficients<T: Real>(grid: &[T], n: usize, alpha: T) -> Vec<T> {
    let q = T::one() - alpha;
    let c = rgamma(lit::<T>(2.0) - alpha);
    let sn = grid[n];
    (0..n)
        .map(|j| {
            let h = grid[j + 1] - grid[j];
            c * pow_diff(sn - grid[j], h, q) / h
        })
        .collect()
}

/// L1 approximation of the classical Caputo derivative of order `alpha` at
/// every node of `s_grid`, which must start at 0.
pub fn caputo_l1<T: Real>(g: &SampledFunction<T>, alpha: T, s_grid: &[T]) -> Result<Vec<T>> {
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(domain(format!("caputo_l1: alpha must lie in (0,1) (got {alpha})")));
    }
    check_grid(s_grid)?;
    let values: Vec<T> = s_grid.iter().map(|&s| g.eval(s)).collect();
    Ok(caputo_l1_values(&values, alpha, s_grid))
}

pub(crate) fn caputo_l1_values<T: Real>(values: &[T], alpha: T, grid: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); grid.len()];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let w = l1_coefficients(grid, n, alpha);
        let mut acc = Compensated::new();
        for (j, wj) in w.iter().enumerate() {
            acc.add(*wj * (values[j + 1] - values[j]));
        }
        *slot = acc.value();
    }
    out
}

fn check_grid<T: Real>(grid: &[T]) -> Result<()> {
    if grid.first().copied() != Some(T::zero()) {
        return Err(domain("caputo_l1: the grid must start at 0"));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) || grid.iter().any(|v| !v.is_finite()) {
        return Err(domain("caputo_l1: grid nodes must be finite and strictly increasing"));
    }
    Ok(())
}

/// Regularized hyper-Bessel derivative of order `alpha` at `t`, evaluated as
/// `p^α` times the Caputo derivative of `f(t(s))` in warped time.
pub fn hb_caputo<T: Real>(
    f: &SampledFunction<T>,
    alpha: T,
    warp: &TimeWarp<T>,
    t: T,
) -> Result<T> {
    hb_caputo_with(f, alpha, warp, t, DEFAULT_L1_NODES)
}

/// [`hb_caputo`] with an explicit number of grid cells.
pub fn hb_caputo_with<T: Real>(
    f: &SampledFunction<T>,
    alpha: T,
    warp: &TimeWarp<T>,
    t: T,
    nodes: usize,
) -> Result<T> {
    hb_caputo_fn(|x| f.eval(x), |x| f.derivative(x), alpha, warp, t, nodes)
}

pub(crate) fn hb_caputo_fn<T: Real, F, D>(
    f: F,
    df: D,
    alpha: T,
    warp: &TimeWarp<T>,
    t: T,
    nodes: usize,
) -> Result<T>
where
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    check_order(alpha)?;
    if !t.is_finite() || t <= warp.a() {
        return Err(domain(format!(
            "hb_caputo: t = {t} must exceed the starting point a = {}",
            warp.a()
        )));
    }
    if nodes == 0 {
        return Err(domain("hb_caputo: at least one grid cell is needed"));
    }
    if alpha == T::one() {
        return Ok(t.powf(warp.theta()) * df(t));
    }
    let s_max = warp.forward_unchecked(t);
    let r = default_grading(alpha);
    let nf = from_usize::<T>(nodes);
    let q = T::one() - alpha;
    let mut acc = Compensated::new();
    let mut prev = f(warp.a());
    let mut s_prev = T::zero();
    for j in 1..=nodes {
        let frac = from_usize::<T>(j) / nf;
        let s = if j == nodes { s_max } else { s_max * frac.powf(r) };
        let value = f(if j == nodes { t } else { warp.inverse_unchecked(s) });
        let h = s - s_prev;
        // distance from the left end of this cell to s_max
        let dist = s_max * -(r * (from_usize::<T>(j - 1) / nf).ln()).exp_m1();
        let dist = if j == 1 { s_max } else { dist };
        acc.add((value - prev) / h * pow_diff(dist, h, q));
        prev = value;
        s_prev = s;
    }
    Ok(warp.p().powf(alpha) * rgamma(lit::<T>(2.0) - alpha) * acc.value())
}

/// [`hb_caputo_fn`] at several times from one graded grid on `[0, s(max t)]`.
///
/// Each target uses the grid nodes below its own `s` plus that endpoint, so
/// `f` is evaluated `nodes + ts.len()` times in total.
pub(crate) fn hb_caputo_fn_many<T: Real, F, D>(
    f: F,
    df: D,
    alpha: T,
    warp: &TimeWarp<T>,
    ts: &[T],
    nodes: usize,
) -> Result<Vec<T>>
where
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    check_order(alpha)?;
    if let Some(&t) = ts.iter().find(|&&t| !t.is_finite() || t <= warp.a()) {
        return Err(domain(format!(
            "hb_caputo: t = {t} must exceed the starting point a = {}",
            warp.a()
        )));
    }
    if nodes == 0 {
        return Err(domain("hb_caputo: at least one grid cell is needed"));
    }
    if alpha == T::one() {
        return Ok(ts.iter().map(|&t| t.powf(warp.theta()) * df(t)).collect());
    }
    let Some(t_max) = ts.iter().copied().reduce(T::max) else {
        return Ok(Vec::new());
    };
    let s_max = warp.forward_unchecked(t_max);
    let grid = graded_grid(s_max, nodes, default_grading(alpha));
    let values: Vec<T> = grid
        .iter()
        .enumerate()
        .map(|(j, &s)| match j {
            0 => f(warp.a()),
            j if j == nodes => f(t_max),
            _ => f(warp.inverse_unchecked(s)),
        })
        .collect();
    let q = T::one() - alpha;
    let scale = warp.p().powf(alpha) * rgamma(lit::<T>(2.0) - alpha);
    let tiny = T::epsilon() * lit(16.0);
    Ok(ts
        .iter()
        .map(|&t| {
            let (s_end, v_end) = if t == t_max {
                (s_max, values[nodes])
            } else {
                (warp.forward_unchecked(t), f(t))
            };
            // interior nodes kept clear of the endpoint
            let last = grid.partition_point(|&s| s < s_end * (T::one() - tiny)).max(1) - 1;
            let mut acc = Compensated::new();
            for j in 0..last {
                let h = grid[j + 1] - grid[j];
                acc.add((values[j + 1] - values[j]) / h * pow_diff(s_end - grid[j], h, q));
            }
            let h = s_end - grid[last];
            acc.add((v_end - values[last]) / h * pow_diff(h, h, q));
            scale * acc.value()
        })
        .collect())
}

pub(crate) fn check_order<T: Real>(alpha: T) -> Result<()> {
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(domain(format!("order alpha must lie in (0,1] (got {alpha})")));
    }
    Ok(())
}

/// Caputo derivative of `s^k` of order `alpha`: `Γ(k+1)/Γ(k+1-α) s^{k-α}`.
pub fn caputo_monomial<T: Real>(k: T, alpha: T, s: T) -> Result<T> {
    Ok(gamma_eval(k + T::one())? * rgamma(k + T::one() - alpha) * s.powf(k - alpha))
}
