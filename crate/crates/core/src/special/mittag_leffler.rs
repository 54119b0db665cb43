//! Two-parameter Mittag-Leffler function on the real line.
//!
//! Three evaluation regimes are used:
//!
//! * power series `Σ z^k / Γ(αk+β)` for `z > 0`, and for `z < 0` while the
//!   alternating series loses fewer than about three digits
//!   (`|z|^{1/α} <= 6`, or always when `α >= 2`);
//! * for `α = 1` and `z < 0`, the Kummer-transformed series
//!   `E_{1,β}(-x) = Σ_k e^{-x} x^k/k! · 1/(Γ(β-1)(k+β-1))`, a Poisson average with
//!   no cancellation;
//! * for `0 < α < 2`, `α ≠ 1` and large negative `z`, the Hankel contour
//!   collapsed onto the branch cut,
//!   `E_{α,β}(-x) = (1/π)∫_0^∞ e^{-r} r^{α-β} (r^α sin πβ - x sin π(α-β)) / (r^{2α} + 2x r^α cos πα + x²) dr`,
//!   plus the residues `(2/α) Re(s^{1-β} e^s)`, `s = x^{1/α} e^{iπ/α}`, when `α > 1`.
//!   The integral needs `β < 1 + α`; larger `β` is reached through the
//!   recurrence `E_{α,β+α}(z) = (E_{α,β}(z) - 1/Γ(β)) / z`.

use crate::error::{domain, Error, Result};
use crate::scalar::{from_usize, lit, Compensated, Real};

use super::gamma::{cos_pi, ln_gamma_signed, rgamma, sin_pi};

const SERIES_TABLE: usize = 500;
const SERIES_MAX_TERMS: usize = 200_000;
/// Alternating series is trusted while `|z|^{1/α}` stays below this.
const SERIES_SWITCH: f64 = 6.0;
/// Beyond this `|z|^{1/α}` the alternating series for `α >= 2` is refused.
const SERIES_LIMIT_HIGH_ORDER: f64 = 30.0;
const HANKEL_STEP: f64 = 1.0 / 24.0;
const HANKEL_MIN_STEP: f64 = 1.0 / 1024.0;

/// Arguments of a single Mittag-Leffler evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLArgs<T> {
    pub alpha: T,
    pub beta: T,
    pub z: T,
}

impl<T: Real> MLArgs<T> {
    pub fn new(alpha: T, beta: T, z: T) -> Self {
        Self { alpha, beta, z }
    }
}

/// E_{α,β}(z) for real `z`.
pub fn ml_eval<T: Real>(args: MLArgs<T>) -> Result<T> {
    MittagLeffler::new(args.alpha, args.beta)?.eval(args.z)
}

/// Mittag-Leffler evaluator with the `(α, β)`-dependent tables precomputed.
///
/// Repeated evaluation with fixed parameters (the solver calls it on every
/// quadrature node) avoids recomputing `1/Γ(αk+β)` and the contour nodes.
#[derive(Debug, Clone)]
pub struct MittagLeffler<T> {
    alpha: T,
    beta: T,
    coeffs: Vec<T>,
    hankel: Option<HankelRule<T>>,
}

#[derive(Debug, Clone)]
struct HankelRule<T> {
    /// β lowered by `shifts` multiples of α so that β < 1 + α/2 ... 1 + α.
    beta: T,
    shifts: usize,
    weights: Vec<T>,
    rho: Vec<T>,
    sin_b: T,
    sin_ab: T,
    cos_a: T,
}

impl<T: Real> MittagLeffler<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(domain("mittag-leffler: non-finite parameter"));
        }
        if alpha <= T::zero() {
            return Err(domain(format!("mittag-leffler: alpha must be > 0 (got {alpha})")));
        }
        let coeffs = (0..SERIES_TABLE)
            .map(|k| rgamma(alpha * from_usize::<T>(k) + beta))
            .collect();
        let hankel = if alpha < lit(2.0) && alpha != T::one() {
            Some(HankelRule::new(alpha, beta))
        } else {
            None
        };
        Ok(Self {
            alpha,
            beta,
            coeffs,
            hankel,
        })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn eval(&self, z: T) -> Result<T> {
        if !z.is_finite() {
            return Err(domain("mittag-leffler: non-finite argument"));
        }
        if z == T::zero() {
            return Ok(self.coeffs[0]);
        }
        if z > T::zero() {
            return self.series_positive(z);
        }
        let x = -z;
        if self.alpha == T::one() {
            return Ok(poisson_alpha_one(self.beta, x));
        }
        let scale = x.powf(self.alpha.recip());
        match &self.hankel {
            Some(rule) if scale > lit(SERIES_SWITCH) => Ok(rule.eval(self.alpha, x)),
            _ => {
                if self.alpha >= lit(2.0) && scale > lit(SERIES_LIMIT_HIGH_ORDER) {
                    return Err(Error::Numeric(format!(
                        "mittag-leffler: alternating series at z = {z} would lose all digits"
                    )));
                }
                self.series_small(z)
            }
        }
    }

    fn coeff(&self, k: usize) -> T {
        if k < SERIES_TABLE {
            self.coeffs[k]
        } else {
            rgamma(self.alpha * from_usize::<T>(k) + self.beta)
        }
    }

    fn series_small(&self, z: T) -> Result<T> {
        let mut acc = Compensated::new();
        let mut power = T::one();
        let mut quiet = 0;
        for k in 0..SERIES_MAX_TERMS {
            let term = self.coeff(k) * power;
            acc.add(term);
            if k > 2 && term.abs() <= T::epsilon() * lit(0.25) * acc.value().abs() {
                quiet += 1;
                if quiet >= 3 {
                    return Ok(acc.value());
                }
            } else {
                quiet = 0;
            }
            power *= z;
            if !power.is_finite() {
                break;
            }
        }
        Err(Error::Numeric(format!(
            "mittag-leffler: series did not converge at z = {z}"
        )))
    }

    fn series_positive(&self, z: T) -> Result<T> {
        if z <= T::one() {
            return self.series_small(z);
        }
        let lz = z.ln();
        let mut acc = Compensated::new();
        let mut quiet = 0;
        let peak = z.powf(self.alpha.recip());
        for k in 0..SERIES_MAX_TERMS {
            let kf = from_usize::<T>(k);
            let (lg, sign) = ln_gamma_signed(self.alpha * kf + self.beta);
            let term = if lg.is_infinite() {
                T::zero()
            } else {
                sign * (kf * lz - lg).exp()
            };
            acc.add(term);
            let past_peak = self.alpha * kf + self.beta > peak;
            if past_peak && term.abs() <= T::epsilon() * lit(0.25) * acc.value().abs() {
                quiet += 1;
                if quiet >= 3 {
                    let v = acc.value();
                    return if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(Error::Numeric(format!("mittag-leffler: overflow at z = {z}")))
                    };
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::Numeric(format!(
            "mittag-leffler: series did not converge at z = {z}"
        )))
    }
}

impl<T: Real> HankelRule<T> {
    fn new(alpha: T, beta: T) -> Self {
        let mut b = beta;
        let mut shifts = 0;
        let limit = T::one() + alpha * lit(0.5);
        while b > limit {
            b -= alpha;
            shifts += 1;
        }
        // integrand behaves like r^{c-1} near the origin
        let c = alpha - b + T::one();
        let digits = -T::epsilon().ln() + lit(3.0);
        let two_over_pi = T::FRAC_2_PI();
        let t_min = -(two_over_pi * digits / c).asinh();
        let r_max = digits * lit(1.3) + lit(12.0);
        let t_max = (two_over_pi * r_max.ln()).asinh();
        // the integrand has poles at Im ln r = ±π|1-α|/α; the trapezoidal
        // error decays like exp(-2π d/h) with d their distance in t
        let pole = T::PI() * (T::one() - alpha).abs() / alpha;
        let stretch = T::FRAC_PI_2() * t_max.cosh();
        let h = (T::TAU() * pole / stretch / digits)
            .min(lit(HANKEL_STEP))
            .max(lit(HANKEL_MIN_STEP));
        let n = ((t_max - t_min) / h).ceil().to_usize().unwrap_or(0) + 1;
        let mut weights = Vec::with_capacity(n);
        let mut rho = Vec::with_capacity(n);
        for i in 0..n {
            let t = t_min + from_usize::<T>(i) * h;
            let lr = T::FRAC_PI_2() * t.sinh();
            let r = lr.exp();
            if r == T::zero() || !r.is_finite() {
                continue;
            }
            let lw = (h * T::FRAC_PI_2() * t.cosh()).ln() + lr - r + (alpha - b) * lr;
            let w = lw.exp() / T::PI();
            if w == T::zero() {
                continue;
            }
            weights.push(w);
            rho.push((alpha * lr).exp());
        }
        Self {
            beta: b,
            shifts,
            weights,
            rho,
            sin_b: sin_pi(b),
            sin_ab: sin_pi(alpha - b),
            cos_a: cos_pi(alpha),
        }
    }

    /// E_{α,β}(-x) for the original β.
    fn eval(&self, alpha: T, x: T) -> T {
        let mut acc = Compensated::new();
        let two = lit::<T>(2.0);
        for (w, rho) in self.weights.iter().zip(&self.rho) {
            let q = *rho / x;
            let num = q * self.sin_b - self.sin_ab;
            let den = x * (q * q + two * q * self.cos_a + T::one());
            acc.add(*w * num / den);
        }
        let mut value = acc.value();
        if alpha > T::one() {
            let modulus = x.powf(alpha.recip());
            let theta = T::PI() / alpha;
            let phase = (T::one() - self.beta) * theta + modulus * theta.sin();
            value += two / alpha
                * modulus.powf(T::one() - self.beta)
                * (modulus * theta.cos()).exp()
                * phase.cos();
        }
        // climb back to the requested β
        let z = -x;
        let mut b = self.beta;
        for _ in 0..self.shifts {
            value = (value - rgamma(b)) / z;
            b += alpha;
        }
        value
    }
}

/// E_{1,β}(-x) for x > 0.
fn poisson_alpha_one<T: Real>(beta: T, x: T) -> T {
    if beta == T::one() {
        return (-x).exp();
    }
    if beta <= T::one() && beta == beta.round() {
        // 1/Γ(β-1) vanishes here; climb from β+1 with the recurrence
        let up = poisson_alpha_one(beta + T::one(), x);
        return rgamma(beta) - x * up;
    }
    let shift = beta - T::one();
    // Poisson weights x^k/k! relative to the mode, swept outward; dividing by
    // their sum stands in for e^{-x} without its rounding error
    let mode = x.floor();
    let k0 = mode.to_usize().unwrap_or(0);
    let tiny = T::epsilon() * lit(1e-3);
    let mut acc = Compensated::new();
    let mut mass = Compensated::new();
    acc.add((mode + shift).recip());
    mass.add(T::one());
    let mut w = T::one();
    let mut k = k0;
    while w >= tiny {
        k += 1;
        let kf = from_usize::<T>(k);
        w = w * x / kf;
        acc.add(w / (kf + shift));
        mass.add(w);
    }
    let mut w = T::one();
    let mut k = k0;
    while k > 0 && w >= tiny {
        w = w * from_usize::<T>(k) / x;
        k -= 1;
        acc.add(w / (from_usize::<T>(k) + shift));
        mass.add(w);
    }
    acc.value() / mass.value() * rgamma(shift)
}
