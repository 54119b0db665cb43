//! Closed-form eigenpairs through Bessel functions.
//!
//! With `γ = 2 - β` and `ν = |1-β|/γ`,
//! `v_k(x) = C_k x^{(1-β)/2} J_ν(j_{ν,k} x^{γ/2})`, `λ_k = (γ j_{ν,k}/2)²`.
//! The `J_{+ν}` branch gives `v ~ x^{1-β}` at the origin for `β < 1` and a
//! finite nonzero value for `β > 1`, matching the boundary dispatch.
//! `C_k = √γ / J_{ν+1}(j_{ν,k})` normalizes in `L²(0,1)` and makes `v_k'(1) < 0`.

use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::scalar::{from_usize, lit, Real};
use crate::special::{bessel_j, bessel_j_zero, rgamma};

use super::{check_beta, graded_mesh, EigenMethod, EigenSystem, Modes};

/// Cells of the quadrature mesh attached to closed-form systems.
const QUADRATURE_CELLS: usize = 512;

#[derive(Debug, Clone)]
pub struct BesselModes<T> {
    beta: T,
    nu: T,
    zeros: Vec<T>,
    scale: Vec<T>,
    mesh: Vec<T>,
}

impl<T: Real> BesselModes<T> {
    pub fn nu(&self) -> T {
        self.nu
    }

    pub fn mesh(&self) -> &[T] {
        &self.mesh
    }

    fn gamma(&self) -> T {
        lit::<T>(2.0) - self.beta
    }

    fn jn(&self, order: T, y: T) -> T {
        bessel_j(order, y).unwrap_or(T::nan())
    }

    pub fn value(&self, k: usize, x: T) -> T {
        if x >= T::one() {
            return T::zero();
        }
        if x <= T::zero() {
            return if self.beta < T::one() {
                T::zero()
            } else {
                self.scale[k] * (self.zeros[k] * lit(0.5)).powf(self.nu) * rgamma(self.nu + T::one())
            };
        }
        let y = self.zeros[k] * x.powf(self.gamma() * lit(0.5));
        self.scale[k] * x.powf((T::one() - self.beta) * lit(0.5)) * self.jn(self.nu, y)
    }

    /// `x^{(1-β)/2} · x^{-1} [κ J_ν(y) - (γ/2) y J_{ν+1}(y)]` scaled, κ = max(1-β, 0).
    fn bracket(&self, k: usize, x: T) -> T {
        let g = self.gamma();
        let y = self.zeros[k] * x.powf(g * lit(0.5));
        let kappa = (T::one() - self.beta).max(T::zero());
        let mut b = -g * lit(0.5) * y * self.jn(self.nu + T::one(), y);
        if kappa > T::zero() {
            b += kappa * self.jn(self.nu, y);
        }
        self.scale[k] * b
    }

    pub fn derivative(&self, k: usize, x: T) -> T {
        let x = x.min(T::one());
        if x <= T::zero() {
            return T::nan();
        }
        x.powf((T::one() - self.beta) * lit(0.5) - T::one()) * self.bracket(k, x)
    }

    pub fn flux(&self, k: usize, x: T) -> T {
        let x = x.min(T::one());
        if x <= T::zero() {
            return if self.beta < T::one() {
                (T::one() - self.beta)
                    * self.scale[k]
                    * (self.zeros[k] * lit(0.5)).powf(self.nu)
                    * rgamma(self.nu + T::one())
            } else {
                T::zero()
            };
        }
        x.powf((self.beta - T::one()) * lit(0.5)) * self.bracket(k, x)
    }
}

/// Closed-form eigenpairs for the first `k` modes.
pub fn bessel_eigen<T: Real>(beta: T, k: usize) -> Result<EigenSystem<T>> {
    let bc = check_beta(beta)?;
    if k == 0 {
        return Err(domain("at least one eigenpair must be requested"));
    }
    let g = lit::<T>(2.0) - beta;
    let nu = (T::one() - beta).abs() / g;
    let mut zeros = Vec::with_capacity(k);
    let mut scale = Vec::with_capacity(k);
    let mut lambdas = Vec::with_capacity(k);
    for idx in 1..=k {
        let j = bessel_j_zero(nu, idx)?;
        let jp = bessel_j(nu + T::one(), j)?;
        if jp == T::zero() {
            return Err(Error::Numeric(format!("J_(ν+1) vanishes at zero {idx}")));
        }
        zeros.push(j);
        scale.push(g.sqrt() / jp);
        lambdas.push((g * j * lit(0.5)).powi(2));
    }
    Ok(EigenSystem {
        beta,
        bc,
        lambdas,
        method: EigenMethod::BesselClosedForm,
        modes: Arc::new(Modes::Bessel(BesselModes {
            beta,
            nu,
            zeros,
            scale,
            mesh: graded_mesh(beta, QUADRATURE_CELLS),
        })),
    })
}

/// Interior `L²(lo, hi)` norm of `-(x^β v_k')' - λ_k v_k` per mode, with the
/// outer derivative taken by a fourth-order central difference of the flux.
pub fn bessel_residual<T: Real>(sys: &EigenSystem<T>, lo: T, hi: T) -> Vec<T> {
    let h = lit::<T>(1e-4);
    let samples = 400usize;
    let twelve = lit::<T>(12.0);
    let eight = lit::<T>(8.0);
    (0..sys.count())
        .map(|k| {
            let lambda = sys.lambda(k);
            let r: Vec<T> = (0..=samples)
                .map(|i| {
                    let x = lo + (hi - lo) * from_usize::<T>(i) / from_usize::<T>(samples);
                    let f = |y: T| sys.flux(k, y);
                    let d = (-f(x + h + h) + eight * f(x + h) - eight * f(x - h) + f(x - h - h))
                        / (twelve * h);
                    -d - lambda * sys.value(k, x)
                })
                .collect();
            // trapezoid rule for ∫ r²
            let dx = (hi - lo) / from_usize::<T>(samples);
            let mut acc = T::zero();
            for (i, v) in r.iter().enumerate() {
                let w = if i == 0 || i == samples { lit(0.5) } else { T::one() };
                acc += w * *v * *v;
            }
            (acc * dx).sqrt()
        })
        .collect()
}
