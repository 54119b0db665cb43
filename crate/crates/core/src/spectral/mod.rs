//! Degenerate Sturm-Liouville problem `-(x^β v')' = λ v` on `(0, 1)`.

mod bessel_oracle;
mod diagnostics;
mod galerkin;
pub(crate) mod tridiag;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::scalar::{from_usize, lit, Real};

pub use bessel_oracle::{bessel_eigen, bessel_residual, BesselModes};
pub use diagnostics::{
    flux_limit_check, flux_limit_check_fn, orthogonality_report, FluxLimitReport,
    OrthogonalityReport, FLUX_TOLERANCE,
};
pub use galerkin::{solve_eigen, GalerkinModes, MeshOptions};

/// Boundary behaviour required at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeftCondition {
    DirichletAtZero,
    NoneAtZero,
}

/// Boundary condition set selected by the degeneracy exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BCDescriptor {
    pub beta: f64,
    pub left_condition: LeftCondition,
    /// Always Dirichlet at `x = 1`.
    pub right_dirichlet: bool,
    /// Orders of derivatives that must vanish at `x = 0`.
    pub nu_range: Vec<u32>,
}

impl BCDescriptor {
    pub fn dirichlet_at_zero(&self) -> bool {
        self.left_condition == LeftCondition::DirichletAtZero
    }
}

/// Dispatches the boundary conditions: Dirichlet at both ends for
/// `0 < β < 1`, Dirichlet at `x = 1` only for `1 < β < 2`.
pub fn bc_requirements<T: Real>(beta: T) -> Result<BCDescriptor> {
    let b = beta.to_f64().unwrap_or(f64::NAN);
    if !b.is_finite() || b <= 0.0 || b >= 2.0 {
        return Err(domain(format!(
            "degeneracy exponent must satisfy β ∈ (0,2), β ≠ 1 (got β = {b})"
        )));
    }
    if b == 1.0 {
        return Err(Error::UnsupportedDegeneracy(b));
    }
    let (left_condition, nu_range) = if b < 1.0 {
        (LeftCondition::DirichletAtZero, vec![0])
    } else {
        (LeftCondition::NoneAtZero, Vec::new())
    };
    Ok(BCDescriptor {
        beta: b,
        left_condition,
        right_dirichlet: true,
        nu_range,
    })
}

/// Which construction produced an [`EigenSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenMethod {
    GalerkinNumeric,
    BesselClosedForm,
}

#[derive(Debug, Clone)]
enum Modes<T> {
    Galerkin(GalerkinModes<T>),
    Bessel(BesselModes<T>),
}

/// First `K` eigenpairs, `L²(0,1)`-orthonormal, with `v_k'(1) < 0`.
///
/// Modes are indexed from 0.
#[derive(Debug, Clone)]
pub struct EigenSystem<T> {
    beta: T,
    bc: BCDescriptor,
    lambdas: Vec<T>,
    method: EigenMethod,
    modes: Arc<Modes<T>>,
}

impl<T: Real> EigenSystem<T> {
    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn bc(&self) -> &BCDescriptor {
        &self.bc
    }

    pub fn count(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }

    pub fn lambda(&self, k: usize) -> T {
        self.lambdas[k]
    }

    pub fn method(&self) -> EigenMethod {
        self.method
    }

    /// Keeps only the first `k` modes.
    pub fn truncated(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.count() {
            return Err(Error::Contract(format!(
                "cannot truncate {} modes to {k}",
                self.count()
            )));
        }
        let mut out = self.clone();
        out.lambdas.truncate(k);
        Ok(out)
    }

    pub fn value(&self, k: usize, x: T) -> T {
        match self.modes.as_ref() {
            Modes::Galerkin(g) => g.value(k, x),
            Modes::Bessel(b) => b.value(k, x),
        }
    }

    pub fn derivative(&self, k: usize, x: T) -> T {
        match self.modes.as_ref() {
            Modes::Galerkin(g) => g.derivative(k, x),
            Modes::Bessel(b) => b.derivative(k, x),
        }
    }

    /// `x^β v_k'(x)`.
    pub fn flux(&self, k: usize, x: T) -> T {
        match self.modes.as_ref() {
            Modes::Galerkin(g) => crate::scalar::pow0(x, self.beta) * g.derivative(k, x),
            Modes::Bessel(b) => b.flux(k, x),
        }
    }

    /// Breakpoints on which quadrature over `(0, 1)` should be split.
    pub fn quadrature_mesh(&self) -> &[T] {
        match self.modes.as_ref() {
            Modes::Galerkin(g) => g.mesh(),
            Modes::Bessel(b) => b.mesh(),
        }
    }

    /// Whether `v_k` is piecewise linear on [`quadrature_mesh`](Self::quadrature_mesh).
    pub fn is_piecewise_linear(&self) -> bool {
        matches!(self.modes.as_ref(), Modes::Galerkin(_))
    }

    /// Nodal values of mode `k` on the quadrature mesh, for piecewise-linear modes.
    pub fn nodal_values(&self, k: usize) -> Option<&[T]> {
        match self.modes.as_ref() {
            Modes::Galerkin(g) => Some(g.nodal(k)),
            Modes::Bessel(_) => None,
        }
    }
}

/// Grading exponent `q` of the mesh `x_i = (i/N)^q`.
///
/// `2/(2-β)` makes the mesh uniform in the Liouville variable. For `β < 1`
/// the modes behave like `x^{1-β}` at the origin and `q` is raised to
/// `2/(1-β)`, which makes them quadratic in `i/N` there. The exponent is capped
/// so that `x_1^3` stays a normal number of the scalar type.
pub fn mesh_exponent<T: Real>(beta: T, cells: usize) -> T {
    let two = lit::<T>(2.0);
    let mut q = two / (two - beta);
    if beta < T::one() {
        q = q.max(two / (T::one() - beta));
    }
    let representable = -T::min_positive_value().ln() / (lit::<T>(3.0) * from_usize::<T>(cells.max(2)).ln());
    q.min(lit(24.0)).min(representable).max(T::one())
}

/// Mesh `x_i = (i/N)^q` graded toward the degenerate endpoint.
pub fn graded_mesh<T: Real>(beta: T, cells: usize) -> Vec<T> {
    let q = mesh_exponent(beta, cells);
    let n = from_usize::<T>(cells);
    (0..=cells)
        .map(|i| {
            if i == cells {
                T::one()
            } else {
                (from_usize::<T>(i) / n).powf(q)
            }
        })
        .collect()
}

/// Cell of `mesh` containing `x`, clamped to valid cells.
pub(crate) fn locate_cell<T: Real>(mesh: &[T], x: T) -> usize {
    let cells = mesh.len() - 1;
    let i = mesh.partition_point(|&m| m <= x);
    i.saturating_sub(1).min(cells - 1)
}

pub(crate) fn check_beta<T: Real>(beta: T) -> Result<BCDescriptor> {
    bc_requirements(beta)
}
