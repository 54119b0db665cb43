//! Piecewise-linear Galerkin discretization of `-(x^β v')' = λ v`.
//!
//! Cell stiffness uses the exact moment `∫ x^β dx` and the consistent mass
//! matrix, so the discrete Gram matrices of the computed modes are exact up
//! to rounding. The generalized tridiagonal eigenproblem is solved by Sturm
//! bisection followed by inverse iteration.

use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::scalar::{from_usize, lit, Real};

use super::tridiag::{solve_pivoted, sturm_count, SymTri};
use super::{check_beta, graded_mesh, locate_cell, EigenMethod, EigenSystem, Modes};

/// Resolution of the Galerkin mesh.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshOptions {
    /// Number of cells of the graded mesh.
    pub cells: usize,
    /// Smallest admissible `cells / K`.
    pub min_cells_per_mode: usize,
}

impl Default for MeshOptions {
    fn default() -> Self {
        Self {
            cells: 2048,
            min_cells_per_mode: 16,
        }
    }
}

impl MeshOptions {
    pub fn with_cells(cells: usize) -> Self {
        Self {
            cells,
            ..Self::default()
        }
    }
}

/// Nodal values of the computed modes on the graded mesh.
#[derive(Debug, Clone)]
pub struct GalerkinModes<T> {
    mesh: Vec<T>,
    nodal: Vec<Vec<T>>,
}

impl<T: Real> GalerkinModes<T> {
    pub fn mesh(&self) -> &[T] {
        &self.mesh
    }

    pub fn nodal(&self, k: usize) -> &[T] {
        &self.nodal[k]
    }

    pub fn value(&self, k: usize, x: T) -> T {
        if x <= T::zero() {
            return self.nodal[k][0];
        }
        if x >= T::one() {
            return T::zero();
        }
        let i = locate_cell(&self.mesh, x);
        let (x0, x1) = (self.mesh[i], self.mesh[i + 1]);
        let w = (x - x0) / (x1 - x0);
        let v = &self.nodal[k];
        v[i] + w * (v[i + 1] - v[i])
    }

    /// Slope of the cell containing `x` (right cell at interior nodes).
    pub fn derivative(&self, k: usize, x: T) -> T {
        let i = locate_cell(&self.mesh, x.max(T::zero()).min(T::one()));
        let v = &self.nodal[k];
        (v[i + 1] - v[i]) / (self.mesh[i + 1] - self.mesh[i])
    }
}

/// First `k` eigenpairs by the weighted Galerkin method on a mesh graded
/// toward the degenerate endpoint.
pub fn solve_eigen<T: Real>(beta: T, k: usize, mesh: MeshOptions) -> Result<EigenSystem<T>> {
    let bc = check_beta(beta)?;
    if k == 0 {
        return Err(domain("at least one eigenpair must be requested"));
    }
    if mesh.cells < mesh.min_cells_per_mode.max(2) * k {
        return Err(Error::Resolution(format!(
            "{} cells cannot resolve {k} modes (need at least {} per mode)",
            mesh.cells, mesh.min_cells_per_mode
        )));
    }
    let x = graded_mesh(beta, mesh.cells);
    let n = mesh.cells;
    let first = usize::from(bc.dirichlet_at_zero());
    let (stiff, mass) = assemble(&x, beta, first);
    let dofs = stiff.len();
    if dofs < k {
        return Err(Error::Resolution(format!("only {dofs} unknowns for {k} modes")));
    }

    let mut lambdas = Vec::with_capacity(k);
    let mut vectors: Vec<Vec<T>> = Vec::with_capacity(k);
    let mut hi = T::one();
    for idx in 0..k {
        while sturm_count(&stiff, &mass, hi) <= idx {
            hi *= lit(2.0);
            if !hi.is_finite() {
                return Err(Error::Numeric("eigenvalue bracket diverged".into()));
            }
        }
        let mut lo = lambdas.last().copied().unwrap_or(T::zero());
        let mut up = hi;
        while up - lo > lit::<T>(2.0) * T::epsilon() * up {
            let mid = (lo + up) * lit(0.5);
            if mid <= lo || mid >= up {
                break;
            }
            if sturm_count(&stiff, &mass, mid) <= idx {
                lo = mid;
            } else {
                up = mid;
            }
        }
        let lambda = (lo + up) * lit(0.5);
        if let Some(&prev) = lambdas.last() {
            if !(lambda > prev) {
                return Err(Error::Resolution(format!(
                    "eigenvalues {idx} and {} are not separated on this mesh",
                    idx + 1
                )));
            }
        }
        let v = inverse_iteration(&stiff, &mass, lambda, &vectors, idx)?;
        lambdas.push(lambda);
        vectors.push(v);
    }

    let nodal = vectors
        .into_iter()
        .map(|v| {
            let mut full = vec![T::zero(); n + 1];
            full[first..first + v.len()].copy_from_slice(&v);
            full
        })
        .collect();
    Ok(EigenSystem {
        beta,
        bc,
        lambdas,
        method: EigenMethod::GalerkinNumeric,
        modes: Arc::new(Modes::Galerkin(GalerkinModes { mesh: x, nodal })),
    })
}

/// Stiffness and mass restricted to nodes `first..cells` (node `cells` is
/// the Dirichlet node at `x = 1`).
fn assemble<T: Real>(x: &[T], beta: T, first: usize) -> (SymTri<T>, SymTri<T>) {
    let cells = x.len() - 1;
    let bp1 = beta + T::one();
    let weight: Vec<T> = (0..cells)
        .map(|i| {
            let h = x[i + 1] - x[i];
            let moment = if x[i] == T::zero() {
                x[i + 1].powf(bp1) / bp1
            } else {
                // x_{i+1}^{β+1} - x_i^{β+1} without cancellation
                let r = h / x[i];
                x[i].powf(bp1) * (bp1 * r.ln_1p()).exp_m1() / bp1
            };
            moment / (h * h)
        })
        .collect();
    let h: Vec<T> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let six = lit::<T>(6.0);
    let mut kd = Vec::new();
    let mut ko = Vec::new();
    let mut md = Vec::new();
    let mut mo = Vec::new();
    for j in first..cells {
        let (mut kdiag, mut mdiag) = (weight[j], h[j] / lit(3.0));
        if j > 0 {
            kdiag += weight[j - 1];
            mdiag += h[j - 1] / lit(3.0);
        }
        kd.push(kdiag);
        md.push(mdiag);
        if j + 1 < cells {
            ko.push(-weight[j]);
            mo.push(h[j] / six);
        }
    }
    (SymTri { diag: kd, off: ko }, SymTri { diag: md, off: mo })
}

fn m_dot<T: Real>(m: &SymTri<T>, a: &[T], b: &[T]) -> T {
    let mb = m.matvec(b);
    a.iter().zip(&mb).map(|(x, y)| *x * *y).sum()
}

fn inverse_iteration<T: Real>(
    k: &SymTri<T>,
    m: &SymTri<T>,
    lambda: T,
    previous: &[Vec<T>],
    idx: usize,
) -> Result<Vec<T>> {
    let n = k.len();
    let a = k.shifted(m, lambda);
    // deterministic start with components on every mode
    let mut v: Vec<T> = (0..n)
        .map(|i| {
            let s = from_usize::<T>(i + 1) / from_usize::<T>(n + 1);
            T::one() + lit::<T>(0.5) * (lit::<T>(7.3) * s).sin() + s
        })
        .collect();
    for _ in 0..4 {
        let rhs = m.matvec(&v);
        v = solve_pivoted(&a.off, &a.diag, &a.off, &rhs)?;
        for p in previous {
            let c = m_dot(m, p, &v);
            for (vi, pi) in v.iter_mut().zip(p) {
                *vi -= c * *pi;
            }
        }
        let norm = m_dot(m, &v, &v).sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::Numeric(format!("inverse iteration broke down for mode {idx}")));
        }
        for vi in v.iter_mut() {
            *vi /= norm;
        }
    }
    // v'(1) < 0: the last free node is positive
    if v[n - 1] < T::zero() {
        for vi in v.iter_mut() {
            *vi = -*vi;
        }
    }
    Ok(v)
}
