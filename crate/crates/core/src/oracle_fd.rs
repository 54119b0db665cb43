//! Finite-difference reference solver: the L1 Caputo stencil in warped time,
//! scaled by `p^α`, combined with a conservative flux discretization of
//! `-(x^β u_x)_x` on a mesh graded toward `x = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac_ops::{default_grading, graded_grid, l1_coefficients};
use crate::scalar::{lit, pow0, Real};
use crate::solver::{ProblemSpec, Regime, SolutionField};
use crate::spectral::{graded_mesh, mesh_exponent, tridiag::solve_thomas};

/// Default number of spatial cells and of time steps.
pub const DEFAULT_FD_CELLS: usize = 512;

/// Spatial nodes on `[0, 1]` and warped-time nodes on `[0, S]`.
#[derive(Debug, Clone)]
pub struct FDMesh<T> {
    x: Vec<T>,
    s: Vec<T>,
    t: Vec<T>,
    x_exponent: T,
    s_exponent: T,
}

impl<T: Real> FDMesh<T> {
    /// `x_i = (i/nx)^q` with the eigen-mesh exponent and
    /// `s_n = S (n/nt)^r` with the L1 grading for `α`.
    pub fn new(spec: &ProblemSpec<T>, nx: usize, nt: usize) -> Result<Self> {
        if nx < 4 || nt < 2 {
            return Err(Error::Resolution(format!(
                "finite-difference mesh {nx}×{nt} is too coarse (need at least 4×2)"
            )));
        }
        let warp = spec.warp();
        let s_max = warp.forward_unchecked(spec.t_final());
        let r = default_grading(spec.alpha());
        let s = graded_grid(s_max, nt, r);
        let t = s
            .iter()
            .enumerate()
            .map(|(n, &sn)| if n == nt { spec.t_final() } else { warp.inverse_unchecked(sn) })
            .collect();
        Ok(Self {
            x: graded_mesh(spec.beta(), nx),
            s,
            t,
            x_exponent: mesh_exponent(spec.beta(), nx),
            s_exponent: r,
        })
    }

    pub fn x(&self) -> &[T] {
        &self.x
    }

    pub fn s(&self) -> &[T] {
        &self.s
    }

    pub fn t(&self) -> &[T] {
        &self.t
    }

    pub fn x_exponent(&self) -> T {
        self.x_exponent
    }

    pub fn s_exponent(&self) -> T {
        self.s_exponent
    }

    pub fn cells(&self) -> usize {
        self.x.len() - 1
    }

    pub fn steps(&self) -> usize {
        self.s.len() - 1
    }
}

/// Time-steps the problem on `mesh` and returns the field on its nodes.
pub fn fd_solve<T: Real>(spec: &ProblemSpec<T>, mesh: &FDMesh<T>) -> Result<SolutionField<T>> {
    let x = &mesh.x;
    let n = x.len() - 1;
    let beta = spec.beta();
    let dirichlet_left = spec.regime() == Regime::Classical;
    let first = usize::from(dirichlet_left);
    // unknowns first..n-1; x_n = 1 is Dirichlet
    let m = n - first;
    let bp1 = beta + T::one();
    // cell stiffness ∫ x^β dx / h², zero flux through x = 0 built in
    let stiff: Vec<T> = (0..n)
        .map(|i| {
            let h = x[i + 1] - x[i];
            (pow0(x[i + 1], bp1) - pow0(x[i], bp1)) / bp1 / (h * h)
        })
        .collect();
    let mass: Vec<T> = (first..n)
        .map(|i| {
            let left = if i == 0 { T::zero() } else { x[i] - x[i - 1] };
            (left + x[i + 1] - x[i]) * lit(0.5)
        })
        .collect();
    let mut k_diag = vec![T::zero(); m];
    let mut k_off = vec![T::zero(); m.saturating_sub(1)];
    for r in 0..m {
        let i = r + first;
        k_diag[r] = stiff[i] + if i > 0 { stiff[i - 1] } else { T::zero() };
        if r + 1 < m {
            k_off[r] = -stiff[i];
        }
    }

    let p_alpha = spec.warp().p().powf(spec.alpha());
    let initial: Vec<T> = (first..n).map(|i| spec.phi().eval(x[i])).collect();
    let steps = mesh.steps();
    let mut history: Vec<Vec<T>> = Vec::with_capacity(steps);
    let mut states = vec![initial];
    for step in 1..=steps {
        let w: Vec<T> = l1_coefficients(&mesh.s, step, spec.alpha())
            .into_iter()
            .map(|c| c * p_alpha)
            .collect();
        let lead = w[step - 1];
        let prev = &states[step - 1];
        let t = mesh.t[step];
        let mut rhs: Vec<T> = (0..m)
            .map(|r| mass[r] * (spec.source().eval(x[r + first], t) + lead * prev[r]))
            .collect();
        for (j, dj) in history.iter().enumerate() {
            let c = w[j];
            if c == T::zero() {
                continue;
            }
            for r in 0..m {
                rhs[r] -= mass[r] * c * dj[r];
            }
        }
        let diag: Vec<T> = (0..m).map(|r| k_diag[r] + lead * mass[r]).collect();
        let next = solve_thomas(&k_off, &diag, &k_off, &rhs)?;
        history.push(next.iter().zip(prev).map(|(&a, &b)| a - b).collect());
        states.push(next);
    }

    let values = states
        .iter()
        .map(|u| {
            let mut row = vec![T::zero(); n + 1];
            row[first..n].copy_from_slice(u);
            row
        })
        .collect();
    Ok(SolutionField::from_grid(
        x.clone(),
        mesh.t.clone(),
        values,
        spec.regime(),
    ))
}

/// Differences between two fields at selected times.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub times: Vec<f64>,
    pub l2_abs: Vec<f64>,
    pub sup_abs: Vec<f64>,
    /// Normalized by the reference field's norms.
    pub l2_rel: Vec<f64>,
    pub sup_rel: Vec<f64>,
    pub max_l2_rel: f64,
    pub max_sup_rel: f64,
}

fn interpolate<T: Real>(grid: &[T], values: &[T], x: T) -> T {
    let i = grid.partition_point(|&g| g <= x).clamp(1, grid.len() - 1);
    let (x0, x1) = (grid[i - 1], grid[i]);
    let w = ((x - x0) / (x1 - x0)).max(T::zero()).min(T::one());
    values[i - 1] + w * (values[i] - values[i - 1])
}

fn l2_piecewise_linear<T: Real>(grid: &[T], v: &[T]) -> T {
    let mut acc = T::zero();
    for i in 0..grid.len() - 1 {
        let h = grid[i + 1] - grid[i];
        acc += h * (v[i] * v[i] + v[i] * v[i + 1] + v[i + 1] * v[i + 1]) / lit(3.0);
    }
    acc.sqrt()
}

/// `L²(0,1)` and sup-norm differences of `other` from `reference` at the
/// times of `t_subset`. Both fields are interpolated linearly onto the union
/// of their x-grids and linearly in time.
pub fn compare<T: Real>(
    reference: &SolutionField<T>,
    other: &SolutionField<T>,
    t_subset: &[T],
) -> Result<ComparisonReport> {
    let mut grid: Vec<T> = reference.x_grid.iter().chain(&other.x_grid).copied().collect();
    grid.sort_by(|a, b| a.partial_cmp(b).expect("finite grid"));
    grid.dedup();
    let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    let mut report = ComparisonReport {
        times: Vec::new(),
        l2_abs: Vec::new(),
        sup_abs: Vec::new(),
        l2_rel: Vec::new(),
        sup_rel: Vec::new(),
        max_l2_rel: 0.0,
        max_sup_rel: 0.0,
    };
    for &t in t_subset {
        let a = reference.profile_at(t)?;
        let b = other.profile_at(t)?;
        let ra: Vec<T> = grid.iter().map(|&x| interpolate(&reference.x_grid, &a, x)).collect();
        let rb: Vec<T> = grid.iter().map(|&x| interpolate(&other.x_grid, &b, x)).collect();
        let diff: Vec<T> = ra.iter().zip(&rb).map(|(&p, &q)| p - q).collect();
        let l2 = f(l2_piecewise_linear(&grid, &diff));
        let sup = diff.iter().fold(0.0f64, |m, &d| m.max(f(d.abs())));
        let ref_l2 = f(l2_piecewise_linear(&grid, &ra));
        let ref_sup = ra.iter().fold(0.0f64, |m, &d| m.max(f(d.abs())));
        let rel = |e: f64, r: f64| if r > 0.0 { e / r } else { e };
        report.times.push(f(t));
        report.l2_abs.push(l2);
        report.sup_abs.push(sup);
        report.l2_rel.push(rel(l2, ref_l2));
        report.sup_rel.push(rel(sup, ref_sup));
    }
    report.max_l2_rel = report.l2_rel.iter().fold(0.0, |m, &v| m.max(v));
    report.max_sup_rel = report.sup_rel.iter().fold(0.0, |m, &v| m.max(v));
    Ok(report)
}
