//! Symmetric tridiagonal pencils `(K, M)` and banded solves.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric tridiagonal matrix stored as diagonal and first off-diagonal.
#[derive(Debug, Clone)]
pub(crate) struct SymTri<T> {
    pub diag: Vec<T>,
    pub off: Vec<T>,
}

impl<T: Real> SymTri<T> {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * x[i];
                if i > 0 {
                    v += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    v += self.off[i] * x[i + 1];
                }
                v
            })
            .collect()
    }

    pub fn shifted(&self, other: &Self, sigma: T) -> Self {
        SymTri {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| *a - sigma * *b)
                .collect(),
            off: self
                .off
                .iter()
                .zip(&other.off)
                .map(|(a, b)| *a - sigma * *b)
                .collect(),
        }
    }
}

/// Number of eigenvalues of `K v = λ M v` below `sigma` (Sylvester inertia of
/// `K - σM`, `M` positive definite).
pub(crate) fn sturm_count<T: Real>(k: &SymTri<T>, m: &SymTri<T>, sigma: T) -> usize {
    let n = k.len();
    let tiny = T::min_positive_value().sqrt();
    let mut count = 0;
    let mut d = T::one();
    for i in 0..n {
        let a = k.diag[i] - sigma * m.diag[i];
        d = if i == 0 {
            a
        } else {
            let b = k.off[i - 1] - sigma * m.off[i - 1];
            a - b * b / d
        };
        if d == T::zero() {
            d = -tiny;
        }
        if d < T::zero() {
            count += 1;
        }
    }
    count
}

/// Solves a general tridiagonal system with partial pivoting.
///
/// `sub[i]` couples row `i+1` to column `i`, `sup[i]` row `i` to column `i+1`.
/// Exactly singular pivots are nudged to `ε·‖A‖`, which is what inverse
/// iteration at a converged shift needs.
pub(crate) fn solve_pivoted<T: Real>(sub: &[T], diag: &[T], sup: &[T], rhs: &[T]) -> Result<Vec<T>> {
    let n = diag.len();
    // row i of the upper factor holds columns i, i+1, i+2
    let mut u0 = diag.to_vec();
    let mut u1 = sup.to_vec();
    u1.push(T::zero());
    let mut u2 = vec![T::zero(); n];
    let mut b = rhs.to_vec();
    let scale = diag
        .iter()
        .chain(sub)
        .chain(sup)
        .fold(T::zero(), |m, v| m.max(v.abs()));
    let nudge = (T::epsilon() * scale).max(T::min_positive_value());
    for i in 0..n.saturating_sub(1) {
        let (d, e) = (u0[i], u1[i]);
        let c = sub[i];
        let (dn, en) = (u0[i + 1], u1[i + 1]);
        if c.abs() > d.abs() {
            u0[i] = c;
            u1[i] = dn;
            u2[i] = en;
            let m = d / c;
            u0[i + 1] = e - m * dn;
            u1[i + 1] = -m * en;
            b.swap(i, i + 1);
            b[i + 1] = b[i + 1] - m * b[i];
        } else {
            if d == T::zero() {
                u0[i] = nudge;
            }
            let m = c / u0[i];
            u0[i + 1] = dn - m * e;
            b[i + 1] = b[i + 1] - m * b[i];
        }
    }
    if u0[n - 1] == T::zero() {
        u0[n - 1] = nudge;
    }
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut v = b[i];
        if i + 1 < n {
            v -= u1[i] * x[i + 1];
        }
        if i + 2 < n {
            v -= u2[i] * x[i + 2];
        }
        x[i] = v / u0[i];
        if !x[i].is_finite() {
            return Err(Error::Singular(i));
        }
    }
    Ok(x)
}

/// Thomas algorithm for diagonally dominant systems; reports a vanishing pivot.
pub(crate) fn solve_thomas<T: Real>(sub: &[T], diag: &[T], sup: &[T], rhs: &[T]) -> Result<Vec<T>> {
    let n = diag.len();
    let mut c = vec![T::zero(); n];
    let mut d = vec![T::zero(); n];
    let mut piv = diag[0];
    if piv == T::zero() {
        return Err(Error::Singular(0));
    }
    if n > 1 {
        c[0] = sup[0] / piv;
    }
    d[0] = rhs[0] / piv;
    for i in 1..n {
        piv = diag[i] - sub[i - 1] * c[i - 1];
        if piv == T::zero() || !piv.is_finite() {
            return Err(Error::Singular(i));
        }
        if i + 1 < n {
            c[i] = sup[i] / piv;
        }
        d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / piv;
    }
    for i in (0..n - 1).rev() {
        d[i] = d[i] - c[i] * d[i + 1];
    }
    Ok(d)
}
