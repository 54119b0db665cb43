//! Bessel functions of the first kind of real order and their positive zeros.

use crate::error::{domain, Result};
use crate::scalar::{from_usize, lit, Compensated, Real};

use super::gamma::{gamma_unchecked, rgamma};

/// Below this argument the ascending series is used directly.
const SERIES_CUTOFF: f64 = 8.0;
const RESCALE: f64 = 1e200;

/// J_ν(x) for real order `ν` and `x >= 0`.
///
/// Ascending series for small `x`, Miller backward recurrence normalized
/// with `(x/2)^ν = Σ_k (ν+2k) Γ(ν+k)/k! · J_{ν+2k}(x)` otherwise.
pub fn bessel_j<T: Real>(order: T, x: T) -> Result<T> {
    if !order.is_finite() || !x.is_finite() {
        return Err(domain("bessel_j: non-finite input"));
    }
    if x < T::zero() {
        return Err(domain(format!("bessel_j: negative argument {x}")));
    }
    if order < T::zero() && order == order.round() {
        let n = (-order).to_i64().unwrap_or(0);
        let v = bessel_j(-order, x)?;
        return Ok(if n % 2 == 0 { v } else { -v });
    }
    if x == T::zero() {
        return Ok(if order == T::zero() {
            T::one()
        } else if order > T::zero() {
            T::zero()
        } else {
            T::infinity()
        });
    }
    if x <= lit(SERIES_CUTOFF) || x * x < order * order * lit(0.25) {
        return Ok(series(order, x));
    }
    if order <= -T::one() {
        // reach orders below -1 by downward recurrence from (-1, 0]
        let frac = order - order.floor() - T::one();
        let mut hi = miller(frac + T::one(), x);
        let mut lo = miller(frac, x);
        let mut mu = frac;
        while mu > order + lit(0.5) {
            let next = lit::<T>(2.0) * mu / x * lo - hi;
            hi = lo;
            lo = next;
            mu -= T::one();
        }
        return Ok(lo);
    }
    Ok(miller(order, x))
}

fn series<T: Real>(order: T, x: T) -> T {
    // negative integer orders were reflected away, so 1/Γ(ν+1) is nonzero
    let q = -(x * x) * lit(0.25);
    let mut acc = Compensated::new();
    let mut term = rgamma(order + T::one());
    let mut quiet = 0;
    for k in 1..1000 {
        acc.add(term);
        let kf = from_usize::<T>(k);
        term = term * q / (kf * (order + kf));
        if term.abs() <= T::epsilon() * lit(0.1) * acc.value().abs() {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    (x * lit(0.5)).powf(order) * acc.value()
}

/// Miller backward recurrence for `order > -1`.
fn miller<T: Real>(order: T, x: T) -> T {
    let digits = -T::epsilon().log10();
    let start = (x + lit::<T>(1.5) * digits * x.cbrt() + lit::<T>(2.0) * digits + lit::<T>(10.0))
        .to_usize()
        .unwrap_or(64);
    let start = start + start % 2;
    let two_over_x = lit::<T>(2.0) / x;
    let mut j_next = T::zero();
    let mut j_cur = T::min_positive_value().sqrt();
    let mut norm = Compensated::new();
    let mut result = T::zero();
    // coefficient c_k = (ν+2k) Γ(ν+k)/k!, built upward as a table
    let half = start / 2;
    let mut coeff = Vec::with_capacity(half + 1);
    coeff.push(gamma_unchecked(order + T::one()));
    let mut ratio = gamma_unchecked(order + T::one());
    for k in 1..=half {
        let kf = from_usize::<T>(k);
        // Γ(ν+k)/k! from Γ(ν+k-1)/(k-1)!; k = 1 starts from Γ(ν+1)/1
        ratio = if k == 1 { ratio } else { ratio * (order + kf - T::one()) / kf };
        coeff.push((order + lit::<T>(2.0) * kf) * ratio);
    }
    for m in (0..=start).rev() {
        if m % 2 == 0 {
            norm.add(coeff[m / 2] * j_cur);
        }
        if m == 0 {
            result = j_cur;
            break;
        }
        let mu = order + from_usize::<T>(m);
        let prev = two_over_x * mu * j_cur - j_next;
        j_next = j_cur;
        j_cur = prev;
        if j_cur.abs() > lit(RESCALE) {
            let s = lit::<T>(RESCALE).recip();
            j_cur *= s;
            j_next *= s;
            norm = scaled(norm, s);
        }
    }
    result * (x * lit(0.5)).powf(order) / norm.value()
}

fn scaled<T: Real>(c: Compensated<T>, s: T) -> Compensated<T> {
    let mut out = Compensated::new();
    out.add(c.value() * s);
    out
}

/// k-th positive zero of J_ν, `ν > -1`, `k >= 1`.
///
/// Sign changes are located by a scan (geometric near the origin, then in
/// steps well below the zero spacing of π) and refined by bisection.
pub fn bessel_j_zero<T: Real>(order: T, k: usize) -> Result<T> {
    if k == 0 {
        return Err(domain("bessel_j_zero: zeros are numbered from 1"));
    }
    if !order.is_finite() || order <= -T::one() {
        return Err(domain(format!("bessel_j_zero: order must exceed -1 (got {order})")));
    }
    let j = |x: T| bessel_j(order, x);
    let mut found = 0usize;
    // j_{ν,1} > ν for ν > 0, and J_ν has no underflow from there on
    let mut a = lit::<T>(1e-4).max(order);
    let mut fa = j(a)?;
    let step = lit::<T>(0.2);
    loop {
        let b = if a < step { a * lit(1.5) } else { a + step };
        let fb = j(b)?;
        if fb == T::zero() {
            found += 1;
            if found == k {
                return Ok(b);
            }
            a = b + step * lit(1e-3);
            fa = j(a)?;
            continue;
        }
        if (fa < T::zero()) != (fb < T::zero()) {
            found += 1;
            if found == k {
                return bisect(&j, a, b, fa);
            }
        }
        a = b;
        fa = fb;
    }
}

fn bisect<T: Real, F: Fn(T) -> Result<T>>(f: &F, mut a: T, mut b: T, mut fa: T) -> Result<T> {
    for _ in 0..200 {
        let m = (a + b) * lit(0.5);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m)?;
        if fm == T::zero() {
            return Ok(m);
        }
        if (fm < T::zero()) == (fa < T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((a + b) * lit(0.5))
}
