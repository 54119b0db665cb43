//! Quadrature rules: Gauss-Legendre (fixed and composite) and an adaptive
//! tanh-sinh rule for integrands with algebraic endpoint singularities.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, Compensated, Real};

/// Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    /// Builds the `n`-point rule by Newton iteration on the Legendre recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let nf = from_usize::<T>(n);
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (T::PI() * (from_usize::<T>(i) + lit(0.75)) / (nf + lit(0.5))).cos();
            let mut dp = T::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= T::epsilon() * lit(4.0) {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = lit::<T>(2.0) / ((T::one() - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = T::zero();
        }
        Self { nodes, weights }
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F: FnMut(T) -> T>(&self, a: T, b: T, mut f: F) -> T {
        let half = (b - a) * lit(0.5);
        let mid = (b + a) * lit(0.5);
        let mut acc = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += *w * f(mid + half * *x);
        }
        acc * half
    }

    /// Maps the rule onto `[a, b]`, returning `(points, weights)`.
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let half = (b - a) * lit(0.5);
        let mid = (b + a) * lit(0.5);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(x, w)| (mid + half * *x, *w * half))
    }
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = from_usize::<T>(k);
        let p2 = ((lit::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (T::one(), T::zero());
    }
    let nf = from_usize::<T>(n);
    let d = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

/// Composite Gauss-Legendre over consecutive cells `[mesh[i], mesh[i+1]]`.
pub fn composite<T: Real, F: FnMut(T) -> T>(rule: &GaussLegendre<T>, mesh: &[T], mut f: F) -> T {
    let mut acc = Compensated::new();
    for w in mesh.windows(2) {
        acc.add(rule.integrate(w[0], w[1], &mut f));
    }
    acc.value()
}

/// Adaptive tanh-sinh quadrature over a finite interval.
///
/// The integrand receives `(x, x - a, b - x)`; the two distances are computed
/// without cancellation so that factors such as `(b - x)^(delta - 1)` can be
/// evaluated accurately next to the endpoints.
#[derive(Debug, Clone, Copy)]
pub struct TanhSinh<T> {
    pub rel_tol: T,
    pub max_level: usize,
}

impl<T: Real> Default for TanhSinh<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::epsilon().sqrt() * lit(1e-4),
            max_level: 12,
        }
    }
}

impl<T: Real> TanhSinh<T> {
    pub fn new(rel_tol: T) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn integrate<F>(&self, a: T, b: T, mut f: F) -> Result<T>
    where
        F: FnMut(T, T, T) -> T,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain("tanh-sinh needs finite limits".into()));
        }
        if a == b {
            return Ok(T::zero());
        }
        if b < a {
            return self.integrate_ordered(b, a, &mut |x, l, r| f(x, r, l)).map(|v| -v);
        }
        self.integrate_ordered(a, b, &mut f)
    }

    fn integrate_ordered(&self, a: T, b: T, f: &mut dyn FnMut(T, T, T) -> T) -> Result<T> {
        let half = (b - a) * lit(0.5);
        let half_pi = T::FRAC_PI_2();
        // Last abscissa whose endpoint distance is still a normal number.
        let u_max = -T::min_positive_value().ln() * lit(0.5);
        let t_max = (u_max / half_pi).asinh();

        let mut eval = |t: T| -> T {
            let u = half_pi * t.sinh();
            let e = (-(u.abs() * lit(2.0))).exp();
            // 1 - tanh|u| computed as 2e^{-2|u|}/(1+e^{-2|u|})
            let one_minus = lit::<T>(2.0) * e / (T::one() + e);
            let one_plus = lit::<T>(2.0) - one_minus;
            let (dl, dr) = if u >= T::zero() {
                (half * one_plus, half * one_minus)
            } else {
                (half * one_minus, half * one_plus)
            };
            if dl <= T::zero() || dr <= T::zero() {
                return T::zero();
            }
            let x = if dl < dr { a + dl } else { b - dr };
            let cosh_u = u.cosh();
            let w = half * half_pi * t.cosh() / (cosh_u * cosh_u);
            if !w.is_finite() || w == T::zero() {
                return T::zero();
            }
            let v = f(x, dl, dr);
            if v == T::zero() {
                T::zero()
            } else {
                w * v
            }
        };

        let mut h = T::one();
        let mut sum = Compensated::new();
        sum.add(eval(T::zero()));
        let mut k = 1usize;
        loop {
            let t = from_usize::<T>(k) * h;
            if t > t_max {
                break;
            }
            sum.add(eval(t));
            sum.add(eval(-t));
            k += 1;
        }
        let mut estimate = sum.value() * h;
        for _level in 1..=self.max_level {
            h *= lit(0.5);
            let mut k = 1usize;
            loop {
                let t = from_usize::<T>(k) * h;
                if t > t_max {
                    break;
                }
                sum.add(eval(t));
                sum.add(eval(-t));
                k += 2;
            }
            let next = sum.value() * h;
            let diff = (next - estimate).abs();
            estimate = next;
            if diff <= self.rel_tol * next.abs() || diff <= T::min_positive_value() {
                return Ok(estimate);
            }
        }
        if estimate.is_finite() {
            Ok(estimate)
        } else {
            Err(Error::Numeric("tanh-sinh produced a non-finite value".into()))
        }
    }
}
