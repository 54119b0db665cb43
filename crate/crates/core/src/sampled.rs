//! Evaluable one-dimensional functions: closed-form expressions, tabulated
//! data with monotone cubic interpolation, or user closures.

use std::fmt;
use std::sync::Arc;

use crate::error::{domain, Result};
use crate::scalar::{lit, Real};

type Scalar<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Closed-form expression in one variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr<T> {
    Const(T),
    /// Coefficients in ascending powers.
    Poly(Vec<T>),
    /// `amp · sin(freq·x + phase)`
    Sin { amp: T, freq: T, phase: T },
    /// `amp · cos(freq·x + phase)`
    Cos { amp: T, freq: T, phase: T },
    /// `coef · x^exp`, zero at `x = 0` for positive exponents.
    Pow { coef: T, exp: T },
    /// `amp · e^{rate·x}`
    Exp { amp: T, rate: T },
    /// `coef · (x^p - a^p)^exp`, the warped-time power.
    WarpPow { coef: T, exp: T, p: T, a: T },
    Sum(Vec<Expr<T>>),
    Product(Vec<Expr<T>>),
}

impl<T: Real> Expr<T> {
    pub fn eval(&self, x: T) -> T {
        match self {
            Expr::Const(c) => *c,
            Expr::Poly(c) => c.iter().rev().fold(T::zero(), |acc, &ci| acc * x + ci),
            Expr::Sin { amp, freq, phase } => *amp * (*freq * x + *phase).sin(),
            Expr::Cos { amp, freq, phase } => *amp * (*freq * x + *phase).cos(),
            Expr::Pow { coef, exp } => *coef * power(x, *exp),
            Expr::Exp { amp, rate } => *amp * (*rate * x).exp(),
            Expr::WarpPow { coef, exp, p, a } => *coef * power(x.powf(*p) - a.powf(*p), *exp),
            Expr::Sum(terms) => terms.iter().map(|e| e.eval(x)).sum(),
            Expr::Product(terms) => terms.iter().fold(T::one(), |acc, e| acc * e.eval(x)),
        }
    }

    pub fn derivative(&self, x: T) -> T {
        match self {
            Expr::Const(_) => T::zero(),
            Expr::Poly(c) => {
                let mut acc = T::zero();
                for (k, &ck) in c.iter().enumerate().skip(1).rev() {
                    acc = acc * x + ck * T::from_usize(k).unwrap();
                }
                acc
            }
            Expr::Sin { amp, freq, phase } => *amp * *freq * (*freq * x + *phase).cos(),
            Expr::Cos { amp, freq, phase } => -*amp * *freq * (*freq * x + *phase).sin(),
            Expr::Pow { coef, exp } => *coef * *exp * power(x, *exp - T::one()),
            Expr::Exp { amp, rate } => *amp * *rate * (*rate * x).exp(),
            Expr::WarpPow { coef, exp, p, a } => {
                let s = x.powf(*p) - a.powf(*p);
                *coef * *exp * power(s, *exp - T::one()) * *p * x.powf(*p - T::one())
            }
            Expr::Sum(terms) => terms.iter().map(|e| e.derivative(x)).sum(),
            Expr::Product(terms) => {
                let mut acc = T::zero();
                for i in 0..terms.len() {
                    let mut prod = terms[i].derivative(x);
                    for (j, e) in terms.iter().enumerate() {
                        if j != i {
                            prod *= e.eval(x);
                        }
                    }
                    acc += prod;
                }
                acc
            }
        }
    }

    /// True when the expression is a constant (after trivial folding).
    pub fn as_const(&self) -> Option<T> {
        match self {
            Expr::Const(c) => Some(*c),
            Expr::Poly(c) if c.iter().skip(1).all(|v| *v == T::zero()) => {
                Some(c.first().copied().unwrap_or_else(T::zero))
            }
            Expr::Sum(terms) => terms
                .iter()
                .try_fold(T::zero(), |acc, e| e.as_const().map(|c| acc + c)),
            Expr::Product(terms) => terms
                .iter()
                .try_fold(T::one(), |acc, e| e.as_const().map(|c| acc * c)),
            _ => None,
        }
    }
}

fn power<T: Real>(x: T, e: T) -> T {
    if x <= T::zero() {
        if e == T::zero() {
            T::one()
        } else if e > T::zero() {
            T::zero()
        } else {
            T::infinity()
        }
    } else {
        x.powf(e)
    }
}

/// Tabulated function with Fritsch-Carlson monotone cubic interpolation.
///
/// Outside the nodes the end values are held constant.
#[derive(Debug, Clone, PartialEq)]
pub struct Table<T> {
    nodes: Vec<T>,
    values: Vec<T>,
    slopes: Vec<T>,
}

impl<T: Real> Table<T> {
    pub fn new(nodes: Vec<T>, values: Vec<T>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(domain("table: nodes and values differ in length"));
        }
        if nodes.len() < 2 {
            return Err(domain("table: at least two nodes are needed"));
        }
        if nodes.iter().chain(&values).any(|v| !v.is_finite()) {
            return Err(domain("table: non-finite entry"));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(domain("table: nodes must be strictly increasing"));
        }
        let slopes = pchip_slopes(&nodes, &values);
        Ok(Self {
            nodes,
            values,
            slopes,
        })
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    fn locate(&self, x: T) -> Option<usize> {
        let n = self.nodes.len();
        if x <= self.nodes[0] || x >= self.nodes[n - 1] {
            return None;
        }
        let i = self.nodes.partition_point(|&v| v <= x);
        Some(i - 1)
    }

    pub fn eval(&self, x: T) -> T {
        let Some(i) = self.locate(x) else {
            return if x <= self.nodes[0] {
                self.values[0]
            } else {
                *self.values.last().unwrap()
            };
        };
        let h = self.nodes[i + 1] - self.nodes[i];
        let t = (x - self.nodes[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let two = lit::<T>(2.0);
        let three = lit::<T>(3.0);
        let h00 = two * t3 - three * t2 + T::one();
        let h10 = t3 - two * t2 + t;
        let h01 = three * t2 - two * t3;
        let h11 = t3 - t2;
        h00 * self.values[i]
            + h10 * h * self.slopes[i]
            + h01 * self.values[i + 1]
            + h11 * h * self.slopes[i + 1]
    }

    pub fn derivative(&self, x: T) -> T {
        let Some(i) = self.locate(x) else {
            return T::zero();
        };
        let h = self.nodes[i + 1] - self.nodes[i];
        let t = (x - self.nodes[i]) / h;
        let t2 = t * t;
        let six = lit::<T>(6.0);
        let d00 = six * t2 - six * t;
        let d10 = lit::<T>(3.0) * t2 - lit::<T>(4.0) * t + T::one();
        let d01 = six * t - six * t2;
        let d11 = lit::<T>(3.0) * t2 - lit::<T>(2.0) * t;
        (d00 * self.values[i] + d01 * self.values[i + 1]) / h
            + d10 * self.slopes[i]
            + d11 * self.slopes[i + 1]
    }
}

fn pchip_slopes<T: Real>(x: &[T], y: &[T]) -> Vec<T> {
    let n = x.len();
    let h: Vec<T> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<T> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
    if n == 2 {
        return vec![delta[0]; 2];
    }
    let mut d = vec![T::zero(); n];
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] > T::zero() {
            let w1 = lit::<T>(2.0) * h[i] + h[i - 1];
            let w2 = h[i] + lit::<T>(2.0) * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

fn end_slope<T: Real>(h0: T, h1: T, d0: T, d1: T) -> T {
    let d = ((lit::<T>(2.0) * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if d.signum() != d0.signum() {
        T::zero()
    } else if d0.signum() != d1.signum() && d.abs() > lit::<T>(3.0) * d0.abs() {
        lit::<T>(3.0) * d0
    } else {
        d
    }
}

/// A function of one variable that the operators can sample.
#[derive(Clone)]
pub enum SampledFunction<T> {
    Expr(Expr<T>),
    Table(Table<T>),
    Custom {
        value: Scalar<T>,
        derivative: Option<Scalar<T>>,
    },
}

impl<T: Real> SampledFunction<T> {
    pub fn constant(c: T) -> Self {
        SampledFunction::Expr(Expr::Const(c))
    }

    pub fn zero() -> Self {
        Self::constant(T::zero())
    }

    pub fn custom<F>(f: F) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        SampledFunction::Custom {
            value: Arc::new(f),
            derivative: None,
        }
    }

    pub fn custom_with_derivative<F, D>(f: F, df: D) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
        D: Fn(T) -> T + Send + Sync + 'static,
    {
        SampledFunction::Custom {
            value: Arc::new(f),
            derivative: Some(Arc::new(df)),
        }
    }

    pub fn table(nodes: Vec<T>, values: Vec<T>) -> Result<Self> {
        Table::new(nodes, values).map(SampledFunction::Table)
    }

    pub fn eval(&self, x: T) -> T {
        match self {
            SampledFunction::Expr(e) => e.eval(x),
            SampledFunction::Table(t) => t.eval(x),
            SampledFunction::Custom { value, .. } => value(x),
        }
    }

    /// Derivative when one is available in closed form or from the
    /// interpolant; a central difference otherwise.
    pub fn derivative(&self, x: T) -> T {
        match self {
            SampledFunction::Expr(e) => e.derivative(x),
            SampledFunction::Table(t) => t.derivative(x),
            SampledFunction::Custom {
                derivative: Some(d),
                ..
            } => d(x),
            SampledFunction::Custom { value, .. } => {
                let h = T::epsilon().cbrt() * (T::one() + x.abs());
                (value(x + h) - value(x - h)) / (h + h)
            }
        }
    }

    /// The constant value, if the function is known to be constant.
    pub fn as_const(&self) -> Option<T> {
        match self {
            SampledFunction::Expr(e) => e.as_const(),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_const() == Some(T::zero())
    }
}

impl<T: fmt::Debug> fmt::Debug for SampledFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampledFunction::Expr(e) => f.debug_tuple("Expr").field(e).finish(),
            SampledFunction::Table(t) => f
                .debug_struct("Table")
                .field("nodes", &t.nodes.len())
                .finish(),
            SampledFunction::Custom { derivative, .. } => f
                .debug_struct("Custom")
                .field("has_derivative", &derivative.is_some())
                .finish(),
        }
    }
}

impl<T: Real> From<Expr<T>> for SampledFunction<T> {
    fn from(e: Expr<T>) -> Self {
        SampledFunction::Expr(e)
    }
}
