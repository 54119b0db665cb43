use crate::error::{domain, Result};
use crate::scalar::{lit, Real};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.round()
}

fn lanczos_sum<T: Real>(z: T) -> T {
    let mut acc = lit::<T>(LANCZOS[0]);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += lit::<T>(*c) / (z + T::from_usize(i).unwrap());
    }
    acc
}

/// Γ(x) for real `x`, Lanczos approximation with reflection below 1/2.
pub fn gamma_eval<T: Real>(x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(domain("gamma: non-finite argument"));
    }
    if is_pole(x) {
        return Err(domain(format!("gamma: pole at {x}")));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        let s = sin_pi(x);
        return T::PI() / (s * gamma_unchecked(T::one() - x));
    }
    // exact factorials keep integer arguments on the nose
    if x == x.round() && x <= lit(30.0) {
        let mut acc = T::one();
        let mut k = lit::<T>(2.0);
        while k < x {
            acc *= k;
            k += T::one();
        }
        return acc;
    }
    let z = x - T::one();
    let t = z + lit::<T>(LANCZOS_G) + half;
    let sqrt_two_pi = (T::PI() * lit(2.0)).sqrt();
    // split the power so t^(z+1/2) does not overflow before e^{-t} kicks in
    let p = t.powf((z + half) * half);
    sqrt_two_pi * p * ((-t).exp() * p) * lanczos_sum(z)
}

/// 1/Γ(x), returning 0 at the poles of Γ.
pub fn rgamma<T: Real>(x: T) -> T {
    if is_pole(x) {
        return T::zero();
    }
    if x > lit(170.0) {
        let (lg, sign) = ln_gamma_signed(x);
        return sign * (-lg).exp();
    }
    T::one() / gamma_unchecked(x)
}

/// ln|Γ(x)| together with the sign of Γ(x). Poles yield `(+inf, 1)`.
pub fn ln_gamma_signed<T: Real>(x: T) -> (T, T) {
    if is_pole(x) {
        return (T::infinity(), T::one());
    }
    let half = lit::<T>(0.5);
    if x < half {
        let s = sin_pi(x);
        let (lg, sg) = ln_gamma_signed(T::one() - x);
        let sign = if s < T::zero() { -sg } else { sg };
        return (T::PI().ln() - s.abs().ln() - lg, sign);
    }
    let z = x - T::one();
    let t = z + lit::<T>(LANCZOS_G) + half;
    let lg = half * (T::PI() * lit(2.0)).ln() + (z + half) * t.ln() - t + lanczos_sum(z).ln();
    (lg, T::one())
}

/// sin(πx) with exact zeros at the integers.
pub(crate) fn sin_pi<T: Real>(x: T) -> T {
    let r = x - (x * lit(0.5)).floor() * lit(2.0); // r in [0, 2)
    if r == r.round() {
        return T::zero();
    }
    if r <= lit(0.5) {
        (T::PI() * r).sin()
    } else if r <= lit(1.5) {
        (T::PI() * (T::one() - r)).sin()
    } else {
        (T::PI() * (r - lit(2.0))).sin()
    }
}

/// cos(πx) with exact zeros at the half-integers.
pub(crate) fn cos_pi<T: Real>(x: T) -> T {
    sin_pi(x + lit(0.5))
}
