//! Gamma, reciprocal gamma, log-gamma, beta and the generalized factorial.
//!
//! Every operator coefficient in the crate is a ratio of gamma values, so this
//! module fixes the pole convention once: `gamma` reports a [`PoleReport`] at
//! the non-positive integers while [`rgamma`] is total and returns exactly zero
//! there.

use core::f64::consts::PI;

use crate::error::{Error, Result};

#[cfg(doc)]
use crate::error::PoleReport;

/// Distance from an integer below which an argument is snapped onto a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Largest argument for which `gamma` is finite in double precision.
const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

/// A finite real argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RealArg(f64);

impl RealArg {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(RealArg(value))
        } else {
            Err(Error::domain("argument", "value must be finite"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The pole this argument sits on, if it is a non-positive integer within
    /// [`POLE_TOLERANCE`].
    pub fn pole(self) -> Option<f64> {
        let nearest = libm::round(self.0);
        if nearest <= 0.0 && libm::fabs(self.0 - nearest) <= POLE_TOLERANCE {
            Some(nearest)
        } else {
            None
        }
    }
}

/// Whether `x` counts as a pole of the gamma function.
pub fn is_pole(x: f64) -> bool {
    x.is_finite() && RealArg(x).pole().is_some()
}

/// `sin(pi * x)` with the argument reduced before multiplying by pi, so zeros at
/// the integers are exact and large arguments keep their accuracy.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let y = rem_euclid(x, 2.0);
    let quadrant = libm::round(2.0 * y);
    let r = PI * (y - 0.5 * quadrant);
    match quadrant as i32 {
        0 | 4 => libm::sin(r),
        1 => libm::cos(r),
        2 => -libm::sin(r),
        _ => -libm::cos(r),
    }
}

/// `x mod m` in `[0, m]`; the upper end only through rounding of tiny
/// negative inputs.
pub(crate) fn rem_euclid(x: f64, m: f64) -> f64 {
    let r = x % m;
    if r < 0.0 {
        r + m
    } else {
        r
    }
}

fn lanczos_sum(z: f64) -> f64 {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, &c)| {
            acc + c / (z + (i + 1) as f64)
        })
}

/// Lanczos approximation, valid for `x >= 0.5`.
fn gamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // t^(z+1/2) is split in two so the power does not overflow before e^-t
    // brings it back into range.
    let half = libm::pow(t, 0.5 * (z + 0.5));
    SQRT_2PI * half * (half * libm::exp(-t)) * lanczos_sum(z)
}

/// Exact-recurrence values at small integers and half-integers.
fn gamma_tabulated(x: f64) -> Option<f64> {
    if !(0.5..=GAMMA_OVERFLOW).contains(&x) {
        return None;
    }
    if x == libm::floor(x) {
        let n = x as u32;
        return Some((1..n).fold(1.0, |acc, k| acc * k as f64));
    }
    let twice = 2.0 * x;
    if twice == libm::floor(twice) && x <= 60.5 {
        // Γ(n + 1/2) = √π · (1/2)(3/2)…(n − 1/2)
        let n = (x - 0.5) as u32;
        return Some((0..n).fold(libm::sqrt(PI), |acc, k| acc * (k as f64 + 0.5)));
    }
    None
}

fn gamma_positive(x: f64) -> f64 {
    gamma_tabulated(x).unwrap_or_else(|| gamma_lanczos(x))
}

/// Euler's gamma function.
///
/// Uses the Lanczos approximation (g = 7, nine coefficients) for `x >= 0.5` and
/// the reflection formula below that. Small integers and half-integers go
/// through their exact recurrences.
pub fn gamma(x: f64) -> Result<f64> {
    let arg = RealArg::new(x)?;
    if let Some(location) = arg.pole() {
        return Err(Error::pole(location, "gamma"));
    }
    if x >= 0.5 {
        if x > GAMMA_OVERFLOW {
            return Ok(f64::INFINITY);
        }
        Ok(gamma_positive(x))
    } else {
        Ok(PI / (sin_pi(x) * gamma_positive(1.0 - x)))
    }
}

/// Reciprocal gamma `1/Γ(x)`, an entire function.
///
/// Returns exactly zero at the poles of Γ (snapped with [`POLE_TOLERANCE`]),
/// which is what makes every operator coefficient total.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 0.0;
    }
    if is_pole(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > GAMMA_OVERFLOW {
            return libm::exp(-ln_gamma_positive(x));
        }
        1.0 / gamma_positive(x)
    } else {
        sin_pi(x) * gamma_positive(1.0 - x) / PI
    }
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 0.5 {
        return libm::log(PI / sin_pi(x)) - ln_gamma_positive(1.0 - x);
    }
    if x <= 100.0 {
        return libm::log(gamma_positive(x));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * libm::log(t) - t + libm::log(lanczos_sum(z))
}

/// Natural log of Γ(x) for `x > 0`. Stays finite far past the point where
/// `gamma` overflows.
pub fn ln_gamma(x: f64) -> Result<f64> {
    let arg = RealArg::new(x)?;
    if arg.value() <= 0.0 {
        return Err(Error::domain("ln_gamma", "argument must be positive"));
    }
    Ok(ln_gamma_positive(x))
}

/// Euler's beta function `B(p, q) = Γ(p)Γ(q)/Γ(p+q)` for positive arguments.
pub fn beta(p: f64, q: f64) -> Result<f64> {
    RealArg::new(p)?;
    RealArg::new(q)?;
    if p <= 0.0 || q <= 0.0 {
        return Err(Error::domain("beta", "both arguments must be positive"));
    }
    let sum = p + q;
    if sum < 170.0 {
        Ok(gamma_positive_any(p) * gamma_positive_any(q) / gamma_positive_any(sum))
    } else {
        Ok(libm::exp(
            ln_gamma_positive(p) + ln_gamma_positive(q) - ln_gamma_positive(sum),
        ))
    }
}

fn gamma_positive_any(x: f64) -> f64 {
    if x >= 0.5 {
        gamma_positive(x)
    } else {
        PI / (sin_pi(x) * gamma_positive(1.0 - x))
    }
}

/// Generalized factorial `p! = Γ(p + 1)`.
pub fn genfactorial(p: f64) -> Result<f64> {
    RealArg::new(p)?;
    let shifted = p + 1.0;
    if let Some(location) = RealArg(shifted).pole() {
        return Err(Error::pole(location, "genfactorial"));
    }
    gamma(shifted)
}
