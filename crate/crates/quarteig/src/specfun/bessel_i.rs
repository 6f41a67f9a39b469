//! Normalized modified Bessel function of the first kind,
//! I~_a(x) = (x/2)^-a I_a(x).

use super::gamma::gamma_fn;
use super::Order;
use crate::error::{Error, Result};

/// I~_a(x) for a >= -1/2, x >= 0.
///
/// Ascending series throughout: all terms are positive on the real axis, so
/// the sum carries no cancellation. Unscaled evaluation overflows near
/// x ~ 700; use [`bessel_i_norm_scaled`] past that point.
pub fn bessel_i_norm(alpha: Order, x: f64) -> Result<f64> {
    let a = alpha.value();
    check_args(a, x)?;
    if x > 690.0 {
        return Err(Error::Range(format!(
            "bessel_i_norm overflows for x = {x}; use bessel_i_norm_scaled"
        )));
    }
    Ok(series(a, x))
}

/// e^{-x} I~_a(x), the overflow-guarded variant.
pub fn bessel_i_norm_scaled(alpha: Order, x: f64) -> Result<f64> {
    let a = alpha.value();
    check_args(a, x)?;
    if x <= 400.0 {
        return Ok(series(a, x) * (-x).exp());
    }
    // Large-argument expansion of e^{-x} I_a(x) = (2 pi x)^{-1/2} sum (-)^k c_k.
    let mu = 4.0 * a * a;
    let mut sum = 1.0;
    let mut c = 1.0f64;
    for k in 1..30 {
        let kf = k as f64;
        c *= -(mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (8.0 * kf * x);
        sum += c;
        if c.abs() < 1e-17 {
            break;
        }
    }
    Ok((x / 2.0).powf(-a) * sum / (2.0 * std::f64::consts::PI * x).sqrt())
}

fn check_args(a: f64, x: f64) -> Result<()> {
    if a < -0.5 {
        return Err(Error::Domain(format!(
            "bessel_i_norm requires order >= -1/2, got {a}"
        )));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_i_norm requires x >= 0, got {x}"
        )));
    }
    Ok(())
}

fn series(a: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0 / gamma_fn(a + 1.0).expect("a + 1 > 0");
    let mut sum = term;
    for k in 0..1600 {
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (a + kf + 1.0));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum
}
