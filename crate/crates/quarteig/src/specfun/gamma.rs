//! Gamma function on the positive real axis, Lanczos approximation.

use crate::error::{Error, Result};

// Godfrey's 15-term Lanczos coefficient set for g = 607/128. Relative
// accuracy of the rational part is a few ulps over the positive axis.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

fn lanczos_sum(x: f64) -> f64 {
    // Rational part A_g(x - 1) of the Lanczos formula.
    let z = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + k as f64);
    }
    sum
}

/// Natural logarithm of Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos argument away from zero.
        let s = (std::f64::consts::PI * x).sin();
        return Ok(std::f64::consts::PI.ln() - s.ln() - ln_gamma(1.0 - x)?);
    }
    let base = x + LANCZOS_G - 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (x - 0.5) * base.ln() - base
        + lanczos_sum(x).ln())
}

/// Gamma(x) for x > 0.
///
/// Negative half-integer arguments required by closed-form constants are
/// handled at their call sites through the reflection formula; the library
/// surface deliberately stays on the positive axis where Gamma has no poles.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma_fn requires x > 0, got {x}")));
    }
    if x > 171.61 {
        return Err(Error::Range(format!("gamma_fn overflows for x = {x}")));
    }
    // Direct product form below ~10 avoids exp(ln_gamma) rounding for the
    // small arguments every closed-form constant in the crate consumes.
    if x < 12.0 {
        let mut shift = 1.0;
        let mut y = x;
        while y < 1.5 {
            shift /= y;
            y += 1.0;
        }
        while y > 2.5 {
            y -= 1.0;
            shift *= y;
        }
        let base = y + LANCZOS_G - 0.5;
        return Ok(shift
            * ((y - 0.5) * base.ln() - base).exp()
            * lanczos_sum(y)
            * (2.0 * std::f64::consts::PI).sqrt());
    }
    Ok(ln_gamma(x)?.exp())
}
