//! Gauss hypergeometric function 2F1 inside the unit disc.

use crate::error::{Error, Result};

/// 2F1(a, b; c; z) summed termwise for |z| < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if c <= 0.0 && (c - c.round()).abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "hyp2f1 pole: c must not be a non-positive integer, got {c}"
        )));
    }
    if !(z.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "hyp2f1 series diverges for |z| >= 1, got z = {z}"
        )));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..10_000 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::Accuracy {
        context: "hyp2f1 series",
        estimate: term.abs() / sum.abs().max(1e-300),
        target: 1e-12,
    })
}
