//! Gegenbauer and Laguerre polynomials by three-term recurrence.

use super::gamma::gamma_fn;
use super::Order;
use crate::error::{Error, Result};

/// Normalized Gegenbauer polynomial C~_n^l(x) = Gamma(l) C_n^l(x).
///
/// At l = 0 the plain product diverges; the limit convention
/// lim_{l->0+} Gamma(l) C_n^l(cos theta) = (2/n) cos(n theta) applies for
/// n >= 1 and is the value returned there. l = 0 with n = 0 is a domain
/// error (the limit diverges).
pub fn gegenbauer_norm(n: u32, lambda: Order, x: f64) -> Result<f64> {
    let l = lambda.value();
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "gegenbauer_norm requires x in [-1, 1], got {x}"
        )));
    }
    if l == 0.0 {
        if n == 0 {
            return Err(Error::Domain(
                "gegenbauer_norm at lambda = 0 requires n >= 1".into(),
            ));
        }
        let theta = x.clamp(-1.0, 1.0).acos();
        return Ok(2.0 / n as f64 * (n as f64 * theta).cos());
    }
    if l < 0.0 {
        return Err(Error::Domain(format!(
            "gegenbauer_norm requires lambda >= 0, got {l}"
        )));
    }
    // n C_n = 2(n + l - 1) x C_{n-1} - (n + 2l - 2) C_{n-2}
    let mut prev = 1.0; // C_0
    if n == 0 {
        return gamma_fn(l).map(|g| g * prev);
    }
    let mut cur = 2.0 * l * x; // C_1
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * (kf + l - 1.0) * x * cur - (kf + 2.0 * l - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    Ok(gamma_fn(l)? * cur)
}

/// Generalized Laguerre polynomial L_j^mu(x), mu > -1.
pub fn laguerre(j: u32, mu: f64, x: f64) -> f64 {
    // L_{k+1} = ((2k + 1 + mu - x) L_k - (k + mu) L_{k-1}) / (k + 1)
    let mut prev = 1.0;
    if j == 0 {
        return prev;
    }
    let mut cur = mu + 1.0 - x;
    for k in 1..j {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + mu - x) * cur - (kf + mu) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
