//! Normalized modified Bessel function of the second kind,
//! K~_a(x) = (x/2)^-a K_a(x), for a >= -1/2 and x > 0.
//!
//! Half-integer orders reduce to exact exponential closed forms; integer
//! orders go through the shared regime kernel in `cxkernel`; other orders use
//! the reflection formula K_a = pi (I_{-a} - I_a) / (2 sin a pi) at small x
//! and the cosh-integral representation beyond.

use num_complex::Complex64;

use super::cxkernel;
use super::gamma::ln_gamma;
use super::{classify_order, Order, OrderKind};
use crate::error::{Error, Result};

/// K~_a(x), exponentially decaying for large x, divergent at x = 0.
pub fn bessel_k_norm(alpha: Order, x: f64) -> Result<f64> {
    let a = alpha.value();
    if a < -0.5 {
        return Err(Error::Domain(format!(
            "bessel_k_norm requires order >= -1/2, got {a}"
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_k_norm requires x > 0, got {x} (K~ diverges at 0)"
        )));
    }
    let value = match classify_order(a) {
        OrderKind::HalfInteger(_) | OrderKind::Integer(_) => {
            cxkernel::bessel_k_norm_cx_seq(a, 1, Complex64::new(x, 0.0))[0].re
        }
        OrderKind::Generic => generic_order(a, x),
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range(format!(
            "bessel_k_norm overflows at order {a}, x = {x}"
        )))
    }
}

fn generic_order(a: f64, x: f64) -> f64 {
    if x <= 3.5 {
        // K_a = pi (I_{-a} - I_a) / (2 sin(pi a)); in normalized form the
        // I_{-a} term picks up (x/2)^{-2a}. The reciprocal-Gamma series keeps
        // I_{-a} well defined for every real order.
        let sin_api = (std::f64::consts::PI * a).sin();
        let i_neg = series_rgamma(-a, x);
        let i_pos = series_rgamma(a, x);
        std::f64::consts::FRAC_PI_2 / sin_api * ((x / 2.0).powf(-2.0 * a) * i_neg - i_pos)
    } else {
        // cosh-integral representation, any order.
        let h = 0.08;
        let t_max = (1.0 + 46.0 / x).acosh() + 0.5;
        let steps = (t_max / h).ceil() as usize;
        let mut sum = 0.5 * (-x).exp();
        for i in 1..=steps {
            let t = h * i as f64;
            sum += (-x * t.cosh()).exp() * (a * t).cosh();
        }
        (x / 2.0).powf(-a) * sum * h
    }
}

/// I~ series written with reciprocal Gamma factors so negative orders work.
fn series_rgamma(a: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut sum = 0.0;
    let mut qk = 1.0;
    let mut kfac = 1.0;
    for k in 0..60 {
        let kf = k as f64;
        if k > 0 {
            qk *= q;
            kfac *= kf;
        }
        sum += qk / kfac * rgamma(a + kf + 1.0);
    }
    sum
}

/// 1 / Gamma(y) for any real y (entire function).
fn rgamma(y: f64) -> f64 {
    if y > 0.0 {
        match ln_gamma(y) {
            Ok(lg) if lg < 700.0 => (-lg).exp(),
            _ => 0.0,
        }
    } else {
        // 1/Gamma(y) = Gamma(1-y) sin(pi y) / pi.
        let lg = ln_gamma(1.0 - y).expect("1 - y > 0");
        (std::f64::consts::PI * y).sin() / std::f64::consts::PI * lg.exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_i_norm;

    fn kv(a: f64, x: f64) -> f64 {
        bessel_k_norm(Order::new(a).unwrap(), x).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn half_order_closed_forms() {
        let sq_pi = std::f64::consts::PI.sqrt();
        // K~_{1/2}(x) = sqrt(pi) e^{-x} / x  (from K_{1/2} = sqrt(pi/2x) e^{-x}).
        assert!(rel(kv(0.5, 1.0), sq_pi * (-1.0f64).exp()) < 1e-14);
        assert!(rel(kv(0.5, 2.0), sq_pi * (-2.0f64).exp() / 2.0) < 1e-14);
        // K~_{-1/2}(x) = (sqrt(pi)/2) e^{-x}.
        for &x in &[0.3, 1.0, 10.0, 80.0] {
            assert!(rel(kv(-0.5, x), 0.5 * sq_pi * (-x).exp()) < 1e-13);
        }
    }

    #[test]
    fn k0_small_argument_log_behaviour() {
        // K~_0(x) -> -log(x/2) - gamma as x -> 0+; series oracle at x = 1e-6.
        let x = 1e-6;
        let gamma_e = 0.577_215_664_901_532_861;
        let leading = -(x / 2.0f64).ln() - gamma_e;
        assert!((kv(0.0, x) - leading).abs() < 1e-11);
    }

    /// Classical Wronskian restated in normalized form:
    /// I~_a K~_{a+1} + I~_{a+1} K~_a = (1/2)(x/2)^{-2a-2}.
    #[test]
    fn wronskian_identity() {
        for &a in &[-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0] {
            for &x in &[0.4, 1.0, 3.3, 3.7, 9.0, 17.0, 19.0, 42.0] {
                let lhs = bessel_i_norm(Order::new(a).unwrap(), x).unwrap() * kv(a + 1.0, x)
                    + bessel_i_norm(Order::new(a + 1.0).unwrap(), x).unwrap() * kv(a, x);
                let rhs = 0.5 * (x / 2.0f64).powf(-2.0 * a - 2.0);
                assert!(rel(lhs, rhs) < 1e-10, "a={a} x={x}: rel {}", rel(lhs, rhs));
            }
        }
    }

    #[test]
    fn generic_order_agrees_with_near_half_integer() {
        // A generic order close to 3/2 must approach the half-integer value.
        for &x in &[0.7, 2.0, 5.0, 12.0] {
            let generic = kv(1.5 + 1e-7, x);
            let exact = kv(1.5, x);
            assert!(rel(generic, exact) < 1e-5, "x={x}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_k_norm(Order::new(0.0).unwrap(), 0.0).is_err());
        assert!(bessel_k_norm(Order::new(0.0).unwrap(), -3.0).is_err());
        assert!(bessel_k_norm(Order::new(-0.75).unwrap(), 1.0).is_err());
    }
}
