//! Complex-argument evaluation kernels for the normalized modified Bessel
//! functions I~ and K~.
//!
//! Crate-private: the public `specfun` surface stays real-argument, but the
//! generating-function contour in `eigen` samples these along t = r e^{i
//! theta}, which puts the K~ argument in the cone |arg z| < pi/3 (Re z > 0)
//! and the I~ argument anywhere in the plane. Real-argument K~ for integer
//! orders delegates here with a zero imaginary part.
//!
//! Regimes for integer-order K~ (half-integer orders have exact closed
//! forms everywhere):
//!   * |z| <= 3.5   ascending log-series (cancellation bounded by e^{2|z|}),
//!   * |z| <  18    trapezoid on K_n(z) = int_0^inf e^{-z cosh t} cosh(n t) dt,
//!   * |z| >= 18    asymptotic expansion.

use num_complex::Complex64;

use super::gamma::gamma_fn;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_861;

/// I~_a(z) by the ascending series, together with the sum of absolute values
/// of the terms. The second value bounds the rounding amplification of the
/// series and feeds the contour extractor's noise floor.
pub(crate) fn bessel_i_norm_cx(a: f64, z: Complex64) -> (Complex64, f64) {
    let w = z * z * 0.25;
    let wa = w.norm();
    let mut term = Complex64::new(1.0 / gamma_fn(a + 1.0).expect("a + 1 > 0"), 0.0);
    let mut abs_term = term.re.abs();
    let mut sum = term;
    let mut abs_sum = abs_term;
    for k in 0..400 {
        let kf = k as f64;
        term *= w / ((kf + 1.0) * (a + kf + 1.0));
        abs_term *= wa / ((kf + 1.0) * (a + kf + 1.0));
        sum += term;
        abs_sum += abs_term;
        if abs_term < 1e-18 * abs_sum {
            break;
        }
    }
    (sum, abs_sum)
}

/// K~ at orders base, base+1, ..., base+count-1 for Re z > 0.
///
/// `base` must be an integer or half-integer >= -1/2; this is the only shape
/// the generating function ever produces (nu/2 with integer nu >= -1).
pub(crate) fn bessel_k_norm_cx_seq(base: f64, count: usize, z: Complex64) -> Vec<Complex64> {
    debug_assert!(z.re > 0.0, "K~ kernel requires Re z > 0, got {z}");
    debug_assert!(base >= -0.5);
    let two_base = 2.0 * base;
    let is_half = (two_base - two_base.round()).abs() < 1e-9 && (two_base.round() as i64) % 2 != 0;
    let (anchor_order, k0, k1) = if is_half {
        // K~_{-1/2}(z) = (sqrt(pi)/2) e^{-z},  K~_{1/2}(z) = sqrt(pi) e^{-z} / z.
        let e = (-z).exp() * std::f64::consts::PI.sqrt();
        (-0.5, e * 0.5, e / z)
    } else {
        let (k0, k1) = k_integer_pair(z);
        (0.0, k0, k1)
    };
    // Upward recurrence K~_{o+2} = (4/z^2)(K~_o + (o+1) K~_{o+1}); stable
    // since K grows with the order.
    let four_over_z2 = 4.0 / (z * z);
    let mut lo = k0; // K~_order
    let mut hi = k1; // K~_{order+1}
    let mut order = anchor_order;
    while order < base - 0.25 {
        let next = four_over_z2 * (lo + (order + 1.0) * hi);
        lo = hi;
        hi = next;
        order += 1.0;
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(lo);
        let next = four_over_z2 * (lo + (order + 1.0) * hi);
        lo = hi;
        hi = next;
        order += 1.0;
    }
    out
}

/// K~_0 and K~_1 for Re z > 0.
fn k_integer_pair(z: Complex64) -> (Complex64, Complex64) {
    let za = z.norm();
    if za <= 3.5 {
        k_integer_pair_series(z)
    } else if za < 18.0 {
        (k_cosh_integral(0.0, z), k_cosh_integral(1.0, z))
    } else {
        (k_asymptotic(0.0, z), k_asymptotic(1.0, z))
    }
}

/// Ascending log-series for K~_0, K~_1:
///   K~_0(z) = -(ln(z/2) + g) I~_0(z) + sum_{k>=1} h_k w^k / (k!)^2
///   K~_1(z) = 2/z^2 + (ln(z/2) + g) I~_1(z)
///             - (1/2) sum_{k>=0} (h_k + h_{k+1}) w^k / (k! (k+1)!)
/// with w = z^2/4, h_k = 1 + 1/2 + ... + 1/k and g Euler's constant (the
/// digamma factors psi(k+1) + psi(k+2) split into -2g + h_k + h_{k+1}).
fn k_integer_pair_series(z: Complex64) -> (Complex64, Complex64) {
    let w = z * z * 0.25;
    let log_half_z = (z * 0.5).ln();
    let (i0, _) = bessel_i_norm_cx(0.0, z);
    let (i1, _) = bessel_i_norm_cx(1.0, z);

    let mut k0 = -(log_half_z + EULER_GAMMA) * i0;
    let mut k1 = 2.0 / (z * z) + (log_half_z + EULER_GAMMA) * i1;

    let mut h = 0.0f64; // h_k
    let mut t0 = Complex64::new(1.0, 0.0); // w^k / (k!)^2
    let mut t1 = Complex64::new(1.0, 0.0); // w^k / (k! (k+1)!)
    k1 -= 0.5 * (h + 1.0) * t1; // k = 0 term of the K~_1 sum
    for k in 1..80 {
        let kf = k as f64;
        h += 1.0 / kf;
        t0 *= w / (kf * kf);
        t1 *= w / (kf * (kf + 1.0));
        k0 += h * t0;
        k1 -= 0.5 * (h + h + 1.0 / (kf + 1.0)) * t1;
        if t0.norm() < 1e-18 * k0.norm().max(1.0) && k > 6 {
            break;
        }
    }
    (k0, k1)
}

/// Trapezoid rule on K_n(z) = int_0^inf e^{-z cosh t} cosh(n t) dt, returned
/// in normalized form. Positive-real-part decay makes the rule spectrally
/// accurate in the cone this crate uses (|arg z| < pi/3).
fn k_cosh_integral(n: f64, z: Complex64) -> Complex64 {
    let h = 0.08;
    let t_max = (1.0 + 46.0 / z.re).acosh() + 0.5;
    let steps = (t_max / h).ceil() as usize;
    let mut sum = 0.5 * (-z).exp(); // t = 0 node, cosh(0) = 1
    for i in 1..=steps {
        let t = h * i as f64;
        let ct = t.cosh();
        sum += (-z * ct).exp() * (n * t).cosh();
    }
    sum *= h;
    (z * 0.5).powf(-n) * sum
}

/// Large-|z| asymptotic expansion of K~_a.
fn k_asymptotic(a: f64, z: Complex64) -> Complex64 {
    let mu = 4.0 * a * a;
    let mut sum = Complex64::new(1.0, 0.0);
    let mut c = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for k in 1..40 {
        let kf = k as f64;
        c *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (8.0 * kf) / z;
        if c.norm() > prev {
            break;
        }
        prev = c.norm();
        sum += c;
        if c.norm() < 1e-18 {
            break;
        }
    }
    let front = (std::f64::consts::FRAC_PI_2 / z).sqrt() * (-z).exp();
    (z * 0.5).powf(-a) * front * sum
}
