//! Real-argument evaluation of the classical special functions consumed by
//! the closed forms and integrands elsewhere in the crate: Gamma, normalized
//! Bessel functions J~, I~, K~, Gegenbauer and Laguerre polynomials, and the
//! Gauss hypergeometric series.
//!
//! "Normalized" Bessel functions carry the factor (x/2)^(-alpha) that renders
//! J~ and I~ entire and finite at the origin:
//!
//! ```text
//! J~_a(x) = (x/2)^-a J_a(x),   I~_a(x) = (x/2)^-a I_a(x),
//! K~_a(x) = (x/2)^-a K_a(x).
//! ```
//!
//! All functions are pure and reentrant; there is no shared mutable state.

mod bessel_i;
mod bessel_j;
mod bessel_k;
pub(crate) mod cxkernel;
mod gamma;
mod hyp;
mod poly;

pub use bessel_i::{bessel_i_norm, bessel_i_norm_scaled};
pub use bessel_j::bessel_j_norm;
pub use bessel_k::bessel_k_norm;
pub use gamma::{gamma_fn, ln_gamma};
pub use hyp::hyp2f1;
pub use poly::{gegenbauer_norm, laguerre};

use crate::error::{Error, Result};

/// A Bessel or Gegenbauer order.
///
/// In-crate usage ranges over half-integers >= -1/2 (Bessel orders mu/2,
/// nu/2) and small positive reals (Gegenbauer indices).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Order(value))
        } else {
            Err(Error::Domain(format!("order must be finite, got {value}")))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;
    fn try_from(value: f64) -> Result<Self> {
        Order::new(value)
    }
}

/// Classify an order that is known to be an integer or half-integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum OrderKind {
    Integer(i64),
    /// `HalfInteger(m)` means the order is m + 1/2.
    HalfInteger(i64),
    Generic,
}

pub(crate) fn classify_order(a: f64) -> OrderKind {
    let r = a.round();
    if (a - r).abs() < 1e-12 {
        return OrderKind::Integer(r as i64);
    }
    let h = (a - 0.5).round();
    if (a - 0.5 - h).abs() < 1e-12 {
        return OrderKind::HalfInteger(h as i64);
    }
    OrderKind::Generic
}
