//! The fourth-order operator in expanded coefficient form.
//!
//! From the factored composition
//! (1/x^2)((theta+mu)(theta+mu+nu) - x^2)(theta(theta+nu) - x^2) with
//! theta = x d/dx, expanding once and dividing by x^2 gives
//!
//! ```text
//! D u = x^2 u'''' + 2(mu+nu+3) x u'''
//!     + [ (mu^2 + 3 mu nu + nu^2 + 6 mu + 6 nu + 7) - 2 x^2 ] u''
//!     + [ (mu+1)(nu+1)(mu+nu+1)/x - 2(mu+nu+3) x ] u'
//!     + [ x^2 - (mu+2)(mu+nu+2) ] u.
//! ```
//!
//! The expansion is validated against the factored theta-form on monomials
//! x^k, for which theta x^k = k x^k makes both forms exactly computable
//! (see tests).

use super::FunctionJet;
use crate::params::ParamPair;

/// Apply D_{mu,nu} to a function jet.
pub fn apply_d(p: ParamPair, jet: &FunctionJet) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    let x = jet.x;
    let x2 = x * x;
    let [u, d1, d2, d3, d4] = jet.values;
    let c3 = 2.0 * (mu + nu + 3.0);
    let c2 = mu * mu + 3.0 * mu * nu + nu * nu + 6.0 * (mu + nu) + 7.0;
    let c1 = (mu + 1.0) * (nu + 1.0) * (mu + nu + 1.0);
    let c0 = (mu + 2.0) * (mu + nu + 2.0);
    x2 * d4 + c3 * x * d3 + (c2 - 2.0 * x2) * d2 + (c1 / x - c3 * x) * d1 + (x2 - c0) * u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamPair;

    /// Factored form on monomials: with theta x^k = k x^k,
    /// P2 x^k = k(k+nu) x^k - x^{k+2} and P1 x^m = (m+mu)(m+mu+nu) x^m - x^{m+2},
    /// so (1/x^2) P1 P2 x^k is exactly
    /// k(k+nu)(k+mu)(k+mu+nu) x^{k-2}
    ///   - [k(k+nu) + (k+2+mu)(k+2+mu+nu)] x^k + x^{k+2}.
    fn factored_on_monomial(mu: f64, nu: f64, k: f64, x: f64) -> f64 {
        k * (k + nu) * (k + mu) * (k + mu + nu) * x.powf(k - 2.0)
            - (k * (k + nu) + (k + 2.0 + mu) * (k + 2.0 + mu + nu)) * x.powf(k)
            + x.powf(k + 2.0)
    }

    fn monomial_jet(k: f64, x: f64) -> FunctionJet {
        FunctionJet {
            x,
            values: [
                x.powf(k),
                k * x.powf(k - 1.0),
                k * (k - 1.0) * x.powf(k - 2.0),
                k * (k - 1.0) * (k - 2.0) * x.powf(k - 3.0),
                k * (k - 1.0) * (k - 2.0) * (k - 3.0) * x.powf(k - 4.0),
            ],
        }
    }

    #[test]
    fn expansion_matches_factored_form_on_monomials() {
        for p in ParamPair::enumerate(7) {
            for k in 0..=6u32 {
                for &x in &[0.5, 1.3, 2.7] {
                    let jet = monomial_jet(k as f64, x);
                    let expanded = apply_d(p, &jet);
                    let factored = factored_on_monomial(p.mu_f(), p.nu_f(), k as f64, x);
                    let scale = factored.abs().max(1.0);
                    assert!(
                        (expanded - factored).abs() / scale < 1e-13,
                        "(mu,nu)=({},{}) k={k} x={x}: {expanded} vs {factored}",
                        p.mu(),
                        p.nu()
                    );
                }
            }
        }
    }

    #[test]
    fn annihilates_the_bottom_k_bessel() {
        // K~_{nu/2} solves D u = 0; spot-check through an explicit jet of
        // K_0 at mu = nu = 0 using K_0' = -K_1, K_0'' = K_0 + K_1/x, etc.
        use crate::specfun::{bessel_k_norm, Order};
        let p = ParamPair::validate(0, 0).unwrap();
        let x = 1.3f64;
        let k0 = bessel_k_norm(Order::new(0.0).unwrap(), x).unwrap();
        let k1 = bessel_k_norm(Order::new(1.0).unwrap(), x).unwrap() * (x / 2.0);
        // Derivatives of K_0 from K_0' = -K_1 and K_1' = -K_0 - K_1/x.
        let d1 = -k1;
        let d2 = k0 + k1 / x;
        let d3 = -k1 - k0 / x - 2.0 * k1 / (x * x);
        let d4 = k0 + 2.0 * k1 / x + 3.0 * k0 / (x * x) + 6.0 * k1 / (x * x * x);
        let jet = FunctionJet {
            x,
            values: [k0, d1, d2, d3, d4],
        };
        let r = apply_d(p, &jet);
        assert!(r.abs() < 1e-10 * k0.abs().max(1.0), "residual {r}");
    }
}
