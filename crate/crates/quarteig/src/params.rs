//! The (mu, nu) parameter domain and the closed-form constants attached to
//! (mu, nu, j): the eigenvalue, the small-x constant B, the transform
//! constant A, their ratio, and the L^1 / L^2 integrals.
//!
//! Every constant is assembled in log-Gamma space with explicit sign
//! tracking, so values stay finite for j, mu up to ~30 even where the raw
//! Gamma factors overflow.

use crate::error::{Error, Result};
use crate::specfun::ln_gamma;

/// Gamma(-1/2) = -2 sqrt(pi), the single negative-argument Gamma value any
/// formula needs (ratio_AB at nu = -1), fixed here by the reflection formula.
const GAMMA_NEG_HALF: f64 = -3.544_907_701_811_032_05;

/// A validated parameter pair: mu >= nu >= -1, same parity, not both -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamPair {
    mu: i64,
    nu: i64,
}

/// Index j >= 0 into the discrete spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralIndex(pub u32);

impl SpectralIndex {
    #[inline]
    pub fn j(self) -> u32 {
        self.0
    }

    #[inline]
    fn jf(self) -> f64 {
        self.0 as f64
    }

    #[inline]
    fn sign(self) -> f64 {
        if self.0 % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl ParamPair {
    /// Validate all three admissibility clauses.
    pub fn validate(mu: i64, nu: i64) -> Result<Self> {
        if !(mu >= nu && nu >= -1) {
            return Err(Error::OrderingViolation { mu, nu });
        }
        if (mu - nu) % 2 != 0 {
            return Err(Error::ParityMismatch { mu, nu });
        }
        if mu == -1 && nu == -1 {
            return Err(Error::BothMinusOne);
        }
        Ok(ParamPair { mu, nu })
    }

    #[inline]
    pub fn mu(self) -> i64 {
        self.mu
    }

    #[inline]
    pub fn nu(self) -> i64 {
        self.nu
    }

    #[inline]
    pub fn mu_f(self) -> f64 {
        self.mu as f64
    }

    #[inline]
    pub fn nu_f(self) -> f64 {
        self.nu as f64
    }

    /// All admissible pairs with mu <= max_mu, in lexicographic order.
    pub fn enumerate(max_mu: i64) -> Vec<ParamPair> {
        let mut out = Vec::new();
        for mu in 0..=max_mu {
            let mut nu = if mu % 2 == 0 { 0 } else { -1 };
            while nu <= mu {
                if let Ok(p) = ParamPair::validate(mu, nu) {
                    out.push(p);
                }
                nu += 2;
            }
        }
        out
    }
}

/// Sign-tracked product of Gamma factors and powers of two.
#[derive(Clone, Copy)]
struct LnProd {
    ln: f64,
    sign: f64,
}

impl LnProd {
    fn new() -> Self {
        LnProd { ln: 0.0, sign: 1.0 }
    }

    fn gamma(mut self, x: f64) -> Self {
        self.ln += ln_gamma(x).expect("gamma argument positive by construction");
        self
    }

    fn div_gamma(mut self, x: f64) -> Self {
        self.ln -= ln_gamma(x).expect("gamma argument positive by construction");
        self
    }

    fn pow2(mut self, k: f64) -> Self {
        self.ln += k * std::f64::consts::LN_2;
        self
    }

    fn times(mut self, v: f64) -> Self {
        self.sign *= v.signum();
        self.ln += v.abs().ln();
        self
    }

    fn value(self) -> f64 {
        self.sign * self.ln.exp()
    }
}

/// Eigenvalue of the operator: 4 j (j + mu + 1); exactly representable.
pub fn eigenvalue(p: ParamPair, j: SpectralIndex) -> f64 {
    let jj = j.0 as i64;
    (4 * jj * (jj + p.mu + 1)) as f64
}

/// Small-x constant of the eigenfunction (coefficient of x^-nu, log(x/2),
/// or 1 according to the sign of nu). Never zero.
pub fn constant_b(p: ParamPair, j: SpectralIndex) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    let nu_abs = nu.abs();
    let common = LnProd::new()
        .gamma(j.jf() + (mu - nu_abs + 2.0) / 2.0)
        .div_gamma(j.jf() + 1.0)
        .div_gamma((mu + 2.0) / 2.0)
        .div_gamma((mu - nu_abs + 2.0) / 2.0);
    match p.nu {
        n if n > 0 => common.pow2(nu - 1.0).gamma(nu / 2.0).value(),
        0 => common.times(-1.0).value(),
        _ => common.times(0.5).gamma(-nu / 2.0).value(),
    }
}

/// Transform constant of the eigenfunction:
/// (-1)^j 2^{2(mu+nu)} Gamma(j + (mu-nu+2)/2) / (pi Gamma(j + mu + 1)).
pub fn constant_a(p: ParamPair, j: SpectralIndex) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    LnProd::new()
        .pow2(2.0 * (mu + nu))
        .gamma(j.jf() + (mu - nu + 2.0) / 2.0)
        .div_gamma(j.jf() + mu + 1.0)
        .times(j.sign() / std::f64::consts::PI)
        .value()
}

/// The ratio A/B valid for ANY solution, three-branch closed form in nu.
pub fn ratio_ab(p: ParamPair, j: SpectralIndex) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    let nu_abs = nu.abs();
    let common = LnProd::new()
        .gamma(j.jf() + 1.0)
        .pow2(2.0 * mu + nu)
        .gamma((mu + 2.0) / 2.0)
        .gamma((mu - nu_abs + 2.0) / 2.0)
        .gamma(j.jf() + (mu - nu + 2.0) / 2.0)
        .div_gamma(j.jf() + (mu - nu_abs + 2.0) / 2.0)
        .div_gamma(j.jf() + mu + 1.0)
        .times(j.sign() / std::f64::consts::PI);
    match p.nu {
        n if n > 0 => {
            let g = LnProd::new().gamma(nu / 2.0).value();
            common.times(2.0 / g).value()
        }
        0 => common.times(-1.0).value(),
        // nu = -1: Gamma(nu/2) = Gamma(-1/2) via reflection.
        _ => common.times(-2.0 / GAMMA_NEG_HALF).value(),
    }
}

/// Integral of the eigenfunction against x^{mu+nu+1} dx over (0, inf):
/// (-1)^j 2^{mu+nu} Gamma(j + (mu+nu+2)/2) / j!.
pub fn l1_value(p: ParamPair, j: SpectralIndex) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    LnProd::new()
        .pow2(mu + nu)
        .gamma(j.jf() + (mu + nu + 2.0) / 2.0)
        .div_gamma(j.jf() + 1.0)
        .times(j.sign())
        .value()
}

/// Squared L^2 norm of the eigenfunction in L^2(R_+, x^{mu+nu+1} dx).
pub fn l2_norm_sq(p: ParamPair, j: SpectralIndex) -> f64 {
    let (mu, nu) = (p.mu_f(), p.nu_f());
    LnProd::new()
        .pow2(mu + nu - 1.0)
        .gamma(j.jf() + (mu + nu + 2.0) / 2.0)
        .gamma(j.jf() + (mu - nu + 2.0) / 2.0)
        .div_gamma(j.jf() + 1.0)
        .div_gamma(j.jf() + mu + 1.0)
        .times(1.0 / (2.0 * j.jf() + mu + 1.0))
        .value()
}
