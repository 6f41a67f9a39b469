//! Numerical machinery for the L^2-eigenfunctions of the fourth-order
//! differential operator
//!
//! ```text
//! D_{mu,nu} = (1/x^2) ((theta + mu)(theta + mu + nu) - x^2)(theta (theta + nu) - x^2),
//! theta = x d/dx,
//! ```
//!
//! and a verification harness that checks, to stated tolerances, the integral
//! identities and closed-form constants these eigenfunctions satisfy: the
//! Hankel-type transform that diagonalizes them against Gegenbauer
//! polynomials, the small-x constants, Laguerre reductions at odd parameters,
//! L^1/L^2 integrals, generating-function integrals, Poisson-kernel partial
//! sums, and the bottom-layer K-Bessel formula.
//!
//! Module map:
//! * [`specfun`] — Gamma, normalized Bessel J~/I~/K~, Gegenbauer, Laguerre, 2F1.
//! * [`params`] — the validated integer parameter pair (mu, nu) and every
//!   closed-form constant attached to (mu, nu, j).
//! * [`quad`] — adaptive quadrature on (0, inf) with certified truncation.
//! * [`eigen`] — the generating function, Taylor-coefficient extraction of the
//!   eigenfunctions, analytic jets, and the operator itself.
//! * [`identities`] — one verification driver per identity, producing
//!   serializable residual reports.

pub mod eigen;
pub mod error;
pub mod identities;
pub mod params;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use params::{ParamPair, SpectralIndex};
