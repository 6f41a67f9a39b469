//! The generating function G(t, x), Taylor-coefficient extraction of the
//! eigenfunctions Lambda_j (with x-derivative jets), and the fourth-order
//! operator they satisfy.
//!
//! The eigenfunctions are defined through
//!
//! ```text
//! G(t, x) = (1-t)^{-(mu+nu+2)/2} I~_{mu/2}(t x / (1-t)) K~_{nu/2}(x / (1-t))
//!         = sum_j Lambda_j(x) t^j,
//! ```
//!
//! and Lambda_j is recovered as the j-th Taylor coefficient by a trapezoid
//! discretization of the Cauchy integral over the circle |t| = r < 1, which
//! is spectrally accurate for functions analytic in a neighbourhood of the
//! disc. Derivatives in x come from contour-extracting the analytically
//! differentiated generating function.

mod contour;
mod operator;

pub use operator::apply_d;

use crate::error::{Error, Result};
use crate::params::{ParamPair, SpectralIndex};
use crate::specfun::{bessel_i_norm, bessel_k_norm, gamma_fn, Order};

/// Contour-extraction configuration.
#[derive(Debug, Clone, Copy)]
pub struct ExtractionConfig {
    /// Contour radius in (0, 1); G is singular at t = 1.
    pub contour_radius: f64,
    /// Trapezoid node count, a power of two >= 64.
    pub num_nodes: usize,
    /// Target relative error of extracted values.
    pub target_rel_err: f64,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            contour_radius: 0.5,
            num_nodes: 256,
            target_rel_err: 1e-9,
        }
    }
}

impl ExtractionConfig {
    pub fn check(&self) -> Result<()> {
        if !(self.contour_radius > 0.0 && self.contour_radius < 1.0) {
            return Err(Error::Domain(format!(
                "contour radius must lie in (0, 1), got {}",
                self.contour_radius
            )));
        }
        if self.num_nodes < 64 || !self.num_nodes.is_power_of_two() {
            return Err(Error::Domain(format!(
                "num_nodes must be a power of two >= 64, got {}",
                self.num_nodes
            )));
        }
        if !(self.target_rel_err > 0.0) {
            return Err(Error::Domain("target_rel_err must be positive".into()));
        }
        Ok(())
    }
}

/// Identifies one eigenfunction Lambda_j^{mu,nu} together with the
/// extraction settings used to evaluate it.
#[derive(Debug, Clone, Copy)]
pub struct EigenfunctionSpec {
    pub params: ParamPair,
    pub j: SpectralIndex,
    pub extraction: ExtractionConfig,
}

impl EigenfunctionSpec {
    pub fn new(params: ParamPair, j: SpectralIndex) -> Self {
        EigenfunctionSpec {
            params,
            j,
            extraction: ExtractionConfig::default(),
        }
    }
}

/// u and its first four x-derivatives at one abscissa.
#[derive(Debug, Clone, Copy)]
pub struct FunctionJet {
    pub x: f64,
    /// u, u', u'', u''', u'''' at x.
    pub values: [f64; 5],
}

/// Smallest abscissa at which the eigenfunctions are evaluated; the x -> 0
/// blow-up (x^-nu or log) is the business of the asymptotic-constant
/// estimators, never of direct evaluation.
pub const MIN_EVAL_X: f64 = 1e-8;

/// The generating function G(t, x) for real |t| < 1, x > 0.
pub fn gen_g(p: ParamPair, t: f64, x: f64) -> Result<f64> {
    if !(t.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "gen_g requires |t| < 1, got t = {t}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("gen_g requires x > 0, got {x}")));
    }
    let s = (p.mu_f() + p.nu_f() + 2.0) / 2.0;
    let om = 1.0 - t;
    // I~ is even in its argument, so the t < 0 case needs no special care.
    let i_factor = bessel_i_norm(Order::new(p.mu_f() / 2.0)?, (t * x / om).abs())?;
    let k_factor = bessel_k_norm(Order::new(p.nu_f() / 2.0)?, x / om)?;
    Ok(om.powf(-s) * i_factor * k_factor)
}

/// Lambda_j(x), the j-th Taylor coefficient of t -> G(t, x).
///
/// Fails with an accuracy error when the extraction's internal estimate
/// exceeds `spec.extraction.target_rel_err` even after one radius/node
/// adaptation step.
pub fn lambda_j(spec: &EigenfunctionSpec, x: f64) -> Result<f64> {
    spec.extraction.check()?;
    check_x(x)?;
    let (value, abs_err) = contour::extract_adaptive(spec, x, false)?.0[0];
    guard(value, abs_err, spec.extraction.target_rel_err, "lambda_j")?;
    Ok(value)
}

/// Lambda_j and its first four derivatives at x, by analytic
/// differentiation of the generating function under the contour integral.
pub fn lambda_jet(spec: &EigenfunctionSpec, x: f64) -> Result<FunctionJet> {
    spec.extraction.check()?;
    check_x(x)?;
    let (ests, _) = contour::extract_adaptive(spec, x, true)?;
    let mut values = [0.0f64; 5];
    for (m, &(v, e)) in ests.iter().enumerate() {
        guard(v, e, spec.extraction.target_rel_err, "lambda_jet")?;
        values[m] = v;
    }
    Ok(FunctionJet { x, values })
}

/// Evaluation with an absolute error estimate and no accuracy guard: the
/// form the quadrature integrands need, where far-tail samples are
/// negligible in absolute terms but useless in relative ones.
pub(crate) fn lambda_estimate(spec: &EigenfunctionSpec, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    Ok(contour::extract_coeffs(
        spec.params,
        &spec.extraction,
        &[spec.j.j()],
        x,
    )?[0])
}

/// Several coefficients at once from a single contour sweep.
pub(crate) fn lambda_many(
    p: ParamPair,
    extraction: &ExtractionConfig,
    js: &[u32],
    x: f64,
) -> Result<Vec<(f64, f64)>> {
    check_x(x)?;
    contour::extract_coeffs(p, extraction, js, x)
}

fn check_x(x: f64) -> Result<f64> {
    if !(x >= MIN_EVAL_X) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "eigenfunction evaluation requires x >= {MIN_EVAL_X:e}, got {x}"
        )));
    }
    Ok(x)
}

fn guard(value: f64, abs_err: f64, target: f64, context: &'static str) -> Result<()> {
    let rel = abs_err / value.abs().max(1e-300);
    if rel > target {
        return Err(Error::Accuracy {
            context,
            estimate: rel,
            target,
        });
    }
    Ok(())
}

/// Max scaled residual of the eigen-equation D u = lambda_j u over `xs`:
/// |D(jet) - ev * u| / (|ev * u| + max_x |u|).
pub fn eigen_residual(spec: &EigenfunctionSpec, xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::Domain("eigen_residual requires nonempty xs".into()));
    }
    let ev = crate::params::eigenvalue(spec.params, spec.j);
    let jets: Vec<FunctionJet> = xs
        .iter()
        .map(|&x| lambda_jet(spec, x))
        .collect::<Result<_>>()?;
    let scale = jets
        .iter()
        .map(|jet| jet.values[0].abs())
        .fold(0.0f64, f64::max);
    let mut worst = 0.0f64;
    for jet in &jets {
        let lhs = apply_d(spec.params, jet);
        let rhs = ev * jet.values[0];
        let denom = rhs.abs() + scale;
        let r = (lhs - rhs).abs() / denom;
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

/// Lambda_0 in closed form: K~_{nu/2}(x) / Gamma((mu+2)/2). Used by tests
/// and by callers that want the bottom eigenfunction without extraction.
pub fn lambda_0_closed_form(p: ParamPair, x: f64) -> Result<f64> {
    Ok(bessel_k_norm(Order::new(p.nu_f() / 2.0)?, x)? / gamma_fn((p.mu_f() + 2.0) / 2.0)?)
}
