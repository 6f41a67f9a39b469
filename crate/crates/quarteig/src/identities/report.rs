//! Residual reports and their serialized JSON shape.
//!
//! Every driver emits a `VerificationReport`; the documented JSON schema
//! (consumed by the CLI and by `report-merge`) is, field for field:
//!
//! ```json
//! {
//!   "identity_id": "theorem-a",
//!   "label": "mu=3 nu=1 j=2",
//!   "mu": 3, "nu": 1, "j": 2,
//!   "tolerance": 1e-8,
//!   "max_rel_residual": 2.4e-10,
//!   "passed": true,
//!   "samples": [
//!     { "point": "theta=0.300 phi=0.600", "lhs": 0.123, "rhs": 0.123,
//!       "rel_residual": 2.4e-10 }
//!   ],
//!   "notes": []
//! }
//! ```
//!
//! `mu`, `nu`, `j` are omitted for identities they do not apply to. Residuals
//! are normalized by the larger of the per-point |RHS| and the maximum |RHS|
//! across the report, which keeps Gegenbauer zeros from manufacturing huge
//! relative errors.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    TheoremA,
    TheoremB,
    CorollaryC,
    GenIntegral,
    L1Integral,
    L2Norm,
    GegenbauerNorm,
    PoissonPartial,
    PoissonKernel,
    BottomLayer,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::TheoremA,
        IdentityId::TheoremB,
        IdentityId::CorollaryC,
        IdentityId::GenIntegral,
        IdentityId::L1Integral,
        IdentityId::L2Norm,
        IdentityId::GegenbauerNorm,
        IdentityId::PoissonPartial,
        IdentityId::PoissonKernel,
        IdentityId::BottomLayer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::TheoremA => "theorem-a",
            IdentityId::TheoremB => "theorem-b",
            IdentityId::CorollaryC => "corollary-c",
            IdentityId::GenIntegral => "gen-integral",
            IdentityId::L1Integral => "l1-integral",
            IdentityId::L2Norm => "l2-norm",
            IdentityId::GegenbauerNorm => "gegenbauer-norm",
            IdentityId::PoissonPartial => "poisson-partial",
            IdentityId::PoissonKernel => "poisson-kernel",
            IdentityId::BottomLayer => "bottom-layer",
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// One verification point: the two independently computed sides and their
/// normalized residual.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SamplePoint {
    pub point: String,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    pub tolerance: f64,
    pub max_rel_residual: f64,
    pub passed: bool,
    pub samples: Vec<SamplePoint>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Assemble a report; `passed` is derived, never stored independently.
    pub(crate) fn assemble(
        identity_id: IdentityId,
        label: String,
        mu: Option<i64>,
        nu: Option<i64>,
        j: Option<u32>,
        tolerance: f64,
        samples: Vec<SamplePoint>,
        notes: Vec<String>,
    ) -> Self {
        assert!(!samples.is_empty(), "reports must carry samples");
        let max_rel_residual = samples
            .iter()
            .map(|s| s.rel_residual)
            .fold(0.0f64, f64::max);
        let failed_note = !notes.is_empty() && notes.iter().any(|n| n.starts_with("error:"));
        VerificationReport {
            identity_id,
            label,
            mu,
            nu,
            j,
            tolerance,
            max_rel_residual,
            passed: max_rel_residual <= tolerance && !failed_note,
            samples,
            notes,
        }
    }

    /// Normalize raw per-point absolute residuals by
    /// max(|rhs| at point, max |rhs| over grid) and build sample points.
    pub(crate) fn normalized_samples(
        points: Vec<(String, f64, f64)>, // (label, lhs, rhs)
    ) -> Vec<SamplePoint> {
        let grid_max = points
            .iter()
            .map(|(_, _, rhs)| rhs.abs())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        points
            .into_iter()
            .map(|(point, lhs, rhs)| SamplePoint {
                point,
                lhs,
                rhs,
                rel_residual: (lhs - rhs).abs() / rhs.abs().max(grid_max),
            })
            .collect()
    }

    pub fn one_line(&self) -> String {
        format!(
            "{} {} [{}] max_rel_residual={:.3e} tolerance={:.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity_id,
            self.label,
            self.max_rel_residual,
            self.tolerance
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_id_round_trips_through_kebab_case() {
        for id in IdentityId::ALL {
            let s = serde_json::to_string(&id).unwrap();
            assert_eq!(s, format!("\"{}\"", id.as_str()));
            let back: IdentityId = s.trim_matches('"').parse().unwrap();
            assert_eq!(back, id);
        }
    }

    #[test]
    fn passed_is_derived_from_tolerance() {
        let samples = VerificationReport::normalized_samples(vec![
            ("a".into(), 1.0, 1.0 + 1e-9),
            ("b".into(), 2.0, 2.0),
        ]);
        let report = VerificationReport::assemble(
            IdentityId::TheoremA,
            "test".into(),
            Some(0),
            Some(0),
            Some(0),
            1e-8,
            samples.clone(),
            vec![],
        );
        assert!(report.passed);
        let report = VerificationReport::assemble(
            IdentityId::TheoremA,
            "test".into(),
            None,
            None,
            None,
            1e-10,
            samples,
            vec![],
        );
        assert!(!report.passed);
        assert!(report.max_rel_residual > 1e-10);
    }

    #[test]
    fn residuals_normalized_by_grid_max_near_zeros() {
        // A point with rhs ~ 0 must not blow up the residual.
        let samples =
            VerificationReport::normalized_samples(vec![("z".into(), 1e-12, 0.0), ("m".into(), 5.0, 5.0)]);
        assert!(samples[0].rel_residual < 1e-12);
    }
}
