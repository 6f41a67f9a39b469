//! Verification drivers, one per integral identity.

mod report;

pub use report::{IdentityId, SamplePoint, VerificationReport};
