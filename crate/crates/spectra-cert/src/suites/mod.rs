//! Verification suites. Each suite enumerates its instance set, applies the
//! shared margin policy, and returns a [`crate::report::VerificationReport`].

pub mod applications;
pub mod certificates;
pub mod deletion;
pub mod main_theorem;
pub mod properties;
pub mod r1;
pub mod stoploss;
