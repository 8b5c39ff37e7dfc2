//! Exact verification of constant-term identities, telescoping certificates and
//! Zhu-algebra dimension data.
//!
//! Everything is computed over arbitrary-precision rationals; no floating point
//! is used anywhere.

pub mod error;
pub mod exact;
pub mod report;
pub mod residue;
pub mod wz;
pub mod zhu;

pub use error::{Error, Result};
