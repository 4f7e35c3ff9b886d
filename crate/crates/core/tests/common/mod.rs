//! Shared fixtures for the integration and acceptance suites.
//!
//! The polygamma reference values were computed independently with 40-digit
//! arithmetic and frozen here; they are the oracle the implementations are
//! checked against and never feed back into the library.

#![allow(dead_code)]

pub mod fixtures;

/// Euler-Mascheroni constant, for the digamma(1) spot check.
pub const EULER_GAMMA: f64 = 0.577215664901532861;
