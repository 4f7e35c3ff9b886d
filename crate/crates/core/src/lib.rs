//! Shrinkage estimation for exponential-family parameter vectors.
//!
//! Implements the maximum likelihood, James–Stein, Hudson, and norm-shrinkage
//! estimators for vectors of natural parameters observed through one draw per
//! component, together with a seeded Monte Carlo engine that compares their
//! quadratic risks. Four concrete families are supported: iid normal,
//! correlated normal, Gamma(shape, 1), and the exponential distribution in
//! its mean parametrization.

pub mod estimators;
pub mod expfam;
pub mod risk;
pub mod sampling;
pub mod scenario;
pub mod special;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("covariance matrix is not positive semi-definite")]
    NotPositiveDefinite,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
