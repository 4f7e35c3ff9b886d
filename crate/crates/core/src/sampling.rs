//! Seeded samplers for the four scenario families.
//!
//! Each Monte Carlo replication owns a counter-based substream keyed by
//! (master_seed, replication index), so parallel runs reproduce bit-identical
//! draws regardless of scheduling.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::expfam::{ObservationVector, ParameterVector};
use crate::{Error, Result};

/// A deterministic substream of the master seed.
///
/// ChaCha's 64-bit stream counter makes (master_seed, stream_index) fully
/// determine the sequence, with distinct indices giving independent streams.
pub struct RngStream {
    pub master_seed: u64,
    pub stream_index: u64,
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(master_seed);
        rng.set_stream(stream_index);
        Self {
            master_seed,
            stream_index,
            rng,
        }
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

/// Substream for one replication.
pub fn rng_stream(master_seed: u64, replication: u64) -> RngStream {
    RngStream::new(master_seed, replication)
}

/// Symmetric PSD covariance with its Cholesky factor and spectral bound.
#[derive(Debug, Clone)]
pub struct CovarianceSpec {
    /// Row-major d x d matrix.
    pub v: Vec<f64>,
    pub dim: usize,
    /// Largest eigenvalue (power iteration).
    pub lambda_max: f64,
    /// Declared bound, >= lambda_max.
    pub lambda_star: f64,
    chol: Vec<f64>,
}

impl CovarianceSpec {
    pub fn new(v: Vec<f64>, dim: usize, lambda_star: f64) -> Result<Self> {
        if v.len() != dim * dim {
            return Err(Error::Config(format!(
                "covariance has {} entries, expected {}",
                v.len(),
                dim * dim
            )));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if (v[i * dim + j] - v[j * dim + i]).abs() > 1e-12 {
                    return Err(Error::Config(format!(
                        "covariance not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let chol = cholesky(&v, dim)?;
        let lambda_max = largest_eigenvalue(&v, dim);
        if lambda_max > lambda_star * (1.0 + 1e-10) {
            return Err(Error::Config(format!(
                "lambda_max {lambda_max} exceeds declared bound {lambda_star}"
            )));
        }
        Ok(Self {
            v,
            dim,
            lambda_max,
            lambda_star,
            chol,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut v = vec![0.0; dim * dim];
        for i in 0..dim {
            v[i * dim + i] = 1.0;
        }
        Self::new(v, dim, 1.0).expect("identity is PSD")
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.v[i * self.dim + i]).sum()
    }
}

fn cholesky(v: &[f64], d: usize) -> Result<Vec<f64>> {
    let mut l = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let mut sum = v[i * d + j];
            for k in 0..j {
                sum -= l[i * d + k] * l[j * d + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::NotPositiveDefinite);
                }
                l[i * d + i] = sum.sqrt();
            } else {
                l[i * d + j] = sum / l[j * d + j];
            }
        }
    }
    Ok(l)
}

fn largest_eigenvalue(v: &[f64], d: usize) -> f64 {
    let mut x = vec![1.0 / (d as f64).sqrt(); d];
    let mut lambda = 0.0;
    for _ in 0..200 {
        let mut y = vec![0.0; d];
        for i in 0..d {
            for j in 0..d {
                y[i] += v[i * d + j] * x[j];
            }
        }
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let next = norm;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (next - lambda).abs() < 1e-13 * next.max(1.0) {
            return next;
        }
        lambda = next;
    }
    lambda
}

/// X_i = theta_i + xi_i with xi_i standard normal.
pub fn sample_normal_iid(theta: &ParameterVector, stream: &mut RngStream) -> ObservationVector {
    ObservationVector(
        theta
            .0
            .iter()
            .map(|&t| t + stream.sample::<f64, _>(StandardNormal))
            .collect(),
    )
}

/// X = theta + L xi with L the Cholesky factor of V.
pub fn sample_normal_corr(
    theta: &ParameterVector,
    cov: &CovarianceSpec,
    stream: &mut RngStream,
) -> Result<ObservationVector> {
    let d = theta.dim();
    if cov.dim != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: cov.dim,
        });
    }
    let z: Vec<f64> = (0..d).map(|_| stream.sample(StandardNormal)).collect();
    let mut x = theta.0.clone();
    for i in 0..d {
        for j in 0..=i {
            x[i] += cov.chol[i * d + j] * z[j];
        }
    }
    Ok(ObservationVector(x))
}

/// X_i ~ Gamma(shape = theta_i, rate = 1), valid for all positive shapes.
///
/// Draws are clamped away from zero: for shapes far below one the sampler can
/// underflow to exactly 0, which would put ln X outside f64.
pub fn sample_gamma(theta: &ParameterVector, stream: &mut RngStream) -> Result<ObservationVector> {
    let mut x = Vec::with_capacity(theta.dim());
    for &shape in &theta.0 {
        if !(shape > 0.0) {
            return Err(Error::Domain(format!(
                "gamma shape must be positive, got {shape}"
            )));
        }
        let dist = Gamma::new(shape, 1.0)
            .map_err(|e| Error::Domain(format!("gamma({shape}, 1): {e}")))?;
        let draw: f64 = dist.sample(stream);
        x.push(draw.max(f64::MIN_POSITIVE));
    }
    Ok(ObservationVector(x))
}

/// X_i ~ Exp(mean theta_i), by inverse CDF: one uniform per draw.
pub fn sample_exponential(
    theta: &ParameterVector,
    stream: &mut RngStream,
) -> Result<ObservationVector> {
    let mut x = Vec::with_capacity(theta.dim());
    for &mean in &theta.0 {
        if !(mean > 0.0) {
            return Err(Error::Domain(format!(
                "exponential mean must be positive, got {mean}"
            )));
        }
        let u: f64 = stream.gen::<f64>(); // [0, 1)
        let draw = -mean * (1.0 - u).ln();
        x.push(draw.max(f64::MIN_POSITIVE));
    }
    Ok(ObservationVector(x))
}
