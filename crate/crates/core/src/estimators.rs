//! The four estimators and the family-specific shrinkage constants.
//!
//! The shrinkage estimate moves X by exactly c along -b(X)/||b(X)||, so its
//! step norm equals c whenever S > 0. The dominance window is
//! 0 < c < 2(d-1) a*, with the uniformly optimal choice c = (d-1) a*.

use crate::expfam::{s_statistic, FamilyDescriptor, FamilyTag, ObservationVector, ParameterSpace};
use crate::special::gamma_a_star;
use crate::{Error, Result};

/// S below this is treated as the measure-zero degenerate event; the
/// estimators fall back to the MLE and flag the replication.
const S_EPSILON: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimatorKind {
    Mle,
    JamesStein,
    Hudson,
    Shrinkage,
}

impl EstimatorKind {
    pub fn label(&self) -> &'static str {
        match self {
            EstimatorKind::Mle => "mle",
            EstimatorKind::JamesStein => "james_stein",
            EstimatorKind::Hudson => "hudson",
            EstimatorKind::Shrinkage => "shrinkage",
        }
    }
}

/// Which estimator to run, with its constants.
#[derive(Debug, Clone, Copy)]
pub struct EstimatorSpec {
    pub kind: EstimatorKind,
    /// Shrink magnitude; Shrinkage only.
    pub c: Option<f64>,
    /// Recorded for reporting.
    pub a_star: Option<f64>,
    pub family_tag: FamilyTag,
}

impl EstimatorSpec {
    pub fn mle(family_tag: FamilyTag) -> Self {
        Self {
            kind: EstimatorKind::Mle,
            c: None,
            a_star: None,
            family_tag,
        }
    }

    pub fn james_stein(family_tag: FamilyTag) -> Self {
        Self {
            kind: EstimatorKind::JamesStein,
            c: None,
            a_star: None,
            family_tag,
        }
    }

    pub fn hudson(family_tag: FamilyTag) -> Self {
        Self {
            kind: EstimatorKind::Hudson,
            c: None,
            a_star: None,
            family_tag,
        }
    }

    pub fn shrinkage(family_tag: FamilyTag, c: f64, a_star: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::Config(format!("shrink constant c must be positive, got {c}")));
        }
        Ok(Self {
            kind: EstimatorKind::Shrinkage,
            c: Some(c),
            a_star: Some(a_star),
            family_tag,
        })
    }

    /// Whether the dominance claim of the theorem applies: 0 < c < 2(d-1)a*.
    pub fn dominance_guaranteed(&self, d: usize) -> bool {
        match (self.kind, self.c, self.a_star) {
            (EstimatorKind::Shrinkage, Some(c), Some(a)) => {
                c > 0.0 && c < 2.0 * (d as f64 - 1.0) * a
            }
            (EstimatorKind::Shrinkage, _, _) => false,
            _ => true,
        }
    }

    pub fn apply(&self, x: &ObservationVector, fam: &FamilyDescriptor) -> Result<Estimate> {
        match self.kind {
            EstimatorKind::Mle => Ok(mle(x)),
            EstimatorKind::JamesStein => Ok(james_stein(x)),
            EstimatorKind::Hudson => hudson(x, fam),
            EstimatorKind::Shrinkage => {
                let c = self
                    .c
                    .ok_or_else(|| Error::Config("shrinkage estimator needs c".into()))?;
                shrinkage(x, fam, c)
            }
        }
    }
}

/// An estimate with the size of its shrink step.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub delta: Vec<f64>,
    /// ||delta - X||.
    pub shrink_magnitude: f64,
    /// True when a degenerate S forced a fallback to the MLE.
    pub fallback: bool,
}

/// delta = X for every family considered here.
pub fn mle(x: &ObservationVector) -> Estimate {
    Estimate {
        delta: x.0.clone(),
        shrink_magnitude: 0.0,
        fallback: false,
    }
}

/// delta = (1 - (d-2)/||X||^2) X.
pub fn james_stein(x: &ObservationVector) -> Estimate {
    let d = x.dim();
    let norm_sq: f64 = x.0.iter().map(|v| v * v).sum();
    if norm_sq < S_EPSILON {
        let mut e = mle(x);
        e.fallback = true;
        return e;
    }
    // written as x - (d-2) x / ||x||^2 so it agrees bitwise with the Hudson
    // form when b is the identity
    let step: Vec<f64> = x.0.iter().map(|&v| (d as f64 - 2.0) * v / norm_sq).collect();
    let delta: Vec<f64> = x.0.iter().zip(&step).map(|(v, s)| v - s).collect();
    Estimate {
        shrink_magnitude: norm(&step),
        delta,
        fallback: false,
    }
}

/// delta_i = x_i - (d-2) b(x_i) / S.
pub fn hudson(x: &ObservationVector, fam: &FamilyDescriptor) -> Result<Estimate> {
    let s = s_statistic(fam, x)?;
    if s < S_EPSILON {
        let mut e = mle(x);
        e.fallback = true;
        return Ok(e);
    }
    let d = x.dim() as f64;
    let step: Vec<f64> = x.0.iter().map(|&v| (d - 2.0) * fam.b(v) / s).collect();
    let delta: Vec<f64> = x.0.iter().zip(&step).map(|(v, s)| v - s).collect();
    Ok(Estimate {
        delta,
        shrink_magnitude: norm(&step),
        fallback: false,
    })
}

/// delta_i = x_i - c b(x_i) / sqrt(S); the step has norm exactly c.
pub fn shrinkage(x: &ObservationVector, fam: &FamilyDescriptor, c: f64) -> Result<Estimate> {
    if !(c > 0.0) {
        return Err(Error::Config(format!("shrink constant c must be positive, got {c}")));
    }
    let s = s_statistic(fam, x)?;
    if s < S_EPSILON {
        let mut e = mle(x);
        e.fallback = true;
        return Ok(e);
    }
    let root_s = s.sqrt();
    let step: Vec<f64> = x.0.iter().map(|&v| c * fam.b(v) / root_s).collect();
    let delta: Vec<f64> = x.0.iter().zip(&step).map(|(v, s)| v - s).collect();
    Ok(Estimate {
        delta,
        shrink_magnitude: norm(&step),
        fallback: false,
    })
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// The family-specific shrinkage constant a* of the corollaries:
/// normal iid (tau + sqrt d)^{-1}, correlated (tau + sqrt(d lambda*))^{-1},
/// Gamma (m d)^{-1/2}, exponential comp_lo / (sqrt 2 comp_hi).
pub fn a_star(tag: FamilyTag, space: &ParameterSpace, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::Config(format!("a_star needs d >= 2, got {d}")));
    }
    match tag {
        FamilyTag::NormalIid => Ok(1.0 / (space.tau + (d as f64).sqrt())),
        FamilyTag::NormalCorrelated => {
            let lambda = space.lambda_star.ok_or_else(|| {
                Error::Config("correlated normal a_star needs lambda_star".into())
            })?;
            Ok(1.0 / (space.tau + (d as f64 * lambda).sqrt()))
        }
        FamilyTag::Gamma => Ok(gamma_a_star(space.comp_lo, space.comp_hi, d)?.a_star),
        FamilyTag::Exponential => {
            if !(space.comp_lo > 0.0 && space.comp_hi > 0.0) {
                return Err(Error::Config(format!(
                    "exponential a_star needs positive component bounds, got [{}, {}]",
                    space.comp_lo, space.comp_hi
                )));
            }
            Ok(space.comp_lo / (std::f64::consts::SQRT_2 * space.comp_hi))
        }
    }
}

/// The uniformly optimal shrink constant c = (d-1) a*.
pub fn optimal_c(d: usize, a_star: f64) -> f64 {
    (d as f64 - 1.0) * a_star
}
