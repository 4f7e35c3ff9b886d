//! The exponential-family kernel exp{theta b(x) - psi(theta)} k(x) for the
//! four concrete families, plus the bounded parameter spaces the shrinkage
//! constants are built from.

use crate::special::ln_gamma;
use crate::{Error, Result};

const LN_SQRT_TWO_PI: f64 = 0.918938533204672741780329736406;

/// Which concrete family a descriptor represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    NormalIid,
    NormalCorrelated,
    Gamma,
    Exponential,
}

impl FamilyTag {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyTag::NormalIid => "normal_iid",
            FamilyTag::NormalCorrelated => "normal_corr",
            FamilyTag::Gamma => "gamma",
            FamilyTag::Exponential => "exponential",
        }
    }
}

/// An exponential family with density exp{theta b(x) - psi(theta)} k(x).
///
/// The exponential distribution is held in its mean parametrization: theta
/// is the mean, and the natural-parameter form (lambda = 1/theta on y = -x)
/// appears only inside `log_density`/`psi`. Its estimator-facing sufficient
/// statistic is b(x) = x, matching S = ||X||^2 and the shrink direction of
/// the mean estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub tag: FamilyTag,
}

impl FamilyDescriptor {
    pub fn new(tag: FamilyTag) -> Self {
        Self { tag }
    }

    /// The positive scale function a with b'(x) = 1/a(x).
    pub fn a(&self, x: f64) -> f64 {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated | FamilyTag::Exponential => 1.0,
            FamilyTag::Gamma => x,
        }
    }

    /// Sufficient statistic b.
    pub fn b(&self, x: f64) -> f64 {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated | FamilyTag::Exponential => x,
            FamilyTag::Gamma => x.ln(),
        }
    }

    /// Derivative of b; equals 1/a pointwise.
    pub fn b_prime(&self, x: f64) -> f64 {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated | FamilyTag::Exponential => 1.0,
            FamilyTag::Gamma => 1.0 / x,
        }
    }

    /// Log-partition psi(theta); for the exponential family tag theta is the
    /// mean and psi is evaluated on the natural parameter lambda = 1/theta.
    pub fn psi(&self, theta: f64) -> Result<f64> {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated => Ok(0.5 * theta * theta),
            FamilyTag::Gamma => ln_gamma(theta),
            FamilyTag::Exponential => {
                if !(theta > 0.0) {
                    return Err(Error::Domain(format!(
                        "exponential mean must be positive, got {theta}"
                    )));
                }
                // psi(lambda) = -ln(lambda) with lambda = 1/theta
                Ok(theta.ln())
            }
        }
    }

    /// Carrier density k.
    pub fn k(&self, x: f64) -> f64 {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated => {
                (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
            }
            FamilyTag::Gamma => (-x).exp() / x,
            FamilyTag::Exponential => 1.0,
        }
    }

    /// True if x lies in the family's support.
    pub fn in_support(&self, x: f64) -> bool {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated => x.is_finite(),
            FamilyTag::Gamma | FamilyTag::Exponential => x > 0.0,
        }
    }

    /// True if theta is a valid parameter for this family.
    pub fn valid_parameter(&self, theta: f64) -> bool {
        match self.tag {
            FamilyTag::NormalIid | FamilyTag::NormalCorrelated => theta.is_finite(),
            FamilyTag::Gamma | FamilyTag::Exponential => theta > 0.0,
        }
    }
}

/// A d-dimensional parameter vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterVector(pub Vec<f64>);

impl ParameterVector {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::Config("parameter vector must have length >= 1".into()));
        }
        Ok(Self(theta))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|t| t * t).sum::<f64>().sqrt()
    }

    /// Check every component is a valid parameter for the family.
    pub fn validate_for(&self, fam: &FamilyDescriptor) -> Result<()> {
        for (i, &t) in self.0.iter().enumerate() {
            if !fam.valid_parameter(t) {
                return Err(Error::Domain(format!(
                    "theta[{i}] = {t} invalid for family {}",
                    fam.tag.label()
                )));
            }
        }
        Ok(())
    }
}

/// A d-dimensional observation.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationVector(pub Vec<f64>);

impl ObservationVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// Bounds on the compact parameter set: a norm bound tau, component-wise
/// bounds, and (for the correlated normal) an eigenvalue bound.
///
/// Both the norm and component readings are carried because different
/// shrinkage constants consume different ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterSpace {
    pub tau: f64,
    pub comp_lo: f64,
    pub comp_hi: f64,
    pub lambda_star: Option<f64>,
}

impl ParameterSpace {
    pub fn new(tau: f64, comp_lo: f64, comp_hi: f64, lambda_star: Option<f64>) -> Result<Self> {
        if tau < 0.0 {
            return Err(Error::Config(format!("tau must be nonnegative, got {tau}")));
        }
        if comp_lo > comp_hi {
            return Err(Error::Config(format!(
                "comp_lo {comp_lo} exceeds comp_hi {comp_hi}"
            )));
        }
        if let Some(l) = lambda_star {
            if !(l > 0.0) {
                return Err(Error::Config(format!("lambda_star must be positive, got {l}")));
            }
        }
        Ok(Self {
            tau,
            comp_lo,
            comp_hi,
            lambda_star,
        })
    }

    /// Bounds derived from a known true theta: tau = ||theta||, component
    /// bounds from min/max theta_i.
    pub fn from_theta(theta: &ParameterVector) -> Self {
        let lo = theta.0.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = theta.0.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Self {
            tau: theta.norm(),
            comp_lo: lo,
            comp_hi: hi,
            lambda_star: None,
        }
    }

    pub fn with_lambda_star(mut self, lambda_star: f64) -> Self {
        self.lambda_star = Some(lambda_star);
        self
    }
}

/// One violated bound from `validate_parameter_space`.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundViolation {
    NormExceedsTau { norm: f64, tau: f64 },
    ComponentBelowLo { index: usize, value: f64, lo: f64 },
    ComponentAboveHi { index: usize, value: f64, hi: f64 },
}

/// Report every bound of `space` that `theta` violates; empty means ok.
pub fn validate_parameter_space(
    space: &ParameterSpace,
    theta: &ParameterVector,
) -> Vec<BoundViolation> {
    let mut out = Vec::new();
    let norm = theta.norm();
    if norm > space.tau {
        out.push(BoundViolation::NormExceedsTau {
            norm,
            tau: space.tau,
        });
    }
    for (i, &t) in theta.0.iter().enumerate() {
        if t < space.comp_lo {
            out.push(BoundViolation::ComponentBelowLo {
                index: i,
                value: t,
                lo: space.comp_lo,
            });
        } else if t > space.comp_hi {
            out.push(BoundViolation::ComponentAboveHi {
                index: i,
                value: t,
                hi: space.comp_hi,
            });
        }
    }
    out
}

/// Log of the single-component density exp{theta b(x) - psi(theta)} k(x).
pub fn log_density(fam: &FamilyDescriptor, theta_i: f64, x: f64) -> Result<f64> {
    if !fam.in_support(x) {
        return Err(Error::Domain(format!(
            "x = {x} outside support of family {}",
            fam.tag.label()
        )));
    }
    if !fam.valid_parameter(theta_i) {
        return Err(Error::Domain(format!(
            "theta = {theta_i} invalid for family {}",
            fam.tag.label()
        )));
    }
    match fam.tag {
        FamilyTag::Exponential => Ok(-x / theta_i - theta_i.ln()),
        FamilyTag::NormalIid | FamilyTag::NormalCorrelated => {
            Ok(theta_i * x - fam.psi(theta_i)? - 0.5 * x * x - LN_SQRT_TWO_PI)
        }
        FamilyTag::Gamma => Ok(theta_i * x.ln() - fam.psi(theta_i)? - x.ln() - x),
    }
}

/// Single-component density; evaluated in log space then exponentiated.
pub fn density(fam: &FamilyDescriptor, theta_i: f64, x: f64) -> Result<f64> {
    Ok(log_density(fam, theta_i, x)?.exp())
}

/// S = sum of b(x_i)^2.
pub fn s_statistic(fam: &FamilyDescriptor, x: &ObservationVector) -> Result<f64> {
    let mut s = 0.0;
    for &xi in &x.0 {
        if !fam.in_support(xi) {
            return Err(Error::Domain(format!(
                "x = {xi} outside support of family {}",
                fam.tag.label()
            )));
        }
        let b = fam.b(xi);
        s += b * b;
    }
    Ok(s)
}
