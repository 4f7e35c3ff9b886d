//! Special-function checks against the frozen high-precision oracle, the
//! polygamma inequalities, and Monte Carlo moment agreement.

mod common;

use common::fixtures::{DIGAMMA_REF, LN_GAMMA_REF, TRIGAMMA_REF};
use common::EULER_GAMMA;
use steinshrink::expfam::ParameterVector;
use steinshrink::sampling::{rng_stream, sample_gamma};
use steinshrink::special::{digamma, ln_gamma, m_bound, second_log_moment, trigamma};

#[test]
fn digamma_matches_reference_oracle() {
    for &(x, want) in DIGAMMA_REF {
        let got = digamma(x).unwrap();
        assert!(
            (got - want).abs() <= 1e-10,
            "digamma({x}): got {got}, want {want}"
        );
    }
}

#[test]
fn trigamma_matches_reference_oracle() {
    for &(x, want) in TRIGAMMA_REF {
        let got = trigamma(x).unwrap();
        assert!(
            (got - want).abs() <= 1e-10,
            "trigamma({x}): got {got}, want {want}"
        );
    }
}

#[test]
fn ln_gamma_matches_reference_oracle() {
    // 1e-12 absolute where representable; for large arguments the value
    // itself exceeds 1e12 ulps of that target, so fall back to relative.
    for &(x, want) in LN_GAMMA_REF {
        let got = ln_gamma(x).unwrap();
        let err = (got - want).abs();
        assert!(
            err <= 1e-12 || err <= 1e-14 * want.abs(),
            "ln_gamma({x}): got {got}, want {want}, err {err:.3e}"
        );
    }
}

#[test]
fn digamma_euler_mascheroni() {
    assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-12);
}

#[test]
fn digamma_bound_strict_on_log_grid() {
    let (lo, hi, steps) = (0.05f64, 1e4f64, 300);
    for k in 0..=steps {
        let mu = lo * (hi / lo).powf(k as f64 / steps as f64);
        let gap = mu.ln() - digamma(mu).unwrap();
        assert!(
            0.5 / mu < gap && gap < 1.0 / mu,
            "digamma bound fails at mu={mu}: gap={gap}"
        );
    }
}

#[test]
fn trigamma_bound_strict_on_log_grid() {
    let (lo, hi, steps) = (0.05f64, 1e4f64, 300);
    for k in 0..=steps {
        let mu = lo * (hi / lo).powf(k as f64 / steps as f64);
        let bound = 1.0 / mu + 0.5 / (mu * mu) + 1.0 / (6.0 * mu * mu * mu);
        let tg = trigamma(mu).unwrap();
        // the true gap is ~ 1/(30 mu^5), which drops below one ulp of the
        // bound around mu ~ 2e3; past that, ties from rounding are allowed
        let ulp_slack = 2.0 * f64::EPSILON * bound;
        assert!(
            tg < bound || tg - bound <= ulp_slack,
            "trigamma bound fails at mu={mu}: {tg} vs {bound}"
        );
        if 1.0 / (30.0 * mu.powi(5)) > ulp_slack {
            assert!(tg < bound, "strict trigamma bound fails at mu={mu}");
        }
    }
}

#[test]
fn polygamma_recurrences() {
    let mut x = 0.07;
    while x < 2e3 {
        let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        assert!((d - 1.0 / x).abs() < 1e-10, "digamma recurrence at {x}");
        let t = trigamma(x + 1.0).unwrap() - trigamma(x).unwrap();
        assert!((t + 1.0 / (x * x)).abs() < 1e-10, "trigamma recurrence at {x}");
        x *= 2.3;
    }
}

#[test]
fn digamma_bound_spot_check_mu2() {
    let gap = 2f64.ln() - digamma(2.0).unwrap();
    assert!((gap - 0.270363).abs() < 1e-5);
    assert!(gap > 0.25 && gap < 0.5);
}

#[test]
fn second_log_moment_values() {
    // mu = 1: pi^2/6 + gamma^2
    let want = std::f64::consts::PI.powi(2) / 6.0 + EULER_GAMMA * EULER_GAMMA;
    assert!((second_log_moment(1.0).unwrap() - want).abs() < 1e-12);
    assert!((second_log_moment(5.0).unwrap() - 2.4897133869).abs() < 1e-9);
}

#[test]
fn m_bound_violation_window() {
    // E[ln^2 X] exceeds M(mu) on mu in (0.2163, 1.3803); outside that
    // window M is a genuine upper bound. At mu = 1 the gap is
    // 1.978 vs 23/12 = 1.917.
    for mu in [0.25, 0.5, 1.0, 1.3] {
        assert!(
            second_log_moment(mu).unwrap() > m_bound(mu).unwrap(),
            "expected violation at mu={mu}"
        );
    }
    for mu in [0.05, 0.1, 0.2, 1.4, 3.0, 10.0, 100.0] {
        assert!(
            second_log_moment(mu).unwrap() < m_bound(mu).unwrap(),
            "expected M to dominate at mu={mu}"
        );
    }
}

#[test]
fn m_bound_single_interior_minimum() {
    let (lo, hi, steps) = (0.1f64, 100f64, 2000);
    let mut sign_changes = 0;
    let mut argmin = lo;
    let mut minval = f64::INFINITY;
    let mut prev = f64::INFINITY;
    let mut prev_decreasing = true;
    for k in 0..=steps {
        let mu = lo * (hi / lo).powf(k as f64 / steps as f64);
        let v = m_bound(mu).unwrap();
        if v < minval {
            minval = v;
            argmin = mu;
        }
        if k > 0 {
            let decreasing = v < prev;
            if decreasing != prev_decreasing {
                sign_changes += 1;
            }
            prev_decreasing = decreasing;
        }
        prev = v;
    }
    assert_eq!(sign_changes, 1, "difference sequence should change sign once");
    assert!(
        (argmin - 1.865).abs() < 0.01,
        "minimum located at {argmin}, expected near 1.865"
    );
}

#[test]
fn second_log_moment_matches_monte_carlo() {
    let reps = 100_000u64;
    for (i, &mu) in [0.5, 1.0, 2.0, 5.0].iter().enumerate() {
        let theta = ParameterVector::new(vec![mu]).unwrap();
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for l in 0..reps {
            let mut s = rng_stream(1000 + i as u64, l);
            let x = sample_gamma(&theta, &mut s).unwrap().0[0];
            let v = x.ln().powi(2);
            sum += v;
            sumsq += v * v;
        }
        let n = reps as f64;
        let mean = sum / n;
        let se = ((sumsq / n - mean * mean) / n).sqrt();
        let want = second_log_moment(mu).unwrap();
        assert!(
            (mean - want).abs() <= 4.0 * se,
            "mu={mu}: MC mean {mean} vs {want} (se {se})"
        );
    }
}
