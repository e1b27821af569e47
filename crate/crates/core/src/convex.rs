//! Midpoint-gap bounds for functions whose `|f''|` (or `|f''|^q`) is convex,
//! and the first-derivative bounds they improve on.
//!
//! The formulas take endpoint magnitudes as plain numbers so the same
//! arithmetic serves the special-means propositions. [`EndpointValues`]
//! evaluates them from a [`TestFunction`].

use crate::error::{domain, Result};
use crate::exponent::ConjugatePair;
use crate::function::TestFunction;
use crate::interval::Interval;

/// `|g(a)|` and `|g(b)|` for a derivative `g` of a test function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointValues {
    pub at_a: f64,
    pub at_b: f64,
}

impl EndpointValues {
    pub fn second(func: &TestFunction, iv: Interval) -> Self {
        Self {
            at_a: func.abs_d2(iv.a()),
            at_b: func.abs_d2(iv.b()),
        }
    }

    pub fn first(func: &TestFunction, iv: Interval) -> Self {
        Self {
            at_a: func.abs_d1(iv.a()),
            at_b: func.abs_d1(iv.b()),
        }
    }
}

pub(crate) fn check_magnitudes(x: f64, y: f64) -> Result<()> {
    if !(x >= 0.0 && y >= 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(domain(format!(
            "endpoint magnitudes must be finite and nonnegative, got ({x}, {y})"
        )));
    }
    Ok(())
}

fn check_q(q: f64) -> Result<()> {
    if !q.is_finite() || q < 1.0 {
        return Err(domain(format!("q must be finite and >= 1, got {q}")));
    }
    Ok(())
}

/// `((x^q + y^q)/2)^{1/q}` for `x, y ≥ 0`, `q ≥ 1`.
///
/// Scaled by the larger argument so large `q` cannot overflow; `q == 1` is
/// the plain arithmetic mean.
pub fn power_mean(x: f64, y: f64, q: f64) -> f64 {
    if q == 1.0 {
        return (x + y) / 2.0;
    }
    let hi = x.max(y);
    if hi == 0.0 {
        return 0.0;
    }
    let r = x.min(y) / hi;
    hi * ((1.0 + r.powf(q)) / 2.0).powf(1.0 / q)
}

/// `(b−a)²/24 · (|f''(a)| + |f''(b)|)/2`.
pub fn bound_convex_q1(iv: Interval, d2a: f64, d2b: f64) -> Result<f64> {
    check_magnitudes(d2a, d2b)?;
    Ok(iv.width() * iv.width() / 24.0 * ((d2a + d2b) / 2.0))
}

/// The Hölder-route constant `1 / (8 (2p+1)^{1/p})`.
pub fn holder_constant(p: f64) -> f64 {
    1.0 / (8.0 * (2.0 * p + 1.0).powf(1.0 / p))
}

/// `(b−a)²/(8(2p+1)^{1/p}) · ((|f''(a)|^q + |f''(b)|^q)/2)^{1/q}`, `q > 1`.
pub fn bound_convex_holder(iv: Interval, d2a: f64, d2b: f64, pq: ConjugatePair) -> Result<f64> {
    check_magnitudes(d2a, d2b)?;
    Ok(iv.width() * iv.width() * holder_constant(pq.p()) * power_mean(d2a, d2b, pq.q()))
}

/// `(b−a)²/24 · ((|f''(a)|^q + |f''(b)|^q)/2)^{1/q}`, `q ≥ 1`.
/// At `q = 1` this is bit-for-bit [`bound_convex_q1`].
pub fn bound_convex_powermean(iv: Interval, d2a: f64, d2b: f64, q: f64) -> Result<f64> {
    check_magnitudes(d2a, d2b)?;
    check_q(q)?;
    Ok(iv.width() * iv.width() / 24.0 * power_mean(d2a, d2b, q))
}

/// `(b−a)/4 · ((|f'(a)|^q + |f'(b)|^q)/2)^{1/q}`: the classical bound for
/// convex `|f'|^q`. `q = 1` gives the arithmetic-mean version.
pub fn baseline_first_derivative(iv: Interval, d1a: f64, d1b: f64, q: f64) -> Result<f64> {
    check_magnitudes(d1a, d1b)?;
    check_q(q)?;
    Ok(iv.width() / 4.0 * power_mean(d1a, d1b, q))
}

/// The two constants compared when trading the Hölder route for the power-mean route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantComparison {
    pub power_mean_constant: f64,
    pub holder_constant: f64,
    /// `power_mean_constant < holder_constant`; true for every `p > 1`.
    pub power_mean_smaller: bool,
}

pub fn constant_comparison(p: f64) -> Result<ConstantComparison> {
    if !p.is_finite() || p <= 1.0 {
        return Err(domain(format!(
            "constant comparison needs finite p > 1, got {p}"
        )));
    }
    let pm = 1.0 / 24.0;
    let h = holder_constant(p);
    Ok(ConstantComparison {
        power_mean_constant: pm,
        holder_constant: h,
        power_mean_smaller: pm < h,
    })
}

/// Ratio of the first-derivative baseline to the second-derivative
/// power-mean bound on the same data.
///
/// There is no uniform ordering between the two (they use different
/// derivatives). For fixed `a` with `f'(a) ≠ 0` the ratio grows like
/// `1/(b−a)` as the interval shrinks.
pub fn improvement_ratio(func: &TestFunction, iv: Interval, q: f64) -> Result<f64> {
    func.check_interval(&iv)?;
    let d1 = EndpointValues::first(func, iv);
    let d2 = EndpointValues::second(func, iv);
    let base = baseline_first_derivative(iv, d1.at_a, d1.at_b, q)?;
    let ours = bound_convex_powermean(iv, d2.at_a, d2.at_b, q)?;
    Ok(base / ours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::find;
    use proptest::prelude::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn pair(p: f64) -> ConjugatePair {
        ConjugatePair::from_p(p).unwrap()
    }

    #[test]
    fn q1_examples() {
        assert!((bound_convex_q1(iv(0.0, 1.0), 2.0, 2.0).unwrap() - 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(bound_convex_q1(iv(0.0, 1.0), 0.0, 12.0).unwrap(), 0.25);
        assert_eq!(bound_convex_q1(iv(1.0, 2.0), 6.0, 12.0).unwrap(), 0.375);
        assert!(bound_convex_q1(iv(0.0, 1.0), -1.0, 2.0).is_err());
    }

    #[test]
    fn holder_examples() {
        let v = bound_convex_holder(iv(0.0, 1.0), 0.0, 12.0, pair(2.0)).unwrap();
        assert!((v - 0.474_341_649_025_256_9).abs() < 1e-14);
        let v = bound_convex_holder(iv(0.0, 1.0), 2.0, 2.0, pair(2.0)).unwrap();
        assert!((v - 0.111_803_398_874_989_48).abs() < 1e-15);
        assert_eq!(
            bound_convex_holder(iv(0.0, 1.0), 0.0, 0.0, pair(7.0)).unwrap(),
            0.0
        );
    }

    #[test]
    fn powermean_examples() {
        let v = bound_convex_powermean(iv(0.0, 1.0), 0.0, 12.0, 2.0).unwrap();
        assert!((v - 0.353_553_390_593_273_8).abs() < 1e-15);
        let v = bound_convex_powermean(iv(0.0, 1.0), 2.0, 2.0, 7.0).unwrap();
        assert!((v - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(
            bound_convex_powermean(iv(1.0, 2.0), 6.0, 12.0, 1.0).unwrap(),
            0.375
        );
        assert!(bound_convex_powermean(iv(1.0, 2.0), 6.0, 12.0, 0.5).is_err());
    }

    #[test]
    fn baseline_examples() {
        assert_eq!(
            baseline_first_derivative(iv(0.0, 1.0), 0.0, 2.0, 1.0).unwrap(),
            0.25
        );
        assert!(
            (baseline_first_derivative(iv(0.0, 1.0), 1.0, 1.0, 3.0).unwrap() - 0.25).abs() < 1e-15
        );
        assert_eq!(
            baseline_first_derivative(iv(0.0, 0.5), 0.0, 1.0, 1.0).unwrap(),
            0.0625
        );
        assert!(baseline_first_derivative(iv(0.0, 0.5), 0.0, 1.0, 0.9).is_err());
    }

    #[test]
    fn constant_comparison_examples() {
        let c = constant_comparison(2.0).unwrap();
        assert_eq!(c.power_mean_constant, 1.0 / 24.0);
        assert!((c.holder_constant - 0.055_901_699_437_494_74).abs() < 1e-15);
        assert!(c.power_mean_smaller);
        let c = constant_comparison(1.01).unwrap();
        assert!((c.holder_constant - 0.041_846_160_268_096_96).abs() < 1e-14);
        assert!(c.power_mean_smaller);
        let c = constant_comparison(50.0).unwrap();
        assert!((c.holder_constant - 0.113_978_670_152_789_76).abs() < 1e-14);
        assert!(constant_comparison(1.0).is_err());
    }

    #[test]
    fn second_derivative_bound_beats_baseline_for_x_squared() {
        // x² on [0, 1]: baseline 1/4 against 1/12.
        let f = find("x^2").unwrap();
        let r = improvement_ratio(&f, iv(0.0, 1.0), 1.0).unwrap();
        assert!((r - 3.0).abs() < 1e-14);
    }

    #[test]
    fn improvement_ratio_grows_as_width_shrinks() {
        let f = find("exp").unwrap();
        let mut last = 0.0;
        for k in 0..8 {
            let h = 0.5f64.powi(k);
            let r = improvement_ratio(&f, iv(0.0, h), 1.0).unwrap();
            assert!(r > last);
            last = r;
        }
        // ~ 6/h for exp near 0
        assert!(last > 600.0);
    }

    proptest! {
        #[test]
        fn powermean_never_exceeds_holder(x in 0.0f64..100.0, y in 0.0f64..100.0, q in 1.0001f64..10.0) {
            let i = iv(0.0, 1.0);
            let pm = bound_convex_powermean(i, x, y, q).unwrap();
            let h = bound_convex_holder(i, x, y, ConjugatePair::from_q(q).unwrap()).unwrap();
            prop_assert!(pm <= h + 1e-12);
        }

        #[test]
        fn powermean_at_one_is_q1_bitwise(a in -5.0f64..5.0, w in 1e-3f64..5.0, x in 0.0f64..100.0, y in 0.0f64..100.0) {
            let i = iv(a, a + w);
            prop_assert_eq!(
                bound_convex_powermean(i, x, y, 1.0).unwrap().to_bits(),
                bound_convex_q1(i, x, y).unwrap().to_bits()
            );
        }

        #[test]
        fn power_mean_nondecreasing_in_q(x in 0.0f64..100.0, y in 0.0f64..100.0, q in 1.0f64..20.0, dq in 0.0f64..5.0) {
            let lo = power_mean(x, y, q);
            let hi = power_mean(x, y, q + dq);
            prop_assert!(hi >= lo * (1.0 - 1e-14));
        }
    }
}
