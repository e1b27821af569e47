//! Midpoint-gap bounds for functions whose `|f''|` (or `|f''|^q`) is quasi-convex.
//!
//! `sup{x^q, y^q}^{1/q}` is `max(x, y)` for nonnegative arguments, so every
//! formula here is evaluated through the maximum directly.

use crate::convex::{check_magnitudes, holder_constant, EndpointValues};
use crate::error::{domain, Error, Result};
use crate::exponent::ConjugatePair;
use crate::function::TestFunction;
use crate::interval::Interval;
use crate::oracle::Monotone;

/// `(b−a)²/24 · max(|f''(a)|, |f''(b)|)`.
pub fn bound_quasi_q1(iv: Interval, d2a: f64, d2b: f64) -> Result<f64> {
    check_magnitudes(d2a, d2b)?;
    Ok(iv.width() * iv.width() / 24.0 * d2a.max(d2b))
}

/// Monotone special case: the bound only needs `|f''|` at the larger end.
///
/// The direction is checked against the endpoint values, which is all the
/// formula consumes; interior monotonicity is left to
/// [`crate::oracle::check_monotone_abs_d2`].
pub fn bound_quasi_monotone(iv: Interval, func: &TestFunction, direction: Monotone) -> Result<f64> {
    func.check_interval(&iv)?;
    let e = EndpointValues::second(func, iv);
    let value = match direction {
        Monotone::Increasing if e.at_a <= e.at_b => e.at_b,
        Monotone::Decreasing if e.at_a >= e.at_b => e.at_a,
        _ => {
            return Err(Error::Hypothesis(format!(
                "|f''| of {} is not {:?} between the endpoints of {iv} ({} vs {})",
                func.id(),
                direction,
                e.at_a,
                e.at_b
            )))
        }
    };
    check_magnitudes(value, value)?;
    Ok(iv.width() * iv.width() / 24.0 * value)
}

/// `(b−a)²/(8(2p+1)^{1/p}) · max(|f''(a)|, |f''(b)|)`.
pub fn bound_quasi_holder(iv: Interval, d2a: f64, d2b: f64, pq: ConjugatePair) -> Result<f64> {
    check_magnitudes(d2a, d2b)?;
    Ok(iv.width() * iv.width() * holder_constant(pq.p()) * d2a.max(d2b))
}

/// `(b−a)²/24 · sup{|f''(a)|^q, |f''(b)|^q}^{1/q}`, which does not depend on `q`.
pub fn bound_quasi_powermean(iv: Interval, d2a: f64, d2b: f64, q: f64) -> Result<f64> {
    if !q.is_finite() || q < 1.0 {
        return Err(domain(format!("q must be finite and >= 1, got {q}")));
    }
    bound_quasi_q1(iv, d2a, d2b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{bound_convex_q1, holder_constant};
    use crate::function::find;
    use proptest::prelude::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn q1_examples() {
        assert!((bound_quasi_q1(iv(1.0, 2.0), 2.0, 0.25).unwrap() - 1.0 / 12.0).abs() < 1e-16);
        assert!((bound_quasi_q1(iv(0.0, 1.0), 5.0, 5.0).unwrap() - 5.0 / 24.0).abs() < 1e-16);
        assert_eq!(bound_quasi_q1(iv(0.0, 1.0), 0.0, 0.0).unwrap(), 0.0);
        assert!(bound_quasi_q1(iv(0.0, 1.0), 0.0, -1.0).is_err());
    }

    #[test]
    fn monotone_examples() {
        let v = bound_quasi_monotone(iv(0.0, 1.0), &find("x^3").unwrap(), Monotone::Increasing)
            .unwrap();
        assert_eq!(v, 0.25);
        let v = bound_quasi_monotone(iv(1.0, 2.0), &find("1/x").unwrap(), Monotone::Decreasing)
            .unwrap();
        assert!((v - 1.0 / 12.0).abs() < 1e-16);
        let sq = find("x^2").unwrap();
        for dir in [Monotone::Increasing, Monotone::Decreasing] {
            let v = bound_quasi_monotone(iv(-1.0, 2.0), &sq, dir).unwrap();
            assert_eq!(v, 9.0 * 2.0 / 24.0);
        }
    }

    #[test]
    fn monotone_direction_contradiction() {
        let r = bound_quasi_monotone(iv(1.0, 2.0), &find("1/x").unwrap(), Monotone::Increasing);
        assert!(matches!(r, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn holder_examples() {
        let pq = ConjugatePair::from_p(2.0).unwrap();
        let v = bound_quasi_holder(iv(1.0, 2.0), 2.0, 0.25, pq).unwrap();
        assert!((v - 0.111_803_398_874_989_48).abs() < 1e-15);
        let v = bound_quasi_holder(iv(0.0, 1.0), 0.0, 12.0, pq).unwrap();
        assert!((v - 0.670_820_393_249_936_9).abs() < 1e-14);
        assert_eq!(bound_quasi_holder(iv(0.0, 1.0), 0.0, 0.0, pq).unwrap(), 0.0);
    }

    #[test]
    fn powermean_examples() {
        let i = iv(1.0, 2.0);
        assert!((bound_quasi_powermean(i, 2.0, 0.25, 2.0).unwrap() - 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(
            bound_quasi_powermean(i, 2.0, 0.25, 1.0).unwrap(),
            bound_quasi_q1(i, 2.0, 0.25).unwrap()
        );
        assert_eq!(
            bound_quasi_powermean(iv(0.0, 1.0), 6.0, 6.0, 5.0).unwrap(),
            0.25
        );
        assert!(bound_quasi_powermean(i, 2.0, 0.25, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn powermean_is_independent_of_q(x in 0.0f64..1e3, y in 0.0f64..1e3, q in 1.0f64..20.0) {
            let i = iv(0.0, 1.5);
            let at_one = bound_quasi_powermean(i, x, y, 1.0).unwrap();
            prop_assert!((bound_quasi_powermean(i, x, y, q).unwrap() - at_one).abs() <= 1e-12);
        }

        #[test]
        fn powermean_below_holder(x in 0.0f64..1e3, y in 0.0f64..1e3, p in 1.0001f64..60.0) {
            let i = iv(0.0, 1.0);
            let pq = ConjugatePair::from_p(p).unwrap();
            let pm = bound_quasi_powermean(i, x, y, pq.q()).unwrap();
            prop_assert!(pm <= bound_quasi_holder(i, x, y, pq).unwrap());
            prop_assert!(1.0 / 24.0 < holder_constant(p));
        }

        #[test]
        fn quasi_dominates_convex_q1(x in 0.0f64..1e3, y in 0.0f64..1e3) {
            let i = iv(-1.0, 1.0);
            prop_assert!(bound_quasi_q1(i, x, y).unwrap() >= bound_convex_q1(i, x, y).unwrap());
        }
    }
}
